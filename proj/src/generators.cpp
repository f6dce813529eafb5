#include "hypersub/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hypersub/random.hpp"

namespace hypersub {

double cardinality_pmf(int n) {
  if (n < 2) throw std::invalid_argument("hyperedge cardinality must be at least 2");
  // 6^n / n! computed in log space; the normalizer sum_{k>=2} 6^k/k! = e^6 - 7.
  const double log_term = n * std::log(6.0) - std::lgamma(n + 1.0);
  return std::exp(log_term) / (std::exp(6.0) - 7.0);
}

std::vector<double> GeneratorModel::default_cardinality(std::size_t n_vertices) {
  const int top = std::min<int>(kCardinalityTruncation, static_cast<int>(n_vertices));
  std::vector<double> pmf;
  for (int n = 2; n <= top; ++n) pmf.push_back(cardinality_pmf(n));
  return pmf;
}

GeneratorModel GeneratorModel::power_law(double alpha, std::size_t n, std::uint64_t seed) {
  GeneratorModel model;
  model.cardinality = default_cardinality(n);
  model.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j) model.weights[j] = std::pow(static_cast<double>(j + 1), -alpha);
  model.seed = seed;
  model.alpha = alpha;
  return model;
}

GeneratorModel GeneratorModel::uniform(std::size_t n, std::uint64_t seed) {
  GeneratorModel model;
  model.cardinality = default_cardinality(n);
  model.weights.assign(n, 1.0);
  model.seed = seed;
  return model;
}

GeneratorModel model_from_json(const nlohmann::json& j) {
  const double alpha = j.value("alpha", 2.0);
  const std::size_t n = j.value("n_vertices", std::size_t{1000});
  GeneratorModel model = alpha == 0.0 ? GeneratorModel::uniform(n, 0) : GeneratorModel::power_law(alpha, n, 0);
  model.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("cardinality")) {
    const auto& c = j.at("cardinality");
    if (c.is_string()) {
      if (c.get<std::string>() != "poisson6_trunc2") throw std::invalid_argument("unknown cardinality model");
    } else {
      model.cardinality = c.at("pmf").get<std::vector<double>>();
    }
  }
  return model;
}

nlohmann::json model_to_json(const GeneratorModel& model) {
  return {{"alpha", model.alpha},
          {"n_vertices", model.n_vertices()},
          {"cardinality", {{"pmf", model.cardinality}}},
          {"seed", model.seed}};
}

namespace {

void validate(const GeneratorModel& model) {
  if (model.weights.empty()) throw std::invalid_argument("model needs at least one vertex");
  for (double w : model.weights)
    if (!(w > 0.0)) throw std::invalid_argument("vertex weights must be strictly positive");
  if (model.cardinality.empty()) throw std::invalid_argument("cardinality pmf is empty");
  double total = 0.0;
  for (std::size_t k = 0; k < model.cardinality.size(); ++k) {
    if (model.cardinality[k] < 0.0) throw std::invalid_argument("cardinality pmf must be non-negative");
    if (model.cardinality[k] > 0.0 && k + 2 > model.n_vertices())
      throw std::invalid_argument("cardinality support exceeds the number of vertices");
    total += model.cardinality[k];
  }
  if (!(total > 0.0)) throw std::invalid_argument("cardinality pmf has no mass");
}

std::vector<double> cumulative(const std::vector<double>& w) {
  std::vector<double> c(w.size());
  std::partial_sum(w.begin(), w.end(), c.begin());
  return c;
}

std::size_t draw_index(const std::vector<double>& cum, double u) {
  auto it = std::upper_bound(cum.begin(), cum.end(), u * cum.back());
  return std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
}

}  // namespace

HypergraphSample generate(const GeneratorModel& model, std::size_t m) {
  validate(model);
  const auto size_cum = cumulative(model.cardinality);
  const auto weight_cum = cumulative(model.weights);
  const std::size_t n = model.n_vertices();
  Rng rng(model.seed);
  SampleBuilder builder;
  std::vector<std::uint64_t> edge;
  std::vector<char> taken(n, 0);
  constexpr int kMaxRejections = 64;

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t size = draw_index(size_cum, rng.uniform()) + 2;
    edge.clear();
    while (edge.size() < size) {
      // A draw from the full weights conditioned on landing outside the
      // chosen set is a draw renormalized over the remaining vertices.
      std::size_t pick = n;
      for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        std::size_t j = draw_index(weight_cum, rng.uniform());
        if (!taken[j]) {
          pick = j;
          break;
        }
      }
      if (pick == n) {
        double remaining = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          if (!taken[j]) remaining += model.weights[j];
        double target = rng.uniform() * remaining, acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (taken[j]) continue;
          pick = j;
          acc += model.weights[j];
          if (target < acc) break;
        }
      }
      taken[pick] = 1;
      edge.push_back(pick + 1);
    }
    for (auto j : edge) taken[j - 1] = 0;
    builder.add_edge_keys(edge);
  }
  return std::move(builder).finish();
}

}  // namespace hypersub
