#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypersub/hypergraph.hpp"

namespace hypersub {

/// P(|h| = n) proportional to 6^n / n! on n >= 2; the normalizer is e^6 - 7.
double cardinality_pmf(int n);

/// Largest cardinality kept by the default pmf (remaining mass < 1e-15).
inline constexpr int kCardinalityTruncation = 60;

/// Exchangeable hyperedge model: i.i.d. hyperedges whose size is drawn from
/// `cardinality` and whose vertices are drawn one at a time without
/// replacement, each draw proportional to the weights of the vertices left.
struct GeneratorModel {
  /// cardinality[k] = P(|h| = k + 2); normalized on use.
  std::vector<double> cardinality;
  /// weights[j - 1] = weight of vertex j (labels are 1-based).
  std::vector<double> weights;
  std::uint64_t seed = 0;
  /// Decay exponent the weights were built from; 0 for uniform weights.
  double alpha = 0.0;

  std::size_t n_vertices() const { return weights.size(); }

  /// Default cardinality pmf with w_j = j^-alpha over n vertices.
  static GeneratorModel power_law(double alpha, std::size_t n, std::uint64_t seed);
  static GeneratorModel uniform(std::size_t n, std::uint64_t seed);

  /// The 6^n/n! pmf truncated at min(60, n_vertices).
  static std::vector<double> default_cardinality(std::size_t n_vertices);
};

/// {"alpha": real, "n_vertices": int, "cardinality": "poisson6_trunc2" | {"pmf": [...]},
///  "seed": int}; pmf entries start at cardinality 2. alpha = 0 gives uniform weights.
GeneratorModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const GeneratorModel& model);

/// m i.i.d. hyperedges; deterministic in model.seed.
HypergraphSample generate(const GeneratorModel& model, std::size_t m);

}  // namespace hypersub
