#include "hypersub/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypersub/parallel.hpp"
#include "hypersub/random.hpp"

namespace hypersub {

StatisticSpec StatisticSpec::colored(ColoredPattern p) {
  StatisticSpec s;
  s.kind = StatisticKind::colored;
  s.pattern = std::move(p);
  return s;
}

StatisticSpec StatisticSpec::colorless(ColoredPattern p, int r) {
  StatisticSpec s;
  s.kind = StatisticKind::colorless;
  s.pattern = std::move(p);
  s.r = r;
  return s;
}

StatisticSpec StatisticSpec::degree_filtered(ColoredPattern p, std::uint32_t d) {
  StatisticSpec s;
  s.kind = StatisticKind::degree_filtered;
  s.pattern = std::move(p);
  s.filter_d = d;
  return s;
}

StatisticSpec StatisticSpec::total(ColoredPattern p) {
  StatisticSpec s;
  s.kind = StatisticKind::total_copies;
  s.pattern = std::move(p);
  return s;
}

StatisticSpec StatisticSpec::unique(std::size_t k) {
  StatisticSpec s;
  s.kind = StatisticKind::unique_k;
  s.unique_k = k;
  return s;
}

StatisticSpec StatisticSpec::binarized(ColoredPattern p) {
  StatisticSpec s;
  s.kind = StatisticKind::binarized_count;
  s.pattern = std::move(p);
  return s;
}

StatisticSpec StatisticSpec::of(StatisticKind kind) {
  StatisticSpec s;
  s.kind = kind;
  return s;
}

int StatisticSpec::order() const {
  switch (kind) {
    case StatisticKind::colored:
    case StatisticKind::degree_filtered: return pattern->r();
    case StatisticKind::colorless: return r;
    case StatisticKind::clustering_type2: return 2;
    default: return 0;
  }
}

std::string StatisticSpec::name() const {
  switch (kind) {
    case StatisticKind::colored: return "colored_frequency";
    case StatisticKind::colorless: return "colorless_frequency";
    case StatisticKind::degree_filtered: return "degree_filtered_frequency";
    case StatisticKind::total_copies: return "total_copies";
    case StatisticKind::unique_k: return "unique_k_count";
    case StatisticKind::binarized_count: return "binarized_count";
    case StatisticKind::binarized_twostar_density: return "binarized_twostar_density";
    case StatisticKind::clustering_type2: return "type2_clustering_coefficient";
    case StatisticKind::clustering_binarized: return "binarized_clustering_coefficient";
  }
  return "unknown";
}

std::string StatisticSpec::pattern_name() const {
  if (pattern) return pattern->name().empty() ? "custom" : pattern->name();
  switch (kind) {
    case StatisticKind::unique_k: return "unique_" + std::to_string(unique_k);
    case StatisticKind::binarized_twostar_density: return "twostar";
    case StatisticKind::clustering_type2: return "triangle2/twostar2";
    case StatisticKind::clustering_binarized: return "triangle/twostar";
    default: return "";
  }
}

Design DesignRule::resolve(std::size_t n, std::uint64_t seed) const {
  if (complete) return Complete{};
  return Incomplete{default_tuple_count(n, exponent), seed};
}

double evaluate_statistic(const StatisticSpec& spec, EdgeList edges, const Design& design) {
  switch (spec.kind) {
    case StatisticKind::colored: return estimate_colored(edges, *spec.pattern, design).value;
    case StatisticKind::colorless: return estimate_colorless(edges, *spec.pattern, spec.r, design).value;
    case StatisticKind::degree_filtered:
      return estimate_degree_filtered(edges, *spec.pattern, spec.filter_d, design).value;
    case StatisticKind::total_copies: return static_cast<double>(total_copies(edges, *spec.pattern));
    case StatisticKind::unique_k: return static_cast<double>(unique_k_count(edges, spec.unique_k));
    case StatisticKind::binarized_count: return static_cast<double>(binarized_count(edges, *spec.pattern));
    case StatisticKind::binarized_twostar_density: {
      // fraction of the 3 C(n,3) possible two-stars on the vertices present
      std::vector<bool> present;
      for (const auto& e : edges)
        for (VertexId v : e) {
          if (v >= present.size()) present.resize(v + 1, false);
          present[v] = true;
        }
      const double n = static_cast<double>(std::count(present.begin(), present.end(), true));
      if (n < 3) throw UndefinedRatio("binarized two-star density needs at least three vertices");
      return static_cast<double>(binarized_count(edges, colorless_twostar())) / (n * (n - 1) * (n - 2) / 2.0);
    }
    case StatisticKind::clustering_type2: return clustering_coefficient(edges, ClusteringKind::type2, design);
    case StatisticKind::clustering_binarized: return clustering_coefficient(edges, ClusteringKind::binarized, design);
  }
  throw std::invalid_argument("unknown statistic kind");
}

SubsampleConfig SubsampleConfig::from_multiplier(std::size_t m, double C, std::size_t min_size,
                                                 std::size_t subsamples, std::uint64_t seed, DesignRule design) {
  if (m < 2) throw std::invalid_argument("subsampling needs at least two hyperedges");
  SubsampleConfig config;
  config.C = C;
  auto target = static_cast<std::size_t>(std::floor(C * static_cast<double>(m) / std::log(static_cast<double>(m))));
  config.b = std::min(m, std::max(min_size, target));
  config.subsamples = subsamples;
  config.seed = seed;
  config.design = design;
  return config;
}

Eigen::MatrixXd subsample_covariance_from_values(const Eigen::MatrixXd& values, std::size_t b) {
  const Eigen::Index n = values.rows(), p = values.cols();
  if (n < 2) throw std::invalid_argument("need at least two subsamples");
  const Eigen::RowVectorXd mean = values.colwise().mean();
  const Eigen::MatrixXd centered = values.rowwise() - mean;
  Eigen::MatrixXd cov(p, p);
  const double scale = static_cast<double>(b) / static_cast<double>(n);
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = i; j < p; ++j) cov(i, j) = cov(j, i) = scale * centered.col(i).dot(centered.col(j));
  return cov;
}

CovarianceEstimate subsample_covariance(EdgeList edges, const std::vector<StatisticSpec>& specs,
                                        const SubsampleConfig& config) {
  const std::size_t m = edges.size();
  if (config.b < 1 || config.b > m) throw std::invalid_argument("subsample size must be in 1..m");
  if (config.subsamples < 2) throw std::invalid_argument("need at least two subsamples");
  if (specs.empty()) throw std::invalid_argument("no statistics to subsample");
  for (const auto& s : specs)
    if (static_cast<std::size_t>(s.order()) > config.b)
      throw std::invalid_argument("subsample size is smaller than the order of " + s.name());

  CovarianceEstimate out;
  out.config = config;
  out.values.resize(static_cast<Eigen::Index>(config.subsamples), static_cast<Eigen::Index>(specs.size()));
  for (const auto& s : specs) out.statistics.push_back(s.name());

  parallel_for(config.subsamples, [&](std::size_t begin, std::size_t end) {
    std::vector<HyperedgeView> sub(config.b);
    for (std::size_t j = begin; j < end; ++j) {
      const std::uint64_t stream = derive_seed(config.seed, j);
      Rng rng(stream);
      auto idx = sample_without_replacement(rng, m, config.b);
      for (std::size_t i = 0; i < config.b; ++i) sub[i] = edges[idx[i]];
      const Design design = config.design.resolve(config.b, derive_seed(stream, 1));
      for (std::size_t k = 0; k < specs.size(); ++k)
        out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
            evaluate_statistic(specs[k], EdgeList(sub), design);
    }
  });
  out.matrix = subsample_covariance_from_values(out.values, config.b);
  return out;
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile level must be in (0, 1)");
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                 1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                 6.680131188771972e+01,  -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                 -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                 3.754408661907416e+00};
  constexpr double low = 0.02425, high = 1.0 - low;
  if (p < low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > high) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5, r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

ConfidenceInterval normal_ci(double point, double lambda_hat, std::size_t m, double level) {
  if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must be in (0, 1)");
  if (lambda_hat < 0.0) throw std::invalid_argument("variance estimate must be non-negative");
  if (m == 0) throw std::invalid_argument("sample size must be positive");
  ConfidenceInterval ci;
  ci.level = level;
  ci.point = point;
  ci.se = std::sqrt(lambda_hat / static_cast<double>(m));
  const double half = normal_quantile((1.0 + level) / 2.0) * ci.se;
  ci.lo = point - half;
  ci.hi = point + half;
  return ci;
}

ConfidenceInterval ratio_ci(const PointVariance& num, const PointVariance& den, double cov, double level) {
  if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must be in (0, 1)");
  if (den.point == 0.0) throw UndefinedRatio("ratio denominator is zero");
  if (num.var < 0.0 || den.var < 0.0) throw std::invalid_argument("variances must be non-negative");
  const double a = num.point, b = den.point;
  const double var = num.var / (b * b) + a * a * den.var / (b * b * b * b) - 2.0 * a * cov / (b * b * b);
  ConfidenceInterval ci;
  ci.level = level;
  ci.point = a / b;
  ci.se = std::sqrt(std::max(var, 0.0));
  const double half = normal_quantile((1.0 + level) / 2.0) * ci.se;
  ci.lo = ci.point - half;
  ci.hi = ci.point + half;
  return ci;
}

InferenceResult infer(EdgeList edges, const StatisticSpec& spec, const Design& point_design,
                      const SubsampleConfig& config, double level) {
  InferenceResult result;
  result.spec = spec;
  result.m = edges.size();
  result.config = config;
  result.estimate = evaluate_statistic(spec, edges, point_design);
  auto cov = subsample_covariance(edges, {spec}, config);
  result.lambda_hat = cov.matrix(0, 0);
  result.ci = normal_ci(result.estimate, result.lambda_hat, result.m, level);
  return result;
}

}  // namespace hypersub
