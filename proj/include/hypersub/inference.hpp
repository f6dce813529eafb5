#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hypersub/counting.hpp"

namespace hypersub {

enum class StatisticKind {
  colored,
  colorless,
  degree_filtered,
  total_copies,
  unique_k,
  binarized_count,
  binarized_twostar_density,
  clustering_type2,
  clustering_binarized,
};

/// A real-valued function of an ordered collection of hyperedges.
struct StatisticSpec {
  StatisticKind kind = StatisticKind::colored;
  std::optional<ColoredPattern> pattern;
  /// Tuple order of a colorless frequency.
  int r = 0;
  std::uint32_t filter_d = 0;
  std::size_t unique_k = 0;

  static StatisticSpec colored(ColoredPattern p);
  static StatisticSpec colorless(ColoredPattern p, int r);
  static StatisticSpec degree_filtered(ColoredPattern p, std::uint32_t d);
  static StatisticSpec total(ColoredPattern p);
  static StatisticSpec unique(std::size_t k);
  static StatisticSpec binarized(ColoredPattern p);
  static StatisticSpec of(StatisticKind kind);

  /// Hyperedges needed per tuple; 0 for statistics that are not U-statistics.
  int order() const;
  std::string name() const;
  std::string pattern_name() const;
};

/// How U-statistics are evaluated on a sample of size n: all C(n, r) tuples,
/// or ceil(n^exponent) tuples drawn with a caller-provided seed.
struct DesignRule {
  bool complete = false;
  double exponent = 1.1;

  Design resolve(std::size_t n, std::uint64_t seed) const;
};

double evaluate_statistic(const StatisticSpec& spec, EdgeList edges, const Design& design);

struct SubsampleConfig {
  /// Subsample size.
  std::size_t b = 0;
  std::size_t subsamples = 1000;
  /// Multiplier the size was derived from (b = C m / log m); informational.
  double C = 1.5;
  std::uint64_t seed = 0;
  DesignRule design;

  /// b = max(min_size, floor(C m / log m)), capped at m.
  static SubsampleConfig from_multiplier(std::size_t m, double C, std::size_t min_size, std::size_t subsamples,
                                         std::uint64_t seed, DesignRule design = {});
};

/// Subsampling estimate of the asymptotic covariance of sqrt(m) * statistics.
struct CovarianceEstimate {
  Eigen::MatrixXd matrix;
  std::vector<std::string> statistics;
  SubsampleConfig config;
  /// subsamples x p matrix of the statistic values on each subsample.
  Eigen::MatrixXd values;
};

/// (b / N) * sum_j (S_j - mean)(S_j - mean)^T over the rows of `values`.
/// The result is exactly symmetric.
Eigen::MatrixXd subsample_covariance_from_values(const Eigen::MatrixXd& values, std::size_t b);

/// Draws `config.subsamples` index sets of size b (distinct within a set,
/// sets independent), evaluates every statistic on each, and rescales the
/// empirical covariance by b. Subsample j uses seeds derived from
/// (config.seed, j) only, so the result does not depend on thread count.
CovarianceEstimate subsample_covariance(EdgeList edges, const std::vector<StatisticSpec>& specs,
                                        const SubsampleConfig& config);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
  double level = 0.95;
  double point = 0.0;
  double se = 0.0;
};

/// Standard normal quantile (Acklam's rational approximation; relative error
/// below 1.2e-9 over (0, 1)).
double normal_quantile(double p);

/// point +- z_{(1+level)/2} sqrt(lambda_hat / m).
ConfidenceInterval normal_ci(double point, double lambda_hat, std::size_t m, double level);

struct PointVariance {
  double point = 0.0;
  /// Variance of the point estimate itself (not of its sqrt(m)-scaled form).
  double var = 0.0;
};

/// Delta-method interval for num/den:
/// var(R) = var(A)/B^2 + A^2 var(B)/B^4 - 2 A cov/B^3.
ConfidenceInterval ratio_ci(const PointVariance& num, const PointVariance& den, double cov, double level);

struct InferenceResult {
  StatisticSpec spec;
  double estimate = 0.0;
  std::size_t m = 0;
  double lambda_hat = 0.0;
  ConfidenceInterval ci;
  SubsampleConfig config;
};

/// Point estimate under `point_design`, variance by subsampling, normal CI.
InferenceResult infer(EdgeList edges, const StatisticSpec& spec, const Design& point_design,
                      const SubsampleConfig& config, double level);

}  // namespace hypersub
