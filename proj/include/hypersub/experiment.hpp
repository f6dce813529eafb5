#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypersub/generators.hpp"
#include "hypersub/inference.hpp"

namespace hypersub {

/// Plug-in value of a model parameter from one large calibration sample.
struct ModelTruth {
  double value = 0.0;
  std::string statistic;
  std::size_t calibration_m = 0;
  std::uint64_t tuples = 0;
  std::uint64_t seed = 0;
};

/// Generates `calibration_m` hyperedges with the model's seed and evaluates
/// the statistic with `tuples` incomplete tuples (0 = complete design).
ModelTruth calibrate_truth(const GeneratorModel& model, const StatisticSpec& spec, std::size_t calibration_m,
                           std::uint64_t tuples);

struct CoverageOptions {
  GeneratorModel model;
  StatisticSpec spec;
  std::size_t m = 500;
  std::vector<double> C_grid{1.0, 1.4, 2.0};
  std::size_t reps = 200;
  double level = 0.95;
  std::uint64_t seed = 0;
  std::size_t subsamples = 1000;
  /// Point estimates use ceil(m^point_exponent) incomplete tuples.
  double point_exponent = 1.1;
  DesignRule subsample_design;
};

struct CoverageCell {
  std::size_t m = 0;
  double C = 0.0;
  std::size_t b = 0;
  std::size_t reps = 0;
  std::size_t covered = 0;
  double coverage = 0.0;
  std::uint64_t seed = 0;
  /// Mean of lambda_hat over replications.
  double mean_lambda = 0.0;
  /// Monte Carlo variance of sqrt(m) * (estimate - truth) over replications.
  double mc_variance = 0.0;
};

struct CoverageTable {
  ModelTruth truth;
  std::vector<CoverageCell> cells;
};

/// For every replication: generate m hyperedges, estimate the statistic,
/// estimate its variance by subsampling for each C, and record whether the
/// normal interval covers the truth. Replications reuse one sample across
/// the C grid.
CoverageTable run_coverage_experiment(const CoverageOptions& options, const ModelTruth& truth);

/// Header `m,C,coverage,reps,seed`.
std::string coverage_csv(const CoverageTable& table);

}  // namespace hypersub
