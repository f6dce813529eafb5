#include "hypersub/experiment.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hypersub/parallel.hpp"
#include "hypersub/random.hpp"

namespace hypersub {

ModelTruth calibrate_truth(const GeneratorModel& model, const StatisticSpec& spec, std::size_t calibration_m,
                           std::uint64_t tuples) {
  auto sample = generate(model, calibration_m);
  auto views = sample.views();
  Design design = tuples == 0 ? Design{Complete{}} : Design{Incomplete{tuples, derive_seed(model.seed, 0x7275746855ULL)}};
  ModelTruth truth;
  truth.value = evaluate_statistic(spec, EdgeList(views), design);
  truth.statistic = spec.name() + ":" + spec.pattern_name();
  truth.calibration_m = calibration_m;
  truth.tuples = tuples;
  truth.seed = model.seed;
  return truth;
}

CoverageTable run_coverage_experiment(const CoverageOptions& options, const ModelTruth& truth) {
  if (options.reps < 1) throw std::invalid_argument("coverage needs at least one replication");
  const std::size_t order = static_cast<std::size_t>(std::max(options.spec.order(), 1));
  std::vector<SubsampleConfig> configs;
  for (double C : options.C_grid) {
    auto config = SubsampleConfig::from_multiplier(options.m, C, 0, options.subsamples, 0, options.subsample_design);
    if (config.b < order)
      throw std::invalid_argument("subsample size for C = " + std::to_string(C) + " is below the statistic order");
    configs.push_back(config);
  }

  const std::size_t cells = configs.size();
  std::vector<double> estimates(options.reps);
  std::vector<double> lambdas(options.reps * cells);
  std::vector<char> covered(options.reps * cells);

  parallel_for(options.reps, [&](std::size_t begin, std::size_t end) {
    for (std::size_t rep = begin; rep < end; ++rep) {
      const std::uint64_t rep_seed = derive_seed(options.seed, rep);
      GeneratorModel model = options.model;
      model.seed = derive_seed(rep_seed, 0);
      auto sample = generate(model, options.m);
      auto views = sample.views();
      EdgeList edges(views);
      const Design point_design = Incomplete{default_tuple_count(options.m, options.point_exponent), derive_seed(rep_seed, 1)};
      const double estimate = evaluate_statistic(options.spec, edges, point_design);
      estimates[rep] = estimate;
      for (std::size_t c = 0; c < cells; ++c) {
        SubsampleConfig config = configs[c];
        config.seed = derive_seed(rep_seed, 2 + c);
        auto cov = subsample_covariance(edges, {options.spec}, config);
        auto ci = normal_ci(estimate, cov.matrix(0, 0), options.m, options.level);
        lambdas[rep * cells + c] = cov.matrix(0, 0);
        covered[rep * cells + c] = ci.lo <= truth.value && truth.value <= ci.hi;
      }
    }
  });

  CoverageTable table;
  table.truth = truth;
  double mc = 0.0;
  for (double e : estimates) mc += (e - truth.value) * (e - truth.value);
  mc *= static_cast<double>(options.m) / static_cast<double>(options.reps);
  for (std::size_t c = 0; c < cells; ++c) {
    CoverageCell cell;
    cell.m = options.m;
    cell.C = options.C_grid[c];
    cell.b = configs[c].b;
    cell.reps = options.reps;
    cell.seed = options.seed;
    double lambda_sum = 0.0;
    for (std::size_t rep = 0; rep < options.reps; ++rep) {
      cell.covered += covered[rep * cells + c] ? 1 : 0;
      lambda_sum += lambdas[rep * cells + c];
    }
    cell.coverage = static_cast<double>(cell.covered) / static_cast<double>(options.reps);
    cell.mean_lambda = lambda_sum / static_cast<double>(options.reps);
    cell.mc_variance = mc;
    table.cells.push_back(cell);
  }
  return table;
}

std::string coverage_csv(const CoverageTable& table) {
  std::ostringstream out;
  out << "m,C,coverage,reps,seed\n";
  for (const auto& cell : table.cells)
    out << cell.m << ',' << cell.C << ',' << cell.coverage << ',' << cell.reps << ',' << cell.seed << '\n';
  return out.str();
}

}  // namespace hypersub
