#include <doctest.h>

#include "hypersub/experiment.hpp"
#include "hypersub/parallel.hpp"

using namespace hypersub;

namespace {

CoverageOptions small_options() {
  CoverageOptions o;
  o.model = GeneratorModel::power_law(2.0, 200, 1);
  o.spec = StatisticSpec::colored(builtin_pattern(Builtin::twostar2));
  o.m = 120;
  o.C_grid = {1.0, 2.0};
  o.reps = 6;
  o.subsamples = 50;
  o.seed = 10;
  return o;
}

}  // namespace

TEST_CASE("calibration is deterministic and records provenance") {
  auto model = GeneratorModel::power_law(2.0, 200, 5);
  auto spec = StatisticSpec::colored(builtin_pattern(Builtin::twostar2));
  auto a = calibrate_truth(model, spec, 2000, 5000);
  auto b = calibrate_truth(model, spec, 2000, 5000);
  CHECK(a.value == b.value);
  CHECK(a.calibration_m == 2000);
  CHECK(a.tuples == 5000);
  CHECK(a.seed == 5);
  CHECK(a.value > 0.0);
}

TEST_CASE("a single replication covers or not") {
  auto o = small_options();
  o.reps = 1;
  ModelTruth truth{1.0, "x", 0, 0, 0};
  auto table = run_coverage_experiment(o, truth);
  REQUIRE(table.cells.size() == 2);
  for (const auto& c : table.cells) CHECK((c.coverage == 0.0 || c.coverage == 1.0));
}

TEST_CASE("coverage tables are thread invariant") {
  auto o = small_options();
  auto truth = calibrate_truth(o.model, o.spec, 2000, 5000);
  set_num_threads(1);
  auto a = run_coverage_experiment(o, truth);
  set_num_threads(3);
  auto b = run_coverage_experiment(o, truth);
  set_num_threads(0);
  CHECK(coverage_csv(a) == coverage_csv(b));
  for (std::size_t i = 0; i < a.cells.size(); ++i) CHECK(a.cells[i].mean_lambda == b.cells[i].mean_lambda);
  CHECK(coverage_csv(a).rfind("m,C,coverage,reps,seed\n", 0) == 0);
}

TEST_CASE("subsample smaller than the order is rejected") {
  auto o = small_options();
  o.spec = StatisticSpec::colored(builtin_pattern(Builtin::triangle3));
  o.m = 3;
  o.C_grid = {0.5};
  CHECK_THROWS_AS(run_coverage_experiment(o, ModelTruth{}), std::invalid_argument);
  o.reps = 0;
  CHECK_THROWS(run_coverage_experiment(o, ModelTruth{}));
}
