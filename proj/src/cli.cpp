#include "hypersub/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <boost/rational.hpp>
#include <json.hpp>

#include "hypersub/counting.hpp"
#include "hypersub/experiment.hpp"
#include "hypersub/generators.hpp"
#include "hypersub/hypergraph.hpp"
#include "hypersub/inference.hpp"
#include "hypersub/parallel.hpp"
#include "hypersub/random.hpp"
#include "hypersub/stability.hpp"

namespace hypersub {
namespace {

using nlohmann::json;
using Rational = boost::rational<long long>;

struct StatisticFlags {
  std::string pattern = "twostar2";
  std::string statistic;
  int r = 0;
  std::optional<std::uint32_t> filter_d;
  std::optional<std::size_t> unique_k;
};

void add_statistic_flags(CLI::App* cmd, StatisticFlags& f) {
  cmd->add_option("--pattern", f.pattern, "Pattern name")
      ->check(CLI::IsMember({"triangle1", "triangle2", "triangle3", "twostar1", "twostar2", "triangle", "twostar"}));
  cmd->add_option("--statistic", f.statistic, "Statistic kind (default inferred from the other flags)")
      ->check(CLI::IsMember({"colored", "colorless", "filtered", "total", "unique", "binarized", "twostar-density",
                             "clustering-type2", "clustering-binarized"}));
  cmd->add_option("--r", f.r, "Tuple order of a colorless frequency");
  cmd->add_option("--filter-d", f.filter_d, "Hyperdegree threshold");
  cmd->add_option("--unique-k", f.unique_k, "Cardinality for the unique-k count");
}

StatisticSpec resolve_statistic(const StatisticFlags& f) {
  std::string kind = f.statistic;
  if (kind.empty()) {
    if (f.unique_k) kind = "unique";
    else if (f.filter_d) kind = "filtered";
    else if (f.r > 0 || f.pattern == "triangle" || f.pattern == "twostar") kind = "colorless";
    else kind = "colored";
  }
  auto pattern = pattern_by_name(f.pattern);
  if (kind == "colored") {
    if (f.pattern == "triangle" || f.pattern == "twostar")
      throw std::invalid_argument("colored frequencies need a colored pattern (triangle1..3, twostar1..2)");
    return StatisticSpec::colored(pattern);
  }
  if (kind == "colorless") return StatisticSpec::colorless(pattern.colorless(), f.r > 0 ? f.r : pattern.e());
  if (kind == "filtered") return StatisticSpec::degree_filtered(pattern, f.filter_d.value_or(0));
  if (kind == "total") return StatisticSpec::total(pattern.colorless());
  if (kind == "unique") {
    if (!f.unique_k) throw std::invalid_argument("--unique-k is required for the unique statistic");
    return StatisticSpec::unique(*f.unique_k);
  }
  if (kind == "binarized") return StatisticSpec::binarized(pattern.colorless());
  if (kind == "twostar-density") return StatisticSpec::of(StatisticKind::binarized_twostar_density);
  if (kind == "clustering-type2") return StatisticSpec::of(StatisticKind::clustering_type2);
  return StatisticSpec::of(StatisticKind::clustering_binarized);
}

Design resolve_design(const std::string& incomplete, std::size_t m, std::uint64_t seed) {
  if (incomplete.empty()) return Complete{};
  if (incomplete == "auto") return Incomplete{default_tuple_count(m), seed};
  std::size_t pos = 0;
  const unsigned long long n = std::stoull(incomplete, &pos);
  if (pos != incomplete.size() || n == 0) throw std::invalid_argument("--incomplete expects a positive count or 'auto'");
  return Incomplete{n, seed};
}

json design_json(const Design& design) {
  if (std::holds_alternative<Complete>(design)) return {{"type", "complete"}};
  const auto& inc = std::get<Incomplete>(design);
  return {{"type", "incomplete"}, {"tuples", inc.tuples}, {"seed", inc.seed}};
}

json config_json(const SubsampleConfig& c) {
  return {{"b", c.b}, {"N_sub", c.subsamples}, {"C", c.C}, {"seed", c.seed}};
}

json ci_json(const ConfidenceInterval& ci) { return json::array({ci.lo, ci.hi}); }

void emit(const json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

void export_ids(const HypergraphSample& sample, const std::string& path) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write_id_map(file, sample);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos)
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(text));
  const std::string frac = text.substr(dot + 1);
  if (frac.size() > 15) throw std::invalid_argument("too many decimal places in " + text);
  long long scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const std::string whole = text.substr(0, dot);
  const bool negative = !whole.empty() && whole[0] == '-';
  const long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
  const long long f = frac.empty() ? 0 : std::stoll(frac);
  return Rational(w * scale + (negative ? -f : f), scale);
}

std::string rational_text(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

json stability_json(const PatternStats& stats, const Rational& alpha, Decay decay) {
  auto report = beta_exponent(stats, alpha, decay);
  json terms = json::array();
  for (const auto& t : report.terms) {
    json term{{"label", t.label}};
    if (t.value) {
      term["value"] = to_double(*t.value);
      term["exact"] = rational_text(*t.value);
    } else {
      term["value"] = nullptr;
      term["exact"] = "unbounded";
    }
    terms.push_back(term);
  }
  json doc{{"structure", {{"v", stats.v}, {"e", stats.e}, {"min_degree", stats.min_degree}, {"N", stats.nk}}},
           {"terms", terms}};
  if (report.beta) {
    doc["beta"] = to_double(*report.beta);
    doc["beta_exact"] = rational_text(*report.beta);
    doc["safe_d_exponent"] = to_double(*report.safe_d_exponent());
    doc["safe_d_exponent_exact"] = rational_text(*report.safe_d_exponent());
  } else {
    doc["beta"] = nullptr;
    doc["safe_d_exponent"] = nullptr;
  }
  return doc;
}

struct Network {
  std::string path;
  std::size_t m_total = 0;
  std::size_t m_selection = 0;
  std::vector<HyperedgeView> inference;
  HypergraphSample sample;
};

// Holds out round(split * m) hyperedges chosen uniformly at random; the rest
// is used for inference.
Network load_network(const std::string& path, double split, std::uint64_t split_seed) {
  Network net;
  net.path = path;
  net.sample = read_hyperedge_file(path);
  net.m_total = net.sample.size();
  auto all = net.sample.views();
  if (split <= 0.0) {
    net.inference = std::move(all);
    return net;
  }
  if (split >= 1.0) throw std::invalid_argument("--split must be in [0, 1)");
  const auto held = static_cast<std::size_t>(std::llround(split * static_cast<double>(net.m_total)));
  Rng rng(split_seed);
  auto selection = sample_without_replacement(rng, net.m_total, held);
  std::vector<char> chosen(net.m_total, 0);
  for (auto i : selection) chosen[i] = 1;
  for (std::size_t i = 0; i < net.m_total; ++i)
    if (!chosen[i]) net.inference.push_back(all[i]);
  net.m_selection = held;
  return net;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
  if (grid.empty()) throw std::invalid_argument("empty --C-grid");
  return grid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgraph statistics for exchangeable hyperedge samples", "hypersub"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  std::string json_path;
  std::uint64_t seed = 0;
  double level = 0.95;
  double subsample_C = 1.5;
  std::size_t subsamples = 1000;
  std::string incomplete;
  std::string export_ids_path;
  StatisticFlags stat;

  auto* count = app.add_subcommand("count", "Evaluate a statistic on a hyperedge file");
  std::string input;
  count->add_option("file", input, "Hyperedge list")->required();
  add_statistic_flags(count, stat);
  count->add_option("--incomplete", incomplete, "Incomplete design with N tuples, or 'auto' for ceil(m^1.1)");
  count->add_option("--seed", seed);
  count->add_option("--json", json_path, "Write JSON here instead of stdout");
  count->add_option("--export-ids", export_ids_path, "Write the vertex id map");

  auto* infer_cmd = app.add_subcommand("infer", "Statistic with a subsampling confidence interval");
  double subsample_exponent = 1.1;
  infer_cmd->add_option("file", input, "Hyperedge list")->required();
  add_statistic_flags(infer_cmd, stat);
  infer_cmd->add_option("--incomplete", incomplete, "Point-estimate design: N tuples or 'auto'");
  infer_cmd->add_option("--seed", seed);
  infer_cmd->add_option("--level", level)->check(CLI::Range(0.0, 1.0));
  infer_cmd->add_option("--subsample-C", subsample_C);
  infer_cmd->add_option("--subsamples", subsamples);
  infer_cmd->add_option("--subsample-exponent", subsample_exponent, "Subsample designs use ceil(b^x) tuples");
  infer_cmd->add_option("--json", json_path);
  infer_cmd->add_option("--export-ids", export_ids_path);

  auto* compare = app.add_subcommand("compare", "Ratio confidence intervals between two networks");
  std::vector<std::string> files;
  double split = 0.0;
  std::uint64_t split_seed = 0;
  double compare_exponent = 1.5;
  compare->add_option("files", files, "Two hyperedge lists")->required()->expected(2);
  compare->add_option("--split", split, "Fraction held out for statistic selection");
  compare->add_option("--split-seed", split_seed);
  compare->add_option("--seed", seed);
  compare->add_option("--level", level)->check(CLI::Range(0.0, 1.0));
  compare->add_option("--subsample-C", subsample_C);
  compare->add_option("--subsamples", subsamples);
  compare->add_option("--subsample-exponent", compare_exponent);
  compare->add_option("--incomplete", incomplete, "Point-estimate design: N tuples or 'auto'");
  compare->add_option("--json", json_path);

  auto* simulate = app.add_subcommand("simulate", "Emit a synthetic hyperedge sample");
  std::string model_path;
  double alpha = 2.0;
  std::size_t n_vertices = 1000;
  std::size_t m = 1000;
  std::string out_path;
  simulate->add_option("--model", model_path, "Model JSON file");
  simulate->add_option("--alpha", alpha, "Power-law exponent (0 = uniform weights)");
  simulate->add_option("--n-vertices", n_vertices);
  simulate->add_option("--m", m)->required();
  simulate->add_option("--seed", seed);
  simulate->add_option("--out", out_path, "Output file (default stdout)");

  auto* coverage = app.add_subcommand("coverage", "Monte Carlo coverage of subsampling intervals");
  std::string grid_text = "1.0,1.4,2.0";
  std::size_t reps = 200;
  std::size_t calibration_m = 1000000;
  std::uint64_t calibration_tuples = 2000000;
  std::string csv_path;
  coverage->add_option("--model", model_path);
  coverage->add_option("--alpha", alpha);
  coverage->add_option("--n-vertices", n_vertices);
  coverage->add_option("--m", m);
  coverage->add_option("--C-grid", grid_text, "Comma separated multipliers");
  coverage->add_option("--reps", reps);
  coverage->add_option("--level", level)->check(CLI::Range(0.0, 1.0));
  coverage->add_option("--subsamples", subsamples);
  coverage->add_option("--calibration-m", calibration_m);
  coverage->add_option("--calibration-tuples", calibration_tuples);
  coverage->add_option("--seed", seed);
  coverage->add_option("--csv", csv_path);
  coverage->add_option("--json", json_path);
  add_statistic_flags(coverage, stat);

  auto* stability = app.add_subcommand("stability", "Deletion-stability exponents");
  std::string alpha_text = "4";
  std::string decay_text = "polynomial";
  std::optional<int> min_degree_override, n1_override;
  stability->add_option("--pattern", stat.pattern)
      ->check(CLI::IsMember({"triangle1", "triangle2", "triangle3", "twostar1", "twostar2", "triangle", "twostar"}));
  stability->add_option("--alpha", alpha_text, "Decay parameter (decimal or p/q)");
  stability->add_option("--decay", decay_text)->check(CLI::IsMember({"polynomial", "exponential"}));
  stability->add_option("--min-degree", min_degree_override, "Override the minimum degree");
  stability->add_option("--n1", n1_override, "Override N_1");
  stability->add_option("--json", json_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    set_num_threads(threads);
    if (count->parsed()) {
      auto sample = read_hyperedge_file(input);
      export_ids(sample, export_ids_path);
      auto spec = resolve_statistic(stat);
      auto views = sample.views();
      EdgeList edges(views);
      auto design = resolve_design(incomplete, sample.size(), seed);
      json doc{{"statistic", spec.name()}, {"pattern", spec.pattern_name()}, {"m", sample.size()}};
      if (spec.kind == StatisticKind::colored || spec.kind == StatisticKind::colorless ||
          spec.kind == StatisticKind::degree_filtered) {
        Estimate est = spec.kind == StatisticKind::colored ? estimate_colored(edges, *spec.pattern, design)
                       : spec.kind == StatisticKind::colorless
                           ? estimate_colorless(edges, *spec.pattern, spec.r, design)
                           : estimate_degree_filtered(edges, *spec.pattern, spec.filter_d, design);
        doc["estimate"] = est.value;
        doc["numerator"] = est.numerator;
        doc["denominator"] = est.denominator;
        doc["order"] = est.order;
        if (est.filter_d) doc["filter_d"] = *est.filter_d;
        doc["design"] = design_json(design);
      } else {
        doc["estimate"] = evaluate_statistic(spec, edges, design);
        if (spec.kind == StatisticKind::clustering_type2) doc["design"] = design_json(design);
        if (spec.kind == StatisticKind::unique_k) doc["k"] = spec.unique_k;
      }
      emit(doc, json_path, out);
      return 0;
    }

    if (infer_cmd->parsed()) {
      auto sample = read_hyperedge_file(input);
      export_ids(sample, export_ids_path);
      auto spec = resolve_statistic(stat);
      auto views = sample.views();
      EdgeList edges(views);
      auto point_design = resolve_design(incomplete, sample.size(), derive_seed(seed, 1));
      auto config = SubsampleConfig::from_multiplier(sample.size(), subsample_C, std::max(spec.order(), 1), subsamples,
                                                     derive_seed(seed, 2), DesignRule{false, subsample_exponent});
      auto result = infer(edges, spec, point_design, config, level);
      json doc{{"statistic", spec.name()},
               {"pattern", spec.pattern_name()},
               {"m", result.m},
               {"estimate", result.estimate},
               {"lambda_hat", result.lambda_hat},
               {"ci", ci_json(result.ci)},
               {"level", level},
               {"config", config_json(config)}};
      emit(doc, json_path, out);
      return 0;
    }

    if (compare->parsed()) {
      const std::vector<std::pair<std::string, StatisticSpec>> specs{
          {"twostar2_frequency", StatisticSpec::colored(builtin_pattern(Builtin::twostar2))},
          {"type2_clustering_coefficient", StatisticSpec::of(StatisticKind::clustering_type2)},
          {"binarized_twostar_density", StatisticSpec::of(StatisticKind::binarized_twostar_density)},
          {"binarized_clustering_coefficient", StatisticSpec::of(StatisticKind::clustering_binarized)}};
      std::vector<StatisticSpec> only_specs;
      for (const auto& s : specs) only_specs.push_back(s.second);

      json networks = json::array();
      std::vector<std::vector<PointVariance>> pv(2);
      for (std::size_t k = 0; k < 2; ++k) {
        auto net = load_network(files[k], split, derive_seed(split_seed, k));
        EdgeList edges(net.inference);
        const std::size_t mi = edges.size();
        const std::uint64_t net_seed = derive_seed(seed, k);
        auto point_design = resolve_design(incomplete, mi, derive_seed(net_seed, 1));
        auto config = SubsampleConfig::from_multiplier(mi, subsample_C, 2, subsamples, derive_seed(net_seed, 2),
                                                       DesignRule{false, compare_exponent});
        auto cov = subsample_covariance(edges, only_specs, config);
        json stats = json::object();
        for (std::size_t s = 0; s < specs.size(); ++s) {
          const double point = evaluate_statistic(specs[s].second, edges, point_design);
          const double lambda = cov.matrix(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
          pv[k].push_back({point, lambda / static_cast<double>(mi)});
          stats[specs[s].first] = {{"estimate", point}, {"lambda_hat", lambda}};
        }
        networks.push_back({{"file", net.path},
                            {"m", net.m_total},
                            {"m_selection", net.m_selection},
                            {"m_inference", mi},
                            {"statistics", stats},
                            {"config", config_json(config)}});
      }
      json ratios = json::array();
      for (std::size_t s = 0; s < specs.size(); ++s) {
        json row{{"statistic", specs[s].first}};
        try {
          auto ci = ratio_ci(pv[0][s], pv[1][s], 0.0, level);
          row["ratio"] = ci.point;
          row["se"] = ci.se;
          row["ci"] = ci_json(ci);
        } catch (const UndefinedRatio& e) {
          row["ratio"] = nullptr;
          row["error"] = e.what();
        }
        ratios.push_back(row);
      }
      json doc{{"networks", networks}, {"ratios", ratios}, {"level", level}, {"split", split},
               {"split_seed", split_seed}, {"seed", seed}};
      emit(doc, json_path, out);
      return 0;
    }

    auto build_model = [&] {
      GeneratorModel model;
      if (!model_path.empty()) {
        std::ifstream file(model_path);
        if (!file) throw std::runtime_error("cannot read " + model_path);
        model = model_from_json(json::parse(file));
      } else {
        model = alpha == 0.0 ? GeneratorModel::uniform(n_vertices, 0)
                             : GeneratorModel::power_law(alpha, n_vertices, 0);
        model.seed = seed;
      }
      return model;
    };

    if (simulate->parsed()) {
      auto model = build_model();
      auto sample = generate(model, m);
      if (out_path.empty()) {
        write_hyperedge_list(out, sample);
      } else {
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        write_hyperedge_list(file, sample);
      }
      return 0;
    }

    if (coverage->parsed()) {
      CoverageOptions options;
      options.model = build_model();
      options.spec = resolve_statistic(stat);
      options.m = m;
      options.C_grid = parse_grid(grid_text);
      options.reps = reps;
      options.level = level;
      options.seed = derive_seed(options.model.seed, 0x636f76ULL);
      options.subsamples = subsamples;
      auto truth = calibrate_truth(options.model, options.spec, calibration_m, calibration_tuples);
      auto table = run_coverage_experiment(options, truth);
      json cells = json::array();
      for (const auto& c : table.cells)
        cells.push_back({{"m", c.m},
                         {"C", c.C},
                         {"b", c.b},
                         {"coverage", c.coverage},
                         {"covered", c.covered},
                         {"reps", c.reps},
                         {"mean_lambda_hat", c.mean_lambda},
                         {"mc_variance", c.mc_variance},
                         {"seed", c.seed}});
      json doc{{"statistic", options.spec.name()},
               {"pattern", options.spec.pattern_name()},
               {"model", model_to_json(options.model)},
               {"truth",
                {{"value", truth.value}, {"calibration_m", truth.calibration_m}, {"tuples", truth.tuples},
                 {"seed", truth.seed}}},
               {"level", level},
               {"cells", cells}};
      if (!csv_path.empty()) {
        std::ofstream file(csv_path);
        if (!file) throw std::runtime_error("cannot write " + csv_path);
        file << coverage_csv(table);
      }
      emit(doc, json_path, out);
      return 0;
    }

    if (stability->parsed()) {
      const auto pattern = pattern_by_name(stat.pattern);
      const Rational a = parse_rational(alpha_text);
      const Decay decay = decay_text == "polynomial" ? Decay::polynomial : Decay::exponential;
      const PatternStats literal = structure_stats(pattern);
      json doc = stability_json(literal, a, decay);
      doc["pattern"] = stat.pattern;
      doc["alpha"] = to_double(a);
      doc["decay"] = decay_text;
      StructureOverrides o{min_degree_override, n1_override};
      if (o.any()) {
        json ov = stability_json(apply_overrides(literal, o), a, decay);
        ov["label"] = "override";
        doc["override"] = ov;
      }
      const bool triangle = pattern.v() == 3 && pattern.e() == 3;
      if (triangle && (pattern.r() == 2 || pattern.r() == 3)) {
        const Rational gamma = triangle_exponent(pattern.r(), a, decay);
        doc["triangle_threshold"] = {{"type", pattern.r()}, {"exponent", to_double(gamma)},
                                     {"exact", rational_text(gamma)}};
      }
      emit(doc, json_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hypersub
