#include "hypersub/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hypersub {

ColoredPattern::ColoredPattern(int v, std::vector<Edge> edges, std::vector<int> colors, std::string name)
    : v_(v), edges_(std::move(edges)), colors_(std::move(colors)), name_(std::move(name)) {
  if (v_ < 1) throw std::invalid_argument("pattern needs at least one vertex");
  if (colors_.size() != edges_.size()) throw std::invalid_argument("pattern needs one color per edge");
  std::set<Edge> seen;
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= v_ || b >= v_) throw std::invalid_argument("pattern edge endpoint out of range");
    if (a == b) throw std::invalid_argument("pattern edges must join distinct vertices");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw std::invalid_argument("pattern has a repeated edge");
  }
  if (!colors_.empty()) {
    r_ = *std::max_element(colors_.begin(), colors_.end()) + 1;
    std::vector<bool> used(static_cast<std::size_t>(std::max(r_, 0)), false);
    for (int c : colors_) {
      if (c < 0) throw std::invalid_argument("color classes must be non-negative");
      used[static_cast<std::size_t>(c)] = true;
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
      throw std::invalid_argument("color classes must be 0..r-1 with every class used");
  }
}

std::vector<int> ColoredPattern::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(v_), 0);
  for (auto [a, b] : edges_) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

bool ColoredPattern::has_isolated_vertex() const {
  auto deg = degrees();
  return std::find(deg.begin(), deg.end(), 0) != deg.end();
}

ColoredPattern ColoredPattern::colorless() const {
  return ColoredPattern(v_, edges_, std::vector<int>(edges_.size(), 0), name_);
}

ColoredPattern builtin_pattern(Builtin which) {
  const std::vector<ColoredPattern::Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  const std::vector<ColoredPattern::Edge> star{{0, 1}, {0, 2}};
  switch (which) {
    case Builtin::triangle1: return ColoredPattern(3, tri, {0, 0, 0}, "triangle1");
    case Builtin::triangle2: return ColoredPattern(3, tri, {0, 1, 1}, "triangle2");
    case Builtin::triangle3: return ColoredPattern(3, tri, {0, 1, 2}, "triangle3");
    case Builtin::twostar1: return ColoredPattern(3, star, {0, 0}, "twostar1");
    case Builtin::twostar2: return ColoredPattern(3, star, {0, 1}, "twostar2");
  }
  throw std::invalid_argument("unknown builtin pattern");
}

ColoredPattern colorless_triangle() { return ColoredPattern(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, 0}, "triangle"); }
ColoredPattern colorless_twostar() { return ColoredPattern(3, {{0, 1}, {0, 2}}, {0, 0}, "twostar"); }

ColoredPattern pattern_by_name(std::string_view name) {
  if (name == "triangle1") return builtin_pattern(Builtin::triangle1);
  if (name == "triangle2") return builtin_pattern(Builtin::triangle2);
  if (name == "triangle3") return builtin_pattern(Builtin::triangle3);
  if (name == "twostar1") return builtin_pattern(Builtin::twostar1);
  if (name == "twostar2") return builtin_pattern(Builtin::twostar2);
  if (name == "triangle") return colorless_triangle();
  if (name == "twostar") return colorless_twostar();
  throw std::invalid_argument("unknown pattern name: " + std::string(name));
}

namespace {

// Code of the pattern after relabeling vertex i -> perm[i]; classes are
// renumbered by first appearance in sorted edge order.
std::vector<int> relabeled_code(const ColoredPattern& p, const std::vector<int>& perm, bool with_colors) {
  std::vector<std::array<int, 3>> rows;
  rows.reserve(p.edges().size());
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    int a = perm[static_cast<std::size_t>(p.edges()[i].first)];
    int b = perm[static_cast<std::size_t>(p.edges()[i].second)];
    if (a > b) std::swap(a, b);
    rows.push_back({a, b, p.colors()[i]});
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> code{p.v(), p.e()};
  std::vector<int> renumber(static_cast<std::size_t>(p.r()), -1);
  int next = 0;
  for (auto& row : rows) {
    code.push_back(row[0]);
    code.push_back(row[1]);
    if (with_colors) {
      int& c = renumber[static_cast<std::size_t>(row[2])];
      if (c < 0) c = next++;
      code.push_back(c);
    }
  }
  return code;
}

std::vector<int> min_code(const ColoredPattern& p, bool with_colors) {
  std::vector<int> perm(static_cast<std::size_t>(p.v()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    auto code = relabeled_code(p, perm, with_colors);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<int> canonical_form(const ColoredPattern& p) { return min_code(p, true); }
std::vector<int> colorless_canonical_form(const ColoredPattern& p) { return min_code(p, false); }

bool color_isomorphic(const ColoredPattern& a, const ColoredPattern& b) {
  return a.v() == b.v() && a.e() == b.e() && a.r() == b.r() && canonical_form(a) == canonical_form(b);
}

std::uint64_t color_automorphism_count(const ColoredPattern& p) {
  // For each vertex permutation preserving the edge set, the class map is
  // forced; count it when it is a well-defined bijection.
  std::vector<int> perm(static_cast<std::size_t>(p.v()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    std::vector<int> class_map(static_cast<std::size_t>(p.r()), -1);
    bool ok = true;
    for (std::size_t i = 0; i < p.edges().size() && ok; ++i) {
      int a = perm[static_cast<std::size_t>(p.edges()[i].first)];
      int b = perm[static_cast<std::size_t>(p.edges()[i].second)];
      if (a > b) std::swap(a, b);
      auto it = std::find(p.edges().begin(), p.edges().end(), ColoredPattern::Edge{a, b});
      if (it == p.edges().end()) {
        ok = false;
        break;
      }
      int target = p.colors()[static_cast<std::size_t>(it - p.edges().begin())];
      int& mapped = class_map[static_cast<std::size_t>(p.colors()[i])];
      if (mapped < 0) mapped = target;
      else if (mapped != target) ok = false;
    }
    if (ok) {
      std::vector<int> sorted = class_map;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t graph_automorphism_count(const ColoredPattern& p) {
  std::set<ColoredPattern::Edge> edge_set(p.edges().begin(), p.edges().end());
  std::vector<int> perm(static_cast<std::size_t>(p.v()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [a, b] : p.edges()) {
      int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
      if (!edge_set.count({std::min(x, y), std::max(x, y)})) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

PatternStats structure_stats(const ColoredPattern& p) {
  PatternStats s;
  s.v = p.v();
  s.e = p.e();
  s.r = p.r();
  auto deg = p.degrees();
  s.min_degree = *std::min_element(deg.begin(), deg.end());
  s.nk.assign(static_cast<std::size_t>(std::max(p.v() - 1, 0)), 0);
  for (unsigned mask = 1; mask < (1u << p.v()); ++mask) {
    int k = std::popcount(mask);
    if (k >= p.v()) continue;
    int touched = 0;
    for (auto [a, b] : p.edges())
      if ((mask >> a & 1u) || (mask >> b & 1u)) ++touched;
    int& best = s.nk[static_cast<std::size_t>(k - 1)];
    best = std::max(best, touched);
  }
  return s;
}

PatternStats apply_overrides(PatternStats stats, const StructureOverrides& o) {
  if (o.min_degree) stats.min_degree = *o.min_degree;
  if (o.n1) {
    if (stats.nk.empty()) throw std::invalid_argument("N_1 override needs a pattern with at least two vertices");
    stats.nk[0] = *o.n1;
  }
  return stats;
}

ColoredPattern pattern_from_json(const nlohmann::json& j) {
  int v = j.at("v").get<int>();
  std::vector<ColoredPattern::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("pattern edges must be [a,b] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<int> colors = j.contains("colors") ? j.at("colors").get<std::vector<int>>()
                                                 : std::vector<int>(edges.size(), 0);
  return ColoredPattern(v, std::move(edges), std::move(colors), j.value("name", std::string("custom")));
}

nlohmann::json pattern_to_json(const ColoredPattern& p) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : p.edges()) edges.push_back({a, b});
  return {{"v", p.v()}, {"edges", edges}, {"colors", p.colors()}};
}

}  // namespace hypersub
