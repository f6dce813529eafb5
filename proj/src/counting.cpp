#include "hypersub/counting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "hypersub/parallel.hpp"
#include "hypersub/random.hpp"

namespace hypersub {

namespace {

constexpr int kMaxPatternVertices = 6;
constexpr int kMaxPatternEdges = 8;
constexpr std::size_t kMaxTupleSize = 32;

void add_checked(std::uint64_t& acc, std::uint64_t x) {
  if (__builtin_add_overflow(acc, x, &acc)) throw std::overflow_error("subgraph count exceeds 64 bits");
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("subgraph count exceeds 64 bits");
  return out;
}

void validate_for_counting(const ColoredPattern& p) {
  if (p.v() > kMaxPatternVertices || p.e() > kMaxPatternEdges)
    throw std::invalid_argument("counting supports patterns with at most 6 vertices and 8 edges");
  if (p.e() == 0) throw std::invalid_argument("counting needs a pattern with at least one edge");
  if (p.has_isolated_vertex()) throw std::invalid_argument("counting does not support isolated pattern vertices");
}

std::string pattern_label(const ColoredPattern& p) { return p.name().empty() ? "custom" : p.name(); }

std::uint64_t intersection_size(HyperedgeView a, HyperedgeView b) {
  std::uint64_t n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::uint64_t triple_intersection_size(HyperedgeView a, HyperedgeView b, HyperedgeView c) {
  std::uint64_t n = 0;
  auto i = a.begin(), j = b.begin(), k = c.begin();
  while (i != a.end() && j != b.end() && k != c.end()) {
    VertexId hi = std::max({*i, *j, *k});
    if (*i == hi && *j == hi && *k == hi) {
      ++n;
      ++i;
      ++j;
      ++k;
      continue;
    }
    if (*i < hi) ++i;
    if (*j < hi) ++j;
    if (*k < hi) ++k;
  }
  return n;
}

constexpr std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Distinct vertices of a tuple with the bitmask of positions containing each.
void tuple_union(EdgeList tuple, std::vector<std::uint32_t>& masks) {
  thread_local std::vector<std::pair<VertexId, std::uint32_t>> buf;
  buf.clear();
  for (std::size_t t = 0; t < tuple.size(); ++t)
    for (VertexId v : tuple[t]) buf.emplace_back(v, 1u << t);
  std::sort(buf.begin(), buf.end());
  masks.clear();
  for (std::size_t i = 0; i < buf.size(); ++i) {
    if (i > 0 && buf[i].first == buf[i - 1].first) masks.back() |= buf[i].second;
    else masks.push_back(buf[i].second);
  }
}

// Visit order in which every vertex after the first of its component has an
// earlier neighbor. back[p] lists (earlier vertex, edge index).
struct VisitOrder {
  std::vector<int> order;
  std::vector<int> position;
  std::vector<std::vector<std::pair<int, int>>> back;
  std::vector<int> anchor;  // earlier neighbor in order, -1 for component roots
};

VisitOrder make_visit_order(const ColoredPattern& p) {
  VisitOrder vo;
  const auto v = static_cast<std::size_t>(p.v());
  vo.position.assign(v, -1);
  auto deg = p.degrees();
  std::vector<std::vector<int>> adj(v);
  for (auto [a, b] : p.edges()) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  while (vo.order.size() < v) {
    int root = -1;
    for (std::size_t i = 0; i < v; ++i)
      if (vo.position[i] < 0 && (root < 0 || deg[i] > deg[static_cast<std::size_t>(root)])) root = static_cast<int>(i);
    std::vector<int> queue{root};
    vo.position[static_cast<std::size_t>(root)] = static_cast<int>(vo.order.size());
    vo.order.push_back(root);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int w : adj[static_cast<std::size_t>(queue[q])])
        if (vo.position[static_cast<std::size_t>(w)] < 0) {
          vo.position[static_cast<std::size_t>(w)] = static_cast<int>(vo.order.size());
          vo.order.push_back(w);
          queue.push_back(w);
        }
  }
  vo.back.resize(v);
  vo.anchor.assign(v, -1);
  for (std::size_t k = 0; k < p.edges().size(); ++k) {
    auto [a, b] = p.edges()[k];
    int pa = vo.position[static_cast<std::size_t>(a)], pb = vo.position[static_cast<std::size_t>(b)];
    int later = pa > pb ? a : b, earlier = pa > pb ? b : a;
    vo.back[static_cast<std::size_t>(later)].emplace_back(earlier, static_cast<int>(k));
  }
  for (std::size_t i = 0; i < v; ++i)
    if (!vo.back[i].empty()) {
      auto best = std::min_element(vo.back[i].begin(), vo.back[i].end(), [&](auto x, auto y) {
        return vo.position[static_cast<std::size_t>(x.first)] < vo.position[static_cast<std::size_t>(y.first)];
      });
      vo.anchor[i] = best->first;
    }
  return vo;
}

enum class ColoredShortcut { none, triangle1, triangle2, triangle3, twostar1, twostar2 };
enum class ColorlessShortcut { none, triangle, twostar };

ColoredShortcut detect_colored(const ColoredPattern& p) {
  static const std::array<std::pair<Builtin, ColoredShortcut>, 5> table{{
      {Builtin::triangle1, ColoredShortcut::triangle1},
      {Builtin::triangle2, ColoredShortcut::triangle2},
      {Builtin::triangle3, ColoredShortcut::triangle3},
      {Builtin::twostar1, ColoredShortcut::twostar1},
      {Builtin::twostar2, ColoredShortcut::twostar2},
  }};
  if (p.v() != 3) return ColoredShortcut::none;
  for (auto [b, s] : table)
    if (color_isomorphic(p, builtin_pattern(b))) return s;
  return ColoredShortcut::none;
}

ColorlessShortcut detect_colorless(const ColoredPattern& p) {
  if (p.v() != 3) return ColorlessShortcut::none;
  auto code = colorless_canonical_form(p);
  if (code == colorless_canonical_form(colorless_triangle())) return ColorlessShortcut::triangle;
  if (code == colorless_canonical_form(colorless_twostar())) return ColorlessShortcut::twostar;
  return ColorlessShortcut::none;
}

// ---------------------------------------------------------------------------
// Colored kernel

struct ColoredPlan {
  ColoredShortcut shortcut = ColoredShortcut::none;
  int r = 0;
  struct Step {
    int vertex;  // pattern vertex assigned at this step, or -1 for an edge check
    int earlier;
    int cls;
  };
  std::vector<Step> steps;
  int v = 0;
  std::uint64_t automorphisms = 1;
};

ColoredPlan make_colored_plan(const ColoredPattern& p, bool allow_shortcut) {
  validate_for_counting(p);
  ColoredPlan plan;
  plan.r = p.r();
  plan.v = p.v();
  plan.shortcut = allow_shortcut ? detect_colored(p) : ColoredShortcut::none;
  plan.automorphisms = color_automorphism_count(p);
  auto vo = make_visit_order(p);
  for (int u : vo.order) {
    plan.steps.push_back({u, -1, -1});
    for (auto [earlier, k] : vo.back[static_cast<std::size_t>(u)])
      plan.steps.push_back({-1, earlier, p.colors()[static_cast<std::size_t>(k)]});
    // edge checks refer to the vertex assigned most recently
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend() && it->vertex < 0; ++it) it->vertex = -1 - u;
  }
  return plan;
}

class ColoredSearch {
 public:
  ColoredSearch(const ColoredPlan& plan, const std::vector<std::uint32_t>& masks)
      : plan_(plan), masks_(masks), used_(masks.size(), 0) {
    sigma_.fill(-1);
    pi_.fill(-1);
  }

  std::uint64_t run(std::size_t step) {
    if (step == plan_.steps.size()) return 1;
    const auto& s = plan_.steps[step];
    std::uint64_t total = 0;
    if (s.vertex >= 0) {
      for (std::size_t x = 0; x < masks_.size(); ++x) {
        if (used_[x]) continue;
        used_[x] = 1;
        sigma_[static_cast<std::size_t>(s.vertex)] = static_cast<int>(x);
        total += run(step + 1);
        used_[x] = 0;
      }
      return total;
    }
    const int current = -1 - s.vertex;
    std::uint32_t common = masks_[static_cast<std::size_t>(sigma_[static_cast<std::size_t>(current)])] &
                           masks_[static_cast<std::size_t>(sigma_[static_cast<std::size_t>(s.earlier)])];
    int& assigned = pi_[static_cast<std::size_t>(s.cls)];
    if (assigned >= 0) return (common >> assigned & 1u) ? run(step + 1) : 0;
    std::uint32_t options = common & ~used_positions_;
    while (options) {
      int t = std::countr_zero(options);
      options &= options - 1;
      assigned = t;
      used_positions_ |= 1u << t;
      total += run(step + 1);
      used_positions_ &= ~(1u << t);
    }
    assigned = -1;
    return total;
  }

 private:
  const ColoredPlan& plan_;
  const std::vector<std::uint32_t>& masks_;
  std::vector<char> used_;
  std::array<int, kMaxPatternVertices> sigma_{};
  std::array<int, kMaxPatternEdges> pi_{};
  std::uint32_t used_positions_ = 0;
};

std::uint64_t colored_kernel_with(const ColoredPlan& plan, EdgeList t) {
  switch (plan.shortcut) {
    case ColoredShortcut::triangle1: return choose3(t[0].size());
    case ColoredShortcut::twostar1: return 3 * choose3(t[0].size());
    case ColoredShortcut::triangle2: {
      std::uint64_t shared = intersection_size(t[0], t[1]);
      if (shared < 2) return 0;
      return choose2(shared) * ((t[0].size() - 2) + (t[1].size() - 2));
    }
    case ColoredShortcut::twostar2: {
      std::uint64_t shared = intersection_size(t[0], t[1]);
      if (shared == 0) return 0;
      return shared * ((t[0].size() - 1) * (t[1].size() - 1) - (shared - 1));
    }
    case ColoredShortcut::triangle3: {
      // x in h1&h3, y in h1&h2, z in h2&h3, pairwise distinct
      std::uint64_t a = intersection_size(t[0], t[2]);
      std::uint64_t b = intersection_size(t[0], t[1]);
      std::uint64_t c = intersection_size(t[1], t[2]);
      if (a == 0 || b == 0 || c == 0) return 0;
      std::uint64_t all = triple_intersection_size(t[0], t[1], t[2]);
      return a * b * c - all * (a + b + c) + 2 * all;
    }
    case ColoredShortcut::none: break;
  }
  thread_local std::vector<std::uint32_t> masks;
  tuple_union(t, masks);
  ColoredSearch search(plan, masks);
  std::uint64_t embeddings = search.run(0);
  return embeddings / plan.automorphisms;
}

// ---------------------------------------------------------------------------
// Colorless kernel on a tuple: copies of H weighted by the product of edge
// multiplicities within the tuple.

struct ColorlessPlan {
  ColorlessShortcut shortcut = ColorlessShortcut::none;
  VisitOrder order;
  std::uint64_t automorphisms = 1;
};

ColorlessPlan make_colorless_plan(const ColoredPattern& p, bool allow_shortcut) {
  validate_for_counting(p);
  ColorlessPlan plan;
  plan.shortcut = allow_shortcut ? detect_colorless(p) : ColorlessShortcut::none;
  plan.order = make_visit_order(p);
  plan.automorphisms = graph_automorphism_count(p);
  return plan;
}

class DenseWeightedSearch {
 public:
  DenseWeightedSearch(const ColorlessPlan& plan, const std::vector<std::uint32_t>& masks)
      : plan_(plan), masks_(masks), used_(masks.size(), 0) {}

  std::uint64_t run(std::size_t depth, std::uint64_t weight) {
    const auto& order = plan_.order.order;
    if (depth == order.size()) return weight;
    const int u = order[depth];
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < masks_.size(); ++x) {
      if (used_[x]) continue;
      std::uint64_t w = weight;
      for (auto [earlier, k] : plan_.order.back[static_cast<std::size_t>(u)]) {
        (void)k;
        w *= static_cast<std::uint64_t>(
            std::popcount(masks_[x] & masks_[static_cast<std::size_t>(sigma_[static_cast<std::size_t>(earlier)])]));
        if (w == 0) break;
      }
      if (w == 0) continue;
      used_[x] = 1;
      sigma_[static_cast<std::size_t>(u)] = static_cast<int>(x);
      total += run(depth + 1, w);
      used_[x] = 0;
    }
    return total;
  }

 private:
  const ColorlessPlan& plan_;
  const std::vector<std::uint32_t>& masks_;
  std::vector<char> used_;
  std::array<int, kMaxPatternVertices> sigma_{};
};

std::uint64_t colorless_kernel_with(const ColorlessPlan& plan, EdgeList t) {
  thread_local std::vector<std::uint32_t> masks;
  tuple_union(t, masks);
  const std::size_t n = masks.size();
  auto mult = [&](std::size_t a, std::size_t b) -> std::uint64_t {
    return static_cast<std::uint64_t>(std::popcount(masks[a] & masks[b]));
  };
  switch (plan.shortcut) {
    case ColorlessShortcut::triangle: {
      std::uint64_t total = 0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
          std::uint64_t wxy = mult(x, y);
          if (!wxy) continue;
          for (std::size_t z = y + 1; z < n; ++z) total += wxy * mult(x, z) * mult(y, z);
        }
      return total;
    }
    case ColorlessShortcut::twostar: {
      std::uint64_t total = 0;
      for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t s = 0, q = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (a == c) continue;
          std::uint64_t w = mult(a, c);
          s += w;
          q += w * w;
        }
        total += (s * s - q) / 2;
      }
      return total;
    }
    case ColorlessShortcut::none: break;
  }
  DenseWeightedSearch search(plan, masks);
  return search.run(0, 1) / plan.automorphisms;
}

// ---------------------------------------------------------------------------
// Whole-sample weighted graph: weight of {a,b} is its multiplicity (number of
// hyperedges holding both) or 1 for the binarized graph.

struct HostGraph {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  std::vector<VertexId> neighbors;
  std::vector<std::uint64_t> weights;

  std::span<const VertexId> adj(VertexId a) const {
    return {neighbors.data() + offsets[a], offsets[a + 1] - offsets[a]};
  }
  std::uint64_t weight_at(std::size_t slot) const { return weights[slot]; }
  std::uint64_t weight(VertexId a, VertexId b) const {
    auto row = adj(a);
    auto it = std::lower_bound(row.begin(), row.end(), b);
    if (it == row.end() || *it != b) return 0;
    return weights[offsets[a] + static_cast<std::size_t>(it - row.begin())];
  }
};

HostGraph build_host(EdgeList edges, bool with_multiplicity) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  HostGraph g;
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      g.n = std::max<std::size_t>(g.n, e[i] + 1);
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        arcs.emplace_back(e[i], e[j]);
        arcs.emplace_back(e[j], e[i]);
      }
    }
  }
  std::sort(arcs.begin(), arcs.end());
  g.offsets.assign(g.n + 1, 0);
  for (std::size_t i = 0; i < arcs.size();) {
    std::size_t j = i;
    while (j < arcs.size() && arcs[j] == arcs[i]) ++j;
    g.neighbors.push_back(arcs[i].second);
    g.weights.push_back(with_multiplicity ? j - i : 1);
    ++g.offsets[arcs[i].first + 1];
    i = j;
  }
  std::partial_sum(g.offsets.begin(), g.offsets.end(), g.offsets.begin());
  return g;
}

class SparseWeightedSearch {
 public:
  SparseWeightedSearch(const ColorlessPlan& plan, const HostGraph& g) : plan_(plan), g_(g), used_(g.n, 0) {}

  std::uint64_t run(std::size_t depth, std::uint64_t weight) {
    const auto& order = plan_.order.order;
    if (depth == order.size()) return weight;
    const int u = order[depth];
    const int anchor = plan_.order.anchor[static_cast<std::size_t>(u)];
    std::uint64_t total = 0;
    auto try_vertex = [&](VertexId x) {
      if (used_[x]) return;
      std::uint64_t w = weight;
      for (auto [earlier, k] : plan_.order.back[static_cast<std::size_t>(u)]) {
        (void)k;
        std::uint64_t ew = g_.weight(static_cast<VertexId>(sigma_[static_cast<std::size_t>(earlier)]), x);
        if (ew == 0) return;
        w = mul_checked(w, ew);
      }
      used_[x] = 1;
      sigma_[static_cast<std::size_t>(u)] = static_cast<int>(x);
      add_checked(total, run(depth + 1, w));
      used_[x] = 0;
    };
    if (anchor >= 0) {
      for (VertexId x : g_.adj(static_cast<VertexId>(sigma_[static_cast<std::size_t>(anchor)]))) try_vertex(x);
    } else {
      for (std::size_t x = 0; x < g_.n; ++x)
        if (g_.offsets[x + 1] > g_.offsets[x]) try_vertex(static_cast<VertexId>(x));
    }
    return total;
  }

 private:
  const ColorlessPlan& plan_;
  const HostGraph& g_;
  std::vector<char> used_;
  std::array<int, kMaxPatternVertices> sigma_{};
};

std::uint64_t host_copies(const ColorlessPlan& plan, const HostGraph& g) {
  switch (plan.shortcut) {
    case ColorlessShortcut::twostar: {
      std::uint64_t total = 0;
      for (std::size_t c = 0; c < g.n; ++c) {
        unsigned __int128 s = 0, q = 0;
        for (std::size_t slot = g.offsets[c]; slot < g.offsets[c + 1]; ++slot) {
          s += g.weights[slot];
          q += static_cast<unsigned __int128>(g.weights[slot]) * g.weights[slot];
        }
        unsigned __int128 pairs = (s * s - q) / 2;
        if (pairs > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("subgraph count exceeds 64 bits");
        add_checked(total, static_cast<std::uint64_t>(pairs));
      }
      return total;
    }
    case ColorlessShortcut::triangle: {
      std::uint64_t total = 0;
      for (VertexId x = 0; x < g.n; ++x) {
        auto ax = g.adj(x);
        for (std::size_t i = 0; i < ax.size(); ++i) {
          VertexId y = ax[i];
          if (y <= x) continue;
          std::uint64_t wxy = g.weight_at(g.offsets[x] + i);
          auto ay = g.adj(y);
          // z > y common to both lists
          std::size_t p = i + 1, q = static_cast<std::size_t>(std::upper_bound(ay.begin(), ay.end(), y) - ay.begin());
          while (p < ax.size() && q < ay.size()) {
            if (ax[p] < ay[q]) ++p;
            else if (ay[q] < ax[p]) ++q;
            else {
              add_checked(total, mul_checked(mul_checked(wxy, g.weight_at(g.offsets[x] + p)), g.weight_at(g.offsets[y] + q)));
              ++p;
              ++q;
            }
          }
        }
      }
      return total;
    }
    case ColorlessShortcut::none: break;
  }
  SparseWeightedSearch search(plan, g);
  return search.run(0, 1) / plan.automorphisms;
}

// ---------------------------------------------------------------------------
// Tuple designs

template <class Kernel>
std::uint64_t sum_complete(EdgeList edges, int r, Kernel&& kernel) {
  const std::size_t m = edges.size();
  const auto order = static_cast<std::size_t>(r);
  std::uint64_t total = 0;
  std::mutex total_mutex;
  parallel_for(m - order + 1, [&](std::size_t begin, std::size_t end) {
    std::array<std::size_t, kMaxTupleSize> idx{};
    std::array<HyperedgeView, kMaxTupleSize> tuple{};
    std::uint64_t local = 0;
    for (std::size_t first = begin; first < end; ++first) {
      for (std::size_t k = 0; k < order; ++k) idx[k] = first + k;
      while (true) {
        for (std::size_t k = 0; k < order; ++k) tuple[k] = edges[idx[k]];
        add_checked(local, kernel(EdgeList(tuple.data(), order)));
        std::size_t j = order;
        while (j > 1 && idx[j - 1] == m - order + (j - 1)) --j;
        if (j <= 1) break;
        ++idx[j - 1];
        for (std::size_t l = j; l < order; ++l) idx[l] = idx[l - 1] + 1;
      }
    }
    std::lock_guard lock(total_mutex);
    add_checked(total, local);
  });
  return total;
}

// Draws `count` increasing r-tuples uniformly from the combinations of [0, m).
std::vector<std::uint32_t> draw_tuples(std::size_t m, int r, std::uint64_t count, std::uint64_t seed) {
  const auto order = static_cast<std::size_t>(r);
  std::vector<std::uint32_t> out(count * order);
  Rng rng(seed);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint32_t* t = out.data() + n * order;
    for (std::size_t k = 0; k < order; ++k) {
      while (true) {
        auto x = static_cast<std::uint32_t>(rng.below(m));
        if (std::find(t, t + k, x) == t + k) {
          t[k] = x;
          break;
        }
      }
    }
    std::sort(t, t + order);
  }
  return out;
}

template <class Kernel>
std::uint64_t sum_incomplete(EdgeList edges, int r, const Incomplete& design, Kernel&& kernel) {
  const auto order = static_cast<std::size_t>(r);
  auto tuples = draw_tuples(edges.size(), r, design.tuples, design.seed);
  std::uint64_t total = 0;
  std::mutex total_mutex;
  parallel_for(design.tuples, [&](std::size_t begin, std::size_t end) {
    std::array<HyperedgeView, kMaxTupleSize> tuple{};
    std::uint64_t local = 0;
    for (std::size_t n = begin; n < end; ++n) {
      for (std::size_t k = 0; k < order; ++k) tuple[k] = edges[tuples[n * order + k]];
      add_checked(local, kernel(EdgeList(tuple.data(), order)));
    }
    std::lock_guard lock(total_mutex);
    add_checked(total, local);
  });
  return total;
}

template <class Kernel>
Estimate run_design(EdgeList edges, int r, const Design& design, Kernel&& kernel) {
  if (r < 1 || static_cast<std::size_t>(r) > kMaxTupleSize) throw std::invalid_argument("tuple order must be in 1..32");
  if (edges.size() < static_cast<std::size_t>(r))
    throw std::invalid_argument("sample has fewer hyperedges than the tuple order");
  Estimate est;
  est.design = design;
  est.m = edges.size();
  est.order = r;
  if (const auto* inc = std::get_if<Incomplete>(&design)) {
    if (inc->tuples == 0) throw std::invalid_argument("incomplete design needs at least one tuple");
    est.numerator = sum_incomplete(edges, r, *inc, kernel);
    est.denominator = inc->tuples;
  } else {
    est.denominator = binomial(edges.size(), static_cast<std::uint64_t>(r));
    est.numerator = sum_complete(edges, r, kernel);
  }
  est.value = static_cast<double>(est.numerator) / static_cast<double>(est.denominator);
  return est;
}

}  // namespace

std::uint64_t default_tuple_count(std::size_t m, double exponent) {
  return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(m), exponent)));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t colored_kernel(const ColoredPattern& pattern, EdgeList tuple) {
  auto plan = make_colored_plan(pattern, true);
  if (tuple.size() != static_cast<std::size_t>(plan.r))
    throw std::invalid_argument("tuple length must equal the number of color classes");
  return colored_kernel_with(plan, tuple);
}

std::uint64_t colorless_kernel(const ColoredPattern& pattern, EdgeList tuple) {
  if (tuple.empty() || tuple.size() > kMaxTupleSize) throw std::invalid_argument("tuple length must be in 1..32");
  auto plan = make_colorless_plan(pattern, true);
  return colorless_kernel_with(plan, tuple);
}

Estimate estimate_colored(EdgeList edges, const ColoredPattern& pattern, const Design& design) {
  auto plan = make_colored_plan(pattern, true);
  auto est = run_design(edges, plan.r, design, [&](EdgeList t) { return colored_kernel_with(plan, t); });
  est.pattern = pattern_label(pattern);
  return est;
}

Estimate estimate_colored(const HypergraphSample& sample, const ColoredPattern& pattern, const Design& design) {
  auto views = sample.views();
  return estimate_colored(EdgeList(views), pattern, design);
}

Estimate estimate_colorless(EdgeList edges, const ColoredPattern& pattern, int r, const Design& design) {
  auto plan = make_colorless_plan(pattern, true);
  auto est = run_design(edges, r, design, [&](EdgeList t) { return colorless_kernel_with(plan, t); });
  est.pattern = pattern_label(pattern);
  return est;
}

Estimate estimate_colorless(const HypergraphSample& sample, const ColoredPattern& pattern, int r,
                            const Design& design) {
  auto views = sample.views();
  return estimate_colorless(EdgeList(views), pattern, r, design);
}

Estimate estimate_degree_filtered(EdgeList edges, const ColoredPattern& pattern, std::uint32_t d,
                                  const Design& design) {
  auto degrees = hyperdegrees(edges);
  std::vector<bool> keep(degrees.size());
  for (std::size_t j = 0; j < degrees.size(); ++j) keep[j] = degrees.degrees[j] >= d;
  // Every pattern vertex lies on an edge, so restricting each hyperedge to
  // qualifying vertices is the same as filtering the embeddings.
  FilteredEdges filtered(edges, keep);
  auto est = estimate_colored(filtered.views(), pattern, design);
  est.filter_d = d;
  return est;
}

Estimate estimate_degree_filtered(const HypergraphSample& sample, const ColoredPattern& pattern,
                                  std::uint32_t d, const Design& design) {
  auto views = sample.views();
  return estimate_degree_filtered(EdgeList(views), pattern, d, design);
}

std::uint64_t total_copies(EdgeList edges, const ColoredPattern& pattern) {
  auto plan = make_colorless_plan(pattern, true);
  return host_copies(plan, build_host(edges, true));
}

std::uint64_t total_copies(const HypergraphSample& sample, const ColoredPattern& pattern) {
  auto views = sample.views();
  return total_copies(EdgeList(views), pattern);
}

std::uint64_t unique_k_count(EdgeList edges, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::vector<HyperedgeView> sized;
  for (const auto& e : edges)
    if (e.size() == k) sized.push_back(e);
  auto less = [](HyperedgeView a, HyperedgeView b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  std::sort(sized.begin(), sized.end(), less);
  std::uint64_t distinct = 0;
  for (std::size_t i = 0; i < sized.size(); ++i)
    if (i == 0 || !std::equal(sized[i].begin(), sized[i].end(), sized[i - 1].begin(), sized[i - 1].end())) ++distinct;
  return distinct;
}

std::uint64_t unique_k_count(const HypergraphSample& sample, std::size_t k) {
  auto views = sample.views();
  return unique_k_count(EdgeList(views), k);
}

std::uint64_t binarized_count(EdgeList edges, const ColoredPattern& pattern) {
  auto plan = make_colorless_plan(pattern, true);
  return host_copies(plan, build_host(edges, false));
}

std::uint64_t binarized_count(const HypergraphSample& sample, const ColoredPattern& pattern) {
  auto views = sample.views();
  return binarized_count(EdgeList(views), pattern);
}

double clustering_coefficient(EdgeList edges, ClusteringKind kind, const Design& design) {
  if (kind == ClusteringKind::binarized) {
    auto g = build_host(edges, false);
    auto triangles = host_copies(make_colorless_plan(colorless_triangle(), true), g);
    auto wedges = host_copies(make_colorless_plan(colorless_twostar(), true), g);
    if (wedges == 0) throw UndefinedRatio("binarized clustering coefficient: no two-stars");
    return 3.0 * static_cast<double>(triangles) / static_cast<double>(wedges);
  }
  auto num = estimate_colored(edges, builtin_pattern(Builtin::triangle2), design);
  auto den = estimate_colored(edges, builtin_pattern(Builtin::twostar2), design);
  if (den.numerator == 0) throw UndefinedRatio("type-2 clustering coefficient: no type-2 two-stars");
  return num.value / den.value;
}

double clustering_coefficient(const HypergraphSample& sample, ClusteringKind kind, const Design& design) {
  auto views = sample.views();
  return clustering_coefficient(EdgeList(views), kind, design);
}

namespace detail {

std::uint64_t colored_kernel_generic(const ColoredPattern& pattern, EdgeList tuple) {
  auto plan = make_colored_plan(pattern, false);
  if (tuple.size() != static_cast<std::size_t>(plan.r))
    throw std::invalid_argument("tuple length must equal the number of color classes");
  return colored_kernel_with(plan, tuple);
}

std::uint64_t colorless_kernel_generic(const ColoredPattern& pattern, EdgeList tuple) {
  auto plan = make_colorless_plan(pattern, false);
  return colorless_kernel_with(plan, tuple);
}

std::uint64_t weighted_copies_generic(EdgeList edges, const ColoredPattern& pattern, bool with_multiplicity) {
  auto plan = make_colorless_plan(pattern, false);
  return host_copies(plan, build_host(edges, with_multiplicity));
}

}  // namespace detail

}  // namespace hypersub
