#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hypersub {

/// Small simple colored subgraph template: v vertices, e edges, and a
/// surjective map from edges onto r color classes. Each edge carries exactly
/// one class. Classes are interchangeable; only the partition of the edges
/// matters for color isomorphism.
class ColoredPattern {
 public:
  using Edge = std::pair<int, int>;

  ColoredPattern(int v, std::vector<Edge> edges, std::vector<int> colors, std::string name = {});

  int v() const { return v_; }
  int e() const { return static_cast<int>(edges_.size()); }
  int r() const { return r_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& colors() const { return colors_; }
  const std::string& name() const { return name_; }

  /// Degree of each vertex in the colorless restriction.
  std::vector<int> degrees() const;
  bool has_isolated_vertex() const;

  /// Same edges, one color class.
  ColoredPattern colorless() const;

  friend bool operator==(const ColoredPattern& a, const ColoredPattern& b) {
    return a.v_ == b.v_ && a.edges_ == b.edges_ && a.colors_ == b.colors_;
  }

 private:
  int v_;
  int r_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  std::string name_;
};

enum class Builtin { triangle1, triangle2, triangle3, twostar1, twostar2 };

ColoredPattern builtin_pattern(Builtin which);

/// Accepts triangle1..3, twostar1..2 and the colorless names triangle, twostar.
/// Throws std::invalid_argument on anything else.
ColoredPattern pattern_by_name(std::string_view name);

/// The colorless triangle and two-star (one class).
ColoredPattern colorless_triangle();
ColoredPattern colorless_twostar();

/// Canonical code under vertex relabeling and color-class relabeling. Two
/// patterns are color isomorphic iff their codes are equal.
std::vector<int> canonical_form(const ColoredPattern& p);
bool color_isomorphic(const ColoredPattern& a, const ColoredPattern& b);

/// Canonical code of the colorless restriction.
std::vector<int> colorless_canonical_form(const ColoredPattern& p);

/// Number of (vertex permutation, class permutation) pairs mapping the
/// colored edge set onto itself.
std::uint64_t color_automorphism_count(const ColoredPattern& p);

/// Number of vertex permutations preserving the colorless edge set.
std::uint64_t graph_automorphism_count(const ColoredPattern& p);

/// Structural quantities of the colorless restriction used by the
/// deletion-stability bounds.
struct PatternStats {
  int v = 0;
  int e = 0;
  int r = 0;
  /// Minimum vertex degree.
  int min_degree = 0;
  /// nk[k-1] = N_k, the largest number of edges with at least one endpoint in
  /// a k-subset of the vertices, k = 1..v-1.
  std::vector<int> nk;

  int n(int k) const { return nk.at(static_cast<std::size_t>(k - 1)); }
};

PatternStats structure_stats(const ColoredPattern& p);

/// Caller-supplied replacements for the literal structural quantities.
struct StructureOverrides {
  std::optional<int> min_degree;
  std::optional<int> n1;

  bool any() const { return min_degree || n1; }
};

PatternStats apply_overrides(PatternStats stats, const StructureOverrides& o);

/// {"v": int, "edges": [[a,b],...], "colors": [c_0,...]}; colors may be
/// omitted for a colorless pattern.
ColoredPattern pattern_from_json(const nlohmann::json& j);
nlohmann::json pattern_to_json(const ColoredPattern& p);

}  // namespace hypersub
