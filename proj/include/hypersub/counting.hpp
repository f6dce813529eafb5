#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "hypersub/hypergraph.hpp"
#include "hypersub/patterns.hpp"

namespace hypersub {

/// Average the kernel over every increasing r-tuple of hyperedges.
struct Complete {};

/// Average the kernel over `tuples` r-tuples drawn i.i.d. uniformly from the
/// C(m, r) combinations.
struct Incomplete {
  std::uint64_t tuples = 0;
  std::uint64_t seed = 0;
};

using Design = std::variant<Complete, Incomplete>;

/// ceil(m^exponent), the default incomplete tuple budget.
std::uint64_t default_tuple_count(std::size_t m, double exponent = 1.1);

/// Exact C(n, k); throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Point value of a subgraph statistic. `numerator / denominator` is exact:
/// the kernel sum over the evaluated tuples and the tuple count.
struct Estimate {
  double value = 0.0;
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  std::string pattern;
  Design design;
  std::optional<std::uint32_t> filter_d;
  std::size_t m = 0;
  /// Number of hyperedges per tuple (the U-statistic order r).
  int order = 0;
};

class UndefinedRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Number of simple colored subgraphs of the tuple's colored graph that are
/// color isomorphic to the pattern and use every tuple position as a color.
/// Requires tuple.size() == pattern.r().
std::uint64_t colored_kernel(const ColoredPattern& pattern, EdgeList tuple);

/// Sum over every nonempty color subset of the tuple of simple colored
/// subgraphs whose colorless restriction is isomorphic to the pattern.
std::uint64_t colorless_kernel(const ColoredPattern& pattern, EdgeList tuple);

Estimate estimate_colored(EdgeList edges, const ColoredPattern& pattern, const Design& design);
Estimate estimate_colored(const HypergraphSample& sample, const ColoredPattern& pattern, const Design& design);

/// Colorless (homomorphism) frequency T(H; r).
Estimate estimate_colorless(EdgeList edges, const ColoredPattern& pattern, int r, const Design& design);
Estimate estimate_colorless(const HypergraphSample& sample, const ColoredPattern& pattern, int r,
                            const Design& design);

/// Colored frequency restricted to embeddings whose vertices all have
/// hyperdegree >= d, degrees taken over `edges` as a whole.
Estimate estimate_degree_filtered(EdgeList edges, const ColoredPattern& pattern, std::uint32_t d,
                                  const Design& design);
Estimate estimate_degree_filtered(const HypergraphSample& sample, const ColoredPattern& pattern,
                                  std::uint32_t d, const Design& design);

/// Total number of simple colored copies of the colorless pattern in the
/// whole sample, over every color subset.
std::uint64_t total_copies(EdgeList edges, const ColoredPattern& pattern);
std::uint64_t total_copies(const HypergraphSample& sample, const ColoredPattern& pattern);

/// Number of distinct k-vertex sets that occur as a whole hyperedge.
std::uint64_t unique_k_count(EdgeList edges, std::size_t k);
std::uint64_t unique_k_count(const HypergraphSample& sample, std::size_t k);

/// Number of subgraphs of the binarized graph isomorphic to the pattern.
std::uint64_t binarized_count(EdgeList edges, const ColoredPattern& pattern);
std::uint64_t binarized_count(const HypergraphSample& sample, const ColoredPattern& pattern);

enum class ClusteringKind { type2, binarized };

/// type2: T(triangle2) / T(twostar2) under `design` (same tuples for both).
/// binarized: 3 * triangles / two-stars of the binarized graph.
/// Throws UndefinedRatio when the denominator is zero.
double clustering_coefficient(EdgeList edges, ClusteringKind kind, const Design& design);
double clustering_coefficient(const HypergraphSample& sample, ClusteringKind kind, const Design& design);

namespace detail {

// Enumeration paths without the closed-form shortcuts; exposed for tests.
std::uint64_t colored_kernel_generic(const ColoredPattern& pattern, EdgeList tuple);
std::uint64_t colorless_kernel_generic(const ColoredPattern& pattern, EdgeList tuple);
std::uint64_t weighted_copies_generic(EdgeList edges, const ColoredPattern& pattern, bool with_multiplicity);

}  // namespace detail

}  // namespace hypersub
