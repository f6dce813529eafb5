#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hypersub {

/// Dense vertex index. Ids are assigned 0..n-1 in order of first appearance.
using VertexId = std::uint32_t;

/// A hyperedge is a sorted, duplicate-free run of vertex ids.
using HyperedgeView = std::span<const VertexId>;

/// Any ordered collection of hyperedges a statistic can be evaluated on:
/// a full sample, a subsample, or a filtered copy.
using EdgeList = std::span<const HyperedgeView>;

/// Ordered sequence of m hyperedges. The position of a hyperedge is its color.
///
/// Storage is compressed (offsets into one flat vertex array); the object is
/// immutable after construction and cheap to share read-only across threads.
class HypergraphSample {
 public:
  HypergraphSample() = default;

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  bool empty() const { return size() == 0; }
  std::size_t n_vertices() const { return labels_.size(); }

  HyperedgeView edge(std::size_t i) const {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// Views over every hyperedge, in sample order. Views stay valid for the
  /// lifetime of this object.
  std::vector<HyperedgeView> views() const;

  const std::string& label(VertexId id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Returns the id of a label, or -1 if it never occurred.
  std::int64_t id_of(std::string_view label) const;

  /// Sum of hyperedge cardinalities.
  std::size_t total_incidence() const { return vertices_.size(); }

  /// Builds a sample from token lists. Duplicate tokens inside one list
  /// collapse; an empty list yields an empty hyperedge.
  static HypergraphSample from_tokens(const std::vector<std::vector<std::string>>& edges);

  /// Builds a sample from integer vertex keys. Ids follow first appearance and
  /// labels are the decimal keys.
  static HypergraphSample from_keys(const std::vector<std::vector<std::uint64_t>>& edges);

  /// Copies the hyperedges at the given positions into a new sample.
  HypergraphSample select(std::span<const std::size_t> positions) const;

 private:
  friend class SampleBuilder;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> vertices_;
  std::vector<std::string> labels_;
};

/// Incremental construction helper shared by the parsers and generators.
class SampleBuilder {
 public:
  SampleBuilder();
  void add_edge(const std::vector<std::string>& tokens);
  void add_edge_keys(std::span<const std::uint64_t> keys);
  HypergraphSample finish() &&;

 private:
  VertexId intern(std::string_view token);
  void close_edge(std::size_t begin);

  HypergraphSample sample_;
  std::unordered_map<std::string, VertexId> ids_;
  std::unordered_map<std::uint64_t, VertexId> key_ids_;
};

/// Hyperedge-list text: one hyperedge per line, tokens separated by blanks or
/// tabs, '#' to end of line is a comment, blank lines are ignored.
HypergraphSample parse_hyperedge_list(std::istream& in);
HypergraphSample parse_hyperedge_list(std::string_view text);
HypergraphSample read_hyperedge_file(const std::string& path);

/// Same rules as the text format, one element per line.
HypergraphSample build_sample(const std::vector<std::string>& lines);

void write_hyperedge_list(std::ostream& out, const HypergraphSample& sample);

/// Two columns: dense id, original label.
void write_id_map(std::ostream& out, const HypergraphSample& sample);

struct DegreeIndex {
  /// degrees[j] = number of hyperedges containing vertex j.
  std::vector<std::uint32_t> degrees;

  std::uint32_t operator[](VertexId j) const { return j < degrees.size() ? degrees[j] : 0; }
  std::size_t size() const { return degrees.size(); }
};

DegreeIndex hyperdegrees(const HypergraphSample& sample);
DegreeIndex hyperdegrees(EdgeList edges);

/// Simple graph: an edge {a,b} is present iff some hyperedge holds both.
struct BinaryGraph {
  std::size_t n_vertices = 0;
  /// Sorted, a < b, unique.
  std::vector<std::pair<VertexId, VertexId>> edges;
};

BinaryGraph binarize(const HypergraphSample& sample);
BinaryGraph binarize(EdgeList edges);

/// Owns a copy of a set of hyperedges restricted to a vertex predicate.
class FilteredEdges {
 public:
  FilteredEdges(EdgeList edges, const std::vector<bool>& keep);
  EdgeList views() const { return views_; }

  FilteredEdges(const FilteredEdges&) = delete;
  FilteredEdges& operator=(const FilteredEdges&) = delete;

 private:
  std::vector<VertexId> storage_;
  std::vector<HyperedgeView> views_;
};

}  // namespace hypersub
