#include "hypersub/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hypersub {

namespace {

std::vector<std::string> tokenize_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

std::vector<HyperedgeView> HypergraphSample::views() const {
  std::vector<HyperedgeView> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(edge(i));
  return out;
}

std::int64_t HypergraphSample::id_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<std::int64_t>(it - labels_.begin());
}

HypergraphSample HypergraphSample::from_tokens(const std::vector<std::vector<std::string>>& edges) {
  SampleBuilder builder;
  for (const auto& e : edges) builder.add_edge(e);
  return std::move(builder).finish();
}

HypergraphSample HypergraphSample::from_keys(const std::vector<std::vector<std::uint64_t>>& edges) {
  SampleBuilder builder;
  for (const auto& e : edges) builder.add_edge_keys(e);
  return std::move(builder).finish();
}

HypergraphSample HypergraphSample::select(std::span<const std::size_t> positions) const {
  HypergraphSample out;
  out.labels_ = labels_;
  out.offsets_.reserve(positions.size() + 1);
  out.offsets_.push_back(0);
  for (std::size_t p : positions) {
    auto e = edge(p);
    out.vertices_.insert(out.vertices_.end(), e.begin(), e.end());
    out.offsets_.push_back(out.vertices_.size());
  }
  return out;
}

SampleBuilder::SampleBuilder() { sample_.offsets_.push_back(0); }

VertexId SampleBuilder::intern(std::string_view token) {
  auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<VertexId>(sample_.labels_.size()));
  if (inserted) sample_.labels_.emplace_back(token);
  return it->second;
}

void SampleBuilder::close_edge(std::size_t begin) {
  auto first = sample_.vertices_.begin() + static_cast<std::ptrdiff_t>(begin);
  std::sort(first, sample_.vertices_.end());
  sample_.vertices_.erase(std::unique(first, sample_.vertices_.end()), sample_.vertices_.end());
  sample_.offsets_.push_back(sample_.vertices_.size());
}

void SampleBuilder::add_edge(const std::vector<std::string>& tokens) {
  std::size_t begin = sample_.vertices_.size();
  for (const auto& t : tokens) sample_.vertices_.push_back(intern(t));
  close_edge(begin);
}

void SampleBuilder::add_edge_keys(std::span<const std::uint64_t> keys) {
  std::size_t begin = sample_.vertices_.size();
  for (auto k : keys) {
    auto [it, inserted] = key_ids_.try_emplace(k, static_cast<VertexId>(sample_.labels_.size()));
    if (inserted) sample_.labels_.push_back(std::to_string(k));
    sample_.vertices_.push_back(it->second);
  }
  close_edge(begin);
}

HypergraphSample SampleBuilder::finish() && { return std::move(sample_); }

HypergraphSample parse_hyperedge_list(std::istream& in) {
  SampleBuilder builder;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = tokenize_line(line);
    if (!tokens.empty()) builder.add_edge(tokens);
  }
  return std::move(builder).finish();
}

HypergraphSample parse_hyperedge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hyperedge_list(in);
}

HypergraphSample read_hyperedge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hyperedge file: " + path);
  return parse_hyperedge_list(in);
}

HypergraphSample build_sample(const std::vector<std::string>& lines) {
  SampleBuilder builder;
  for (const auto& line : lines) {
    auto tokens = tokenize_line(line);
    if (!tokens.empty()) builder.add_edge(tokens);
  }
  return std::move(builder).finish();
}

void write_hyperedge_list(std::ostream& out, const HypergraphSample& sample) {
  for (std::size_t i = 0; i < sample.size(); ++i) {
    bool first = true;
    for (VertexId v : sample.edge(i)) {
      if (!first) out << ' ';
      out << sample.label(v);
      first = false;
    }
    out << '\n';
  }
}

void write_id_map(std::ostream& out, const HypergraphSample& sample) {
  for (std::size_t id = 0; id < sample.n_vertices(); ++id) out << id << '\t' << sample.labels()[id] << '\n';
}

DegreeIndex hyperdegrees(EdgeList edges) {
  DegreeIndex index;
  for (const auto& e : edges) {
    for (VertexId v : e) {
      if (v >= index.degrees.size()) index.degrees.resize(v + 1, 0);
      ++index.degrees[v];
    }
  }
  return index;
}

DegreeIndex hyperdegrees(const HypergraphSample& sample) {
  auto views = sample.views();
  auto index = hyperdegrees(EdgeList(views));
  index.degrees.resize(sample.n_vertices(), 0);
  return index;
}

BinaryGraph binarize(EdgeList edges) {
  BinaryGraph g;
  for (const auto& e : edges) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      g.n_vertices = std::max<std::size_t>(g.n_vertices, e[a] + 1);
      for (std::size_t b = a + 1; b < e.size(); ++b) g.edges.emplace_back(e[a], e[b]);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

BinaryGraph binarize(const HypergraphSample& sample) {
  auto views = sample.views();
  auto g = binarize(EdgeList(views));
  g.n_vertices = sample.n_vertices();
  return g;
}

FilteredEdges::FilteredEdges(EdgeList edges, const std::vector<bool>& keep) {
  std::vector<std::size_t> offsets{0};
  offsets.reserve(edges.size() + 1);
  for (const auto& e : edges) {
    for (VertexId v : e)
      if (v < keep.size() && keep[v]) storage_.push_back(v);
    offsets.push_back(storage_.size());
  }
  views_.reserve(edges.size());
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
    views_.emplace_back(storage_.data() + offsets[i], offsets[i + 1] - offsets[i]);
}

}  // namespace hypersub
