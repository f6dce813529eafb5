#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hypersub/hypergraph.hpp"
#include "hypersub/random.hpp"

namespace testing_support {

using Keys = std::vector<std::vector<std::uint64_t>>;

// A sample plus views that live as long as it does.
struct Owned {
  hypersub::HypergraphSample sample;
  std::vector<hypersub::HyperedgeView> views;

  explicit Owned(const Keys& keys) : sample(hypersub::HypergraphSample::from_keys(keys)), views(sample.views()) {}
  hypersub::EdgeList edges() const { return views; }
};

inline std::vector<std::vector<int>> to_int(const Keys& keys) {
  std::vector<std::vector<int>> out;
  for (const auto& h : keys) out.emplace_back(h.begin(), h.end());
  return out;
}

// m hyperedges over labels 1..n_vertices with sizes in [0, max_size].
inline Keys random_keys(hypersub::Rng& rng, std::size_t m, std::size_t n_vertices, std::size_t max_size) {
  Keys keys(m);
  for (auto& h : keys) {
    const std::size_t size = rng.below(max_size + 1);
    auto picked = hypersub::sample_without_replacement(rng, n_vertices, std::min(size, n_vertices));
    for (auto v : picked) h.push_back(v + 1);
    // shuffle so first-appearance ids differ from labels
    for (std::size_t i = h.size(); i > 1; --i) std::swap(h[i - 1], h[rng.below(i)]);
  }
  return keys;
}

}  // namespace testing_support
