#include "hypersub/random.hpp"

#include <algorithm>
#include <unordered_set>

namespace hypersub {

std::vector<std::size_t> sample_without_replacement(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(k);
  if (2 * k > n) {
    // dense case: partial Fisher-Yates
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    std::unordered_set<std::size_t> seen;
    seen.reserve(2 * k);
    for (std::size_t j = n - k; j < n; ++j) {
      std::size_t t = rng.below(j + 1);
      if (!seen.insert(t).second) {
        seen.insert(j);
        out.push_back(j);
      } else {
        out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypersub
