#include "mvd/partitions.hpp"

#include <algorithm>

#include "mvd/errors.hpp"

namespace mvd {

RestrictedGrowthPartitions::RestrictedGrowthPartitions(std::size_t n, std::size_t k)
    : n_(n), k_(k), string_(n, 0), prefix_max_(n, 0) {
  if (n == 0 ? k != 0 : (k < 1 || k > n)) throw InputError("partitions: need 1 <= k <= n");
  if (n > 0) fill_from(1);
}

// Smallest valid completion of string_[position..] given the prefix: zeros,
// then the forced run k_-m, ..., k_-1 at the tail where m classes are missing.
void RestrictedGrowthPartitions::fill_from(std::size_t position) {
  std::size_t used = position == 0 ? 0 : prefix_max_[position - 1] + 1;
  for (std::size_t i = position; i < n_; ++i) {
    const std::size_t remaining = n_ - i;  // slots i..n-1
    const std::size_t missing = k_ - used;
    string_[i] = remaining <= missing ? used : 0;
    if (string_[i] == used) ++used;
    prefix_max_[i] = used - 1;
  }
}

bool RestrictedGrowthPartitions::next() {
  // Find the rightmost position that can be incremented while the suffix can
  // still reach exactly k classes.
  for (std::size_t i = n_; i-- > 1;) {
    const std::size_t cap = prefix_max_[i - 1] + 1;  // largest allowed value
    if (string_[i] >= cap || string_[i] + 1 >= k_) continue;
    const std::size_t value = string_[i] + 1;
    const std::size_t used = std::max(prefix_max_[i - 1], value) + 1;
    if (k_ - used > n_ - i - 1) continue;
    string_[i] = value;
    prefix_max_[i] = used - 1;
    fill_from(i + 1);
    return true;
  }
  return false;
}

unsigned long long stirling2(std::size_t n, std::size_t k) {
  std::vector<std::vector<unsigned long long>> s(n + 1, std::vector<unsigned long long>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

}  // namespace mvd
