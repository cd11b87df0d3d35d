#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mvd {

/// Enumerates the set partitions of {0..n-1} into exactly k nonempty classes
/// as restricted growth strings a[0..n-1] (a[0] = 0, a[i] <= 1 + max a[<i]),
/// in lexicographic order.
///
///   RestrictedGrowthPartitions p(4, 2);
///   do { use(p.current()); } while (p.next());
class RestrictedGrowthPartitions {
 public:
  /// Requires 1 <= k <= n, or n == k == 0.
  RestrictedGrowthPartitions(std::size_t n, std::size_t k);

  std::span<const std::size_t> current() const noexcept { return string_; }
  /// Advances to the next partition; false once the sequence is exhausted.
  bool next();

 private:
  void fill_from(std::size_t position);

  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> string_;
  std::vector<std::size_t> prefix_max_;  // max of string_[0..i]
};

/// Stirling number of the second kind S(n, k).
unsigned long long stirling2(std::size_t n, std::size_t k);

}  // namespace mvd
