#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "core/numeric.hpp"

namespace modstab {

/// An integer partition: weakly decreasing positive parts.
///
/// The same type doubles as a cycle type of a permutation, where part k is a
/// cycle length and multiplicity(k) is the number of k-cycles.
class Partition {
 public:
  Partition() = default;

  /// Throws ContractViolation unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts the parts first; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t k) const { return parts_[k]; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// m_k: the number of parts equal to k.
  int multiplicity(int k) const;

  /// Multiset union; for cycle types this is the class of the product of
  /// commuting permutations on disjoint supports.
  Partition merged(const Partition& other) const;

  /// λ with its first row removed.
  Partition without_first_row() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using CycleType = Partition;

/// Orders partitions of equal size reverse-lexicographically: (n) first, (1^n) last.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in reverse lexicographic order; partitions(0) = {()}.
std::vector<Partition> partitions(int n);

/// Cached form of partitions(n); the reference stays valid for the process lifetime.
const std::vector<Partition>& partitions_cached(int n);

/// Position of λ in partitions_cached(|λ|).
std::size_t partition_index(const Partition& lambda);

/// z_μ = Π k^{m_k} m_k!, the centralizer order.
Integer centralizer_order(const CycleType& mu);

/// Number of permutations of cycle type μ, n!/z_μ.
Integer class_size(const CycleType& mu);

/// λ[n] = (n - |λ|, λ_1, ..., λ_l). Requires n >= |λ| + λ_1.
Partition pad(const Partition& lambda, int n);

/// Partitions obtained by removing one removable corner, in reverse lex order.
std::vector<Partition> branch_restrict(const Partition& lambda);

}  // namespace modstab
