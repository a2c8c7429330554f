#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/partition.hpp"

namespace modstab {

/// A permutation of {1, ..., n}, stored as its image list.
class Permutation {
 public:
  static Permutation identity(int n);

  /// Images of 1..n, in order. Throws ContractViolation unless a bijection.
  static Permutation from_images(std::vector<int> images);

  /// Product of the given cycles (1-based) on {1..n}; cycles must be disjoint.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  /// Cycles laid out consecutively on {1, ..., n}, largest cycle first.
  static Permutation representative(const CycleType& mu);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  std::span<const int> images() const { return images_; }

  CycleType cycle_type() const;

  /// (σ * τ)(i) = σ(τ(i)).
  friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

}  // namespace modstab
