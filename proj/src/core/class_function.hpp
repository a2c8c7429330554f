#pragma once

#include <functional>
#include <span>
#include <vector>

#include "core/numeric.hpp"
#include "core/partition.hpp"

namespace modstab {

/// An exact rational-valued class function on S_n, one value per cycle type,
/// stored in the reverse lexicographic order of partitions_cached(n).
class ClassFunction {
 public:
  /// The zero class function on S_n.
  explicit ClassFunction(int n = 0);
  ClassFunction(int n, std::vector<Rational> values);

  static ClassFunction trivial(int n);
  static ClassFunction from(int n, const std::function<Rational(const CycleType&)>& value);

  int degree() const { return n_; }
  const std::vector<Partition>& classes() const { return partitions_cached(n_); }
  std::size_t size() const { return values_.size(); }

  const Rational& operator()(const CycleType& mu) const;
  const Rational& at(std::size_t index) const { return values_[index]; }
  Rational& at(std::size_t index) { return values_[index]; }
  std::span<const Rational> values() const { return values_; }

  /// Value at the identity class (1^n), i.e. the dimension for a character.
  const Rational& at_identity() const { return values_.back(); }

  bool is_integral() const;
  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  /// Pointwise product.
  ClassFunction& operator*=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scalar);

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  void require_same_degree(const ClassFunction& other) const;

  int n_;
  std::vector<Rational> values_;
};

/// ⟨χ, ψ⟩ = (1/n!) Σ_μ |class μ| χ(μ) ψ(μ). Both are real-valued, so no conjugation.
Rational inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// The class function μ ↦ m_1(μ) - 1 (the virtual character X_1 - 1).
ClassFunction fixed_points_minus_one(int n);

}  // namespace modstab
