#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/class_function.hpp"
#include "core/numeric.hpp"
#include "core/permutation.hpp"

namespace modstab {

/// The generator ω_{a,b} of the Arnold algebra, always stored with a < b.
struct GeneratorFactor {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  /// ω_{i,j} = ω_{j,i}; throws ContractViolation when i == j or an index is out of range.
  static GeneratorFactor make(int i, int j);

  friend bool operator==(const GeneratorFactor&, const GeneratorFactor&) = default;
  friend auto operator<=>(const GeneratorFactor&, const GeneratorFactor&) = default;
};

/// A word ω_{a1,b1} ... ω_{ak,bk} of generators with fixed inline capacity.
/// Words satisfying is_normal_form() are the basis monomials.
class Monomial {
 public:
  static constexpr int kCapacity = 24;

  Monomial() = default;
  Monomial(std::initializer_list<GeneratorFactor> factors);
  explicit Monomial(std::span<const GeneratorFactor> factors);

  int degree() const { return size_; }
  const GeneratorFactor& operator[](int k) const { return factors_[k]; }
  GeneratorFactor& operator[](int k) { return factors_[k]; }
  std::span<const GeneratorFactor> factors() const { return {factors_.data(), static_cast<std::size_t>(size_)}; }
  void push_back(GeneratorFactor f);

  /// Second indices strictly increasing.
  bool is_normal_form() const;
  /// Largest index used, 0 for the empty word.
  int max_index() const;

  /// "w(1,2)w(2,3)"; the empty word renders as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return std::equal(x.factors().begin(), x.factors().end(), y.factors().begin(), y.factors().end());
  }
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    return std::lexicographical_compare_three_way(x.factors().begin(), x.factors().end(),
                                                  y.factors().begin(), y.factors().end());
  }

 private:
  std::array<GeneratorFactor, kCapacity> factors_{};
  int size_ = 0;
};

using NbcMonomial = Monomial;

/// A homogeneous element of the Arnold algebra R_n: a sparse rational
/// combination of normal-form monomials of one degree.
class AlgebraElement {
 public:
  AlgebraElement(int n, int degree);

  static AlgebraElement from_monomial(int n, const Monomial& m, const Rational& coefficient = 1);

  int ambient() const { return n_; }
  int degree() const { return degree_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Adds c·m for a normal-form monomial m of this element's degree.
  void add(const Monomial& m, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& scalar);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) {
    return x += y * Rational(-1);
  }
  friend AlgebraElement operator*(AlgebraElement x, const Rational& s) { return x *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// "+1 w(1,2)w(2,3) -1 w(1,2)w(1,3)", terms in decreasing monomial order; "0" when empty.
  std::string to_string() const;

 private:
  int n_;
  int degree_;
  std::map<Monomial, Rational> terms_;
};

/// Normal-form monomials of degree i in R_n, in increasing lexicographic order.
std::vector<Monomial> basis(int n, int degree);

/// Rewrites a word of generators into the normal-form basis of R_n.
AlgebraElement straighten(int n, std::span<const GeneratorFactor> word);

/// Coefficient of the normal-form monomial `target` in straighten(word),
/// without materializing the other terms.
long straighten_coefficient(std::span<const GeneratorFactor> word, const Monomial& target);

/// σ·x, relabelling every ω_{a,b} to ω_{σ(a),σ(b)} and straightening.
AlgebraElement act(const Permutation& sigma, const AlgebraElement& x);

/// Character of S_n on H^i(F(C, n)) = degree-i part of R_n. Memoized and
/// evaluated concurrently across cycle types.
const ClassFunction& character(int n, int degree);

/// Dimension and character of R_n in degree i computed as the quotient of the
/// exterior algebra on the ω's by the ideal of the three-term relations, with
/// exact elimination. Refuses n > max_n.
struct QuotientResult {
  std::size_t dimension = 0;
  ClassFunction character;
};
QuotientResult quotient_oracle(int n, int degree, int max_n = 6);

}  // namespace modstab
