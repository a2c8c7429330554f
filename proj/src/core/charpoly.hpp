#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/class_function.hpp"
#include "core/numeric.hpp"

namespace modstab {

/// Exponent multiset {m_k}: entry k-1 is the exponent attached to X_k.
/// Trailing zeros are never stored.
using Exponents = std::vector<int>;

/// Σ k·m_k, the graded degree with deg X_k = k.
int weight(const Exponents& e);

/// Display order: higher weight first, then lexicographically larger exponents.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A polynomial in the cycle-counting functions X_1, X_2, ..., stored in the
/// binomial basis Π_k C(X_k, m_k).
class CharacterPolynomial {
 public:
  using Terms = std::map<Exponents, Rational, TermOrder>;

  CharacterPolynomial() = default;
  static CharacterPolynomial constant(const Rational& c);
  /// C(X_k, m).
  static CharacterPolynomial binom(int k, int m);
  /// X_k.
  static CharacterPolynomial x(int k) { return binom(k, 1); }

  /// Interprets `power_terms` in the power basis Π X_k^{e_k}.
  static CharacterPolynomial from_power_basis(const Terms& power_terms);
  Terms to_power_basis() const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest weight of a term; -1 for the zero polynomial.
  int degree() const;
  /// Largest k with X_k present; 0 for constants.
  int max_cycle_length() const;
  bool has_integer_coefficients() const;

  void add_term(Exponents e, const Rational& c);

  /// Value at a permutation of cycle type μ (X_k ↦ m_k(μ)).
  Rational eval(const CycleType& mu) const;
  ClassFunction evaluate_on(int n) const;

  CharacterPolynomial& operator+=(const CharacterPolynomial& other);
  CharacterPolynomial& operator-=(const CharacterPolynomial& other);
  CharacterPolynomial& operator*=(const Rational& scalar);
  friend CharacterPolynomial operator+(CharacterPolynomial a, const CharacterPolynomial& b) { return a += b; }
  friend CharacterPolynomial operator-(CharacterPolynomial a, const CharacterPolynomial& b) { return a -= b; }
  friend CharacterPolynomial operator*(CharacterPolynomial a, const Rational& s) { return a *= s; }
  /// Product, computed through the power basis.
  friend CharacterPolynomial operator*(const CharacterPolynomial& a, const CharacterPolynomial& b);
  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;

  /// Canonical rendering, e.g. "binom(X1,2) + X2 - X1"; "0" when zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Renders one basis monomial: "1", "X2", "binom(X1,2)*X3".
std::string monomial_to_string(const Exponents& e);

/// Outcome of an exact fit.
struct FitResult {
  bool feasible = false;
  CharacterPolynomial polynomial;
  bool unique = false;
  /// Dimension of the solution space (0 when unique).
  std::size_t nullity = 0;
  /// Set when infeasible: an equation that cannot be satisfied, e.g. "n=5 at (3,2): value 7".
  std::optional<std::string> witness;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
};

/// All exponent vectors of weight <= d, in TermOrder.
std::vector<Exponents> monomials_up_to(int d);

/// The polynomial of degree <= d agreeing with every sample on every cycle type,
/// by exact linear solve in the binomial basis.
FitResult fit(std::span<const ClassFunction> samples, int d);

struct RecIdentityVerdict {
  bool identity_holds = false;
  bool p_degree_ok = false;
  bool q_degree_ok = false;
  CharacterPolynomial lhs;  // Q_i
  CharacterPolynomial rhs;  // P_i - (X_1 - 1) Q_{i-1}
  bool passed() const { return identity_holds && p_degree_ok && q_degree_ok; }
  std::string to_string() const;
};

/// Checks Q_i = P_i - (X_1 - 1)·Q_{i-1} as a polynomial identity, and deg P_i, deg Q_i <= 2i.
RecIdentityVerdict verify_rec_identity(int i, const CharacterPolynomial& p_i,
                                       const CharacterPolynomial& q_i,
                                       const CharacterPolynomial& q_prev);

struct ShortCycleVerdict {
  bool passed = true;
  std::optional<Exponents> witness;
  std::string to_string() const;
};

/// Every monomial uses only X_k with k <= bound.
ShortCycleVerdict short_cycle_dependence(const CharacterPolynomial& p, int bound);

}  // namespace modstab
