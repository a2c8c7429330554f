#include "core/charpoly.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "core/partition.hpp"

namespace modstab {

int weight(const Exponents& e) {
  int w = 0;
  for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<int>(k + 1) * e[k];
  return w;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa != wb) return wa > wb;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < len; ++k) {
    const int x = k < a.size() ? a[k] : 0;
    const int y = k < b.size() ? b[k] : 0;
    if (x != y) return x > y;
  }
  return false;
}

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

// Coefficients of C(X, m) in powers of X.
std::vector<Rational> binomial_in_powers(int m) {
  std::vector<Rational> poly{Rational(1)};
  for (int r = 0; r < m; ++r) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * r;
    }
    poly = std::move(next);
  }
  const Rational scale = Rational(1) / Rational(factorial(m));
  for (auto& c : poly) c *= scale;
  return poly;
}

// Coefficients of X^e in the basis C(X, j): S(e, j)·j!.
std::vector<Rational> power_in_binomials(int e) {
  // Stirling numbers of the second kind, row e.
  std::vector<Integer> row{Integer(1)};
  for (int r = 1; r <= e; ++r) {
    std::vector<Integer> next(r + 1, Integer(0));
    for (int j = 1; j <= r; ++j) {
      next[j] = Integer(j) * (j < static_cast<int>(row.size()) ? row[j] : Integer(0)) + row[j - 1];
    }
    row = std::move(next);
  }
  std::vector<Rational> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = Rational(row[j] * factorial(static_cast<int>(j)));
  return out;
}

using Expansion = std::vector<Rational> (*)(int);

// Applies a per-variable change of basis to every term.
CharacterPolynomial::Terms change_basis(const CharacterPolynomial::Terms& terms, Expansion expand) {
  CharacterPolynomial::Terms out;
  for (const auto& [e, c] : terms) {
    std::vector<std::pair<Exponents, Rational>> partial{{Exponents(e.size(), 0), c}};
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      const auto coefficients = expand(e[k]);
      std::vector<std::pair<Exponents, Rational>> next;
      for (const auto& [prefix, value] : partial) {
        for (std::size_t j = 0; j < coefficients.size(); ++j) {
          if (coefficients[j] == 0) continue;
          Exponents grown = prefix;
          grown[k] = static_cast<int>(j);
          next.emplace_back(std::move(grown), value * coefficients[j]);
        }
      }
      partial = std::move(next);
    }
    for (auto& [exponents, value] : partial) {
      trim(exponents);
      auto& slot = out[exponents];
      slot += value;
      if (slot == 0) out.erase(exponents);
    }
  }
  return out;
}

Rational eval_term(const Exponents& e, const CycleType& mu) {
  Integer product = 1;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    product *= binomial(mu.multiplicity(static_cast<int>(k + 1)), e[k]);
    if (product == 0) break;
  }
  return Rational(product);
}

}  // namespace

CharacterPolynomial CharacterPolynomial::constant(const Rational& c) {
  CharacterPolynomial p;
  p.add_term({}, c);
  return p;
}

CharacterPolynomial CharacterPolynomial::binom(int k, int m) {
  if (k < 1 || m < 0) throw ContractViolation("binom(X_k, m) needs k >= 1 and m >= 0");
  Exponents e(k, 0);
  e[k - 1] = m;
  CharacterPolynomial p;
  p.add_term(std::move(e), 1);
  return p;
}

CharacterPolynomial CharacterPolynomial::from_power_basis(const Terms& power_terms) {
  CharacterPolynomial p;
  p.terms_ = change_basis(power_terms, &power_in_binomials);
  return p;
}

CharacterPolynomial::Terms CharacterPolynomial::to_power_basis() const {
  return change_basis(terms_, &binomial_in_powers);
}

int CharacterPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, weight(e));
  return d;
}

int CharacterPolynomial::max_cycle_length() const {
  std::size_t k = 0;
  for (const auto& [e, c] : terms_) k = std::max(k, e.size());
  return static_cast<int>(k);
}

bool CharacterPolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

void CharacterPolynomial::add_term(Exponents e, const Rational& c) {
  for (int m : e)
    if (m < 0) throw ContractViolation("negative exponent in character polynomial");
  trim(e);
  if (c == 0) return;
  auto& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

Rational CharacterPolynomial::eval(const CycleType& mu) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += c * eval_term(e, mu);
  return total;
}

ClassFunction CharacterPolynomial::evaluate_on(int n) const {
  return ClassFunction::from(n, [&](const CycleType& mu) { return eval(mu); });
}

CharacterPolynomial& CharacterPolynomial::operator+=(const CharacterPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator-=(const CharacterPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) terms_.clear();
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

CharacterPolynomial operator*(const CharacterPolynomial& a, const CharacterPolynomial& b) {
  const auto pa = a.to_power_basis();
  const auto pb = b.to_power_basis();
  CharacterPolynomial::Terms product;
  for (const auto& [ea, ca] : pa) {
    for (const auto& [eb, cb] : pb) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      auto& slot = product[e];
      slot += ca * cb;
      if (slot == 0) product.erase(e);
    }
  }
  return CharacterPolynomial::from_power_basis(product);
}

std::string monomial_to_string(const Exponents& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    const std::string var = "X" + std::to_string(k + 1);
    out += e[k] == 1 ? var : "binom(" + var + "," + std::to_string(e[k]) + ")";
  }
  return out.empty() ? "1" : out;
}

std::string CharacterPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    const std::string mono = monomial_to_string(e);
    if (e.empty()) out += modstab::to_string(magnitude);
    else if (magnitude == 1) out += mono;
    else out += modstab::to_string(magnitude) + "*" + mono;
  }
  return out;
}

std::vector<Exponents> monomials_up_to(int d) {
  std::vector<Exponents> out;
  for (int w = 0; w <= d; ++w) {
    for (const auto& lambda : partitions(w)) {
      Exponents e(lambda.first(), 0);
      for (int part : lambda.parts()) ++e[part - 1];
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), TermOrder{});
  return out;
}

FitResult fit(std::span<const ClassFunction> samples, int d) {
  if (d < 0) throw ContractViolation("fit needs a nonnegative degree bound");
  FitResult result;
  const auto unknowns = monomials_up_to(d);
  result.unknowns = unknowns.size();
  const std::size_t rhs = unknowns.size();
  EchelonBasis system(rhs + 1);
  for (const auto& chi : samples) {
    const auto& classes = chi.classes();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (std::size_t u = 0; u < unknowns.size(); ++u) row.emplace_back(u, eval_term(unknowns[u], classes[k]));
      row.emplace_back(rhs, chi.at(k));
      ++result.equations;
      if (system.insert(make_sparse(std::move(row))) == rhs) {
        result.witness = "no polynomial of degree <= " + std::to_string(d) + " fits: n=" +
                         std::to_string(chi.degree()) + " at " + classes[k].to_string() + ": value " +
                         modstab::to_string(chi.at(k));
        return result;
      }
    }
  }
  result.feasible = true;
  result.nullity = unknowns.size() - system.rank();
  result.unique = result.nullity == 0;
  const auto solution = system.back_substitute();
  for (std::size_t u = 0; u < unknowns.size(); ++u) result.polynomial.add_term(unknowns[u], solution[u]);
  return result;
}

RecIdentityVerdict verify_rec_identity(int i, const CharacterPolynomial& p_i,
                                       const CharacterPolynomial& q_i,
                                       const CharacterPolynomial& q_prev) {
  RecIdentityVerdict v;
  v.lhs = q_i;
  v.rhs = p_i - (CharacterPolynomial::x(1) - CharacterPolynomial::constant(1)) * q_prev;
  v.identity_holds = v.lhs == v.rhs;
  v.p_degree_ok = p_i.degree() <= 2 * i;
  v.q_degree_ok = q_i.degree() <= 2 * i;
  return v;
}

std::string RecIdentityVerdict::to_string() const {
  std::string out = passed() ? "pass" : "FAIL";
  out += ": Q = " + lhs.to_string() + "; P - (X1 - 1)*Q_prev = " + rhs.to_string();
  if (!p_degree_ok) out += "; deg P exceeds 2i";
  if (!q_degree_ok) out += "; deg Q exceeds 2i";
  return out;
}

ShortCycleVerdict short_cycle_dependence(const CharacterPolynomial& p, int bound) {
  ShortCycleVerdict v;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(e.size()) > bound) {
      v.passed = false;
      v.witness = e;
      return v;
    }
  }
  return v;
}

std::string ShortCycleVerdict::to_string() const {
  if (passed) return "pass";
  return "FAIL: monomial " + monomial_to_string(*witness) + " uses a cycle longer than the bound";
}

}  // namespace modstab
