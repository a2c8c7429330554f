#include <algorithm>
#include <map>
#include <numeric>

#include "core/arnold.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "core/moduli.hpp"

namespace modstab {

namespace {

class Coordinates {
 public:
  Coordinates(int n, int degree) : n_(n), degree_(degree), basis_(basis(n, degree)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
  }

  std::size_t size() const { return basis_.size(); }

  SparseVector of(const AlgebraElement& x) const {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [m, c] : x.terms()) entries.emplace_back(index_.at(m), c);
    return make_sparse(std::move(entries));
  }

  AlgebraElement element(const SparseVector& v) const {
    AlgebraElement x(n_, degree_);
    for (const auto& [column, c] : v) x.add(basis_[column], c);
    return x;
  }

 private:
  int n_;
  int degree_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// θ_{i,j} = ω_{i,j} - ω_{1,2} as a list of signed generators.
using ThetaTerms = std::vector<std::pair<GeneratorFactor, int>>;

ThetaTerms theta(int i, int j) {
  return {{GeneratorFactor::make(i, j), +1}, {GeneratorFactor::make(1, 2), -1}};
}

AlgebraElement theta_product(int n, const std::vector<ThetaTerms>& factors) {
  const int degree = static_cast<int>(factors.size());
  AlgebraElement out(n, degree);
  std::vector<std::size_t> choice(degree, 0);
  while (true) {
    Monomial word;
    int sign = 1;
    for (int k = 0; k < degree; ++k) {
      word.push_back(factors[k][choice[k]].first);
      sign *= factors[k][choice[k]].second;
    }
    out += straighten(n, word.factors()) * Rational(sign);
    int k = degree - 1;
    while (k >= 0 && ++choice[k] == factors[k].size()) choice[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace

ThetaResult theta_subalgebra_oracle(int n, int degree, int max_n) {
  if (n < 2 || degree < 0) throw ContractViolation("theta_subalgebra_oracle needs n >= 2 and degree >= 0");
  if (n > max_n)
    throw BudgetExceeded("theta_subalgebra_oracle refuses n = " + std::to_string(n) +
                         " above the configured bound " + std::to_string(max_n));
  if (degree == 0) return {1, ClassFunction::trivial(n)};

  std::vector<ThetaTerms> generators;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(i == 1 && j == 2)) generators.push_back(theta(i, j));

  const Coordinates coords(n, degree);
  EchelonBasis span(coords.size());
  if (degree <= static_cast<int>(generators.size())) {
    // Products over increasing index tuples; other orderings only change sign.
    std::vector<int> pick(degree);
    std::iota(pick.begin(), pick.end(), 0);
    const int g = static_cast<int>(generators.size());
    while (true) {
      std::vector<ThetaTerms> factors;
      for (int p : pick) factors.push_back(generators[p]);
      span.insert(coords.of(theta_product(n, factors)));
      int k = degree - 1;
      while (k >= 0 && pick[k] == g - degree + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int j = k + 1; j < degree; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  ThetaResult result;
  result.dimension = span.rank();
  result.character = ClassFunction::from(n, [&](const CycleType& mu) {
    const Permutation sigma = Permutation::representative(mu);
    Rational trace = 0;
    std::vector<Rational> coordinates;
    for (std::size_t r = 0; r < span.rank(); ++r) {
      const AlgebraElement image = act(sigma, coords.element(span.rows()[r]));
      const SparseVector remainder = span.reduce(coords.of(image), coordinates);
      if (!remainder.empty())
        throw VerificationFailure("θ-subalgebra is not S_n-stable at cycle type " + mu.to_string());
      trace += coordinates[r];
    }
    return trace;
  });
  return result;
}

}  // namespace modstab
