// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// With arguments, runs only the listed criterion numbers.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core/arnold.hpp"
#include "core/characters.hpp"
#include "core/charpoly.hpp"
#include "core/fistab.hpp"
#include "core/moduli.hpp"

using namespace modstab;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) notes << what;
    else if (notes.tellp() < 400) notes << "; " << what;
    passed = false;
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no runtime limit
  std::function<void(Outcome&)> body;
};

std::string at(int n, int i) { return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")"; }

std::map<Partition, Integer> unpadded(const IrrDecomposition& d) {
  std::map<Partition, Integer> out;
  for (const auto& [lambda, m] : d.multiplicities()) out[lambda.without_first_row()] = m;
  return out;
}

Rational lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x) {
  Rational total = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Rational term = ys[k];
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != k) term *= (x - xs[j]) / (xs[k] - xs[j]);
    total += term;
  }
  return total;
}

CharacterPolynomial fitted(Outcome& out, std::function<ClassFunction(int)> f, int lo, int hi, int d,
                           const std::string& name) {
  std::vector<ClassFunction> s;
  for (int n = lo; n <= hi; ++n) s.push_back(f(n));
  auto r = fit(s, d);
  out.require(r.feasible && r.unique, name + " fit not unique");
  return r.polynomial;
}

ClassFunction moduli_chi(int n, int i) { return moduli_character(n, i).chi; }
ClassFunction shifted_chi(int n, int i) { return shifted_character(n, i).chi; }

void h1_identification(Outcome& out) {
  for (int n = 4; n <= 10; ++n) {
    IrrDecomposition expected(n);
    expected.add(Partition({n - 2, 2}), 1);
    auto got = decompose(moduli_chi(n, 1));
    out.require(got == expected, "n=" + std::to_string(n) + " got " + got.to_string());
  }
}

void character_polynomials(Outcome& out) {
  using P = CharacterPolynomial;
  auto q = fitted(out, [](int n) { return moduli_chi(n, 1); }, 4, 8, 2, "Q_1");
  auto p = fitted(out, [](int n) { return shifted_chi(n, 1); }, 4, 8, 2, "P_1");
  out.require(q == P::binom(1, 2) + P::x(2) - P::x(1), "Q_1 = " + q.to_string());
  out.require(p == P::binom(1, 2) + P::x(2) - P::constant(1), "P_1 = " + p.to_string());
  for (int n = 9; n <= 10; ++n) {
    out.require(q.evaluate_on(n) == moduli_chi(n, 1), "Q_1 misses n=" + std::to_string(n));
    out.require(p.evaluate_on(n) == shifted_chi(n, 1), "P_1 misses n=" + std::to_string(n));
  }
}

void oracle_equivalence(Outcome& out) {
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i <= n; ++i) {
      auto q = quotient_oracle(n, i);
      out.require(q.dimension == basis(n, i).size(), "dimension " + at(n, i));
      out.require(q.character == character(n, i), "character " + at(n, i));
    }
  for (int n = 3; n <= 6; ++n)
    for (int i = 0; i <= 2; ++i)
      out.require(theta_subalgebra_oracle(n, i).character == shifted_chi(n, i), "theta " + at(n, i));
}

void splitting_restriction(Outcome& out) {
  for (int n = 3; n <= 12; ++n)
    for (int i = 0; i <= 3; ++i) {
      auto sum = shifted_chi(n, i);
      if (i > 0) sum += shifted_chi(n, i - 1);
      out.require(character(n, i) == sum, "splitting " + at(n, i));
    }
  for (int n = 3; n <= 11; ++n)
    for (int i = 0; i <= 2; ++i) {
      auto v = restriction_check(n, i);
      out.require(v.character_level, "restriction " + at(n, i));
      out.require(v.branching_level, "branching " + at(n, i));
    }
}

void uniform_stability(Outcome& out) {
  auto reference = unpadded(decompose(moduli_chi(10, 2)));
  for (int n = 11; n <= 13; ++n) {
    auto rows = unpadded(decompose(moduli_chi(n, 2)));
    out.require(rows == reference, "rows at n=" + std::to_string(n) + " differ from n=10");
  }
}

void bounds(Outcome& out) {
  for (int i = 0; i <= 2; ++i)
    for (int n = 3; n <= 13; ++n) {
      auto m = decompose(moduli_chi(n, i));
      for (const auto& [lambda, mult] : m.multiplicities())
        out.require(lambda.size() - lambda.first() <= 2 * i + 1, "M weight " + at(n, i) + " " + lambda.to_string());
      out.require(length_of(m) <= 2 * i + 1, "M length " + at(n, i) + " = " + std::to_string(length_of(m)));
      if (n > 2 * i + 2)
        out.require(m.multiplicity(Partition(std::vector<int>(n, 1))) == 0, "M alternating " + at(n, i));

      auto s = decompose(shifted_chi(n, i));
      for (const auto& [lambda, mult] : s.multiplicities())
        out.require(lambda.size() - lambda.first() <= 2 * i + 1, "Mshift weight " + at(n, i) + " " + lambda.to_string());
      out.require(length_of(s) <= 2 * i, "Mshift length " + at(n, i) + " = " + std::to_string(length_of(s)));
    }
}

void recursion_identity(Outcome& out) {
  std::vector<CharacterPolynomial> q(3), p(3);
  for (int i = 0; i <= 2; ++i) {
    int lo = std::max(3, 4 * i + 2);
    q[i] = fitted(out, [i](int n) { return moduli_chi(n, i); }, lo, lo + 3, 2 * i, "Q_" + std::to_string(i));
    p[i] = fitted(out, [i](int n) { return shifted_chi(n, i); }, lo, lo + 3, 2 * i, "P_" + std::to_string(i));
  }
  out.require(q[0] == CharacterPolynomial::constant(1) && p[0] == q[0], "Q_0 = P_0 = 1");
  for (int i = 1; i <= 2; ++i) {
    auto rhs = p[i] - (CharacterPolynomial::x(1) - CharacterPolynomial::constant(1)) * q[i - 1];
    out.require(q[i] == rhs, "identity at i=" + std::to_string(i) + ": " + q[i].to_string() + " vs " + rhs.to_string());
    out.require(q[i].degree() <= 2 * i, "deg Q_" + std::to_string(i));
  }
}

void poincare_polynomiality(Outcome& out) {
  for (int i = 1; i <= 2; ++i) {
    std::vector<Rational> xs, ys;
    for (int n = 4; n < 4 + 2 * i + 1; ++n) {
      xs.emplace_back(n);
      ys.push_back(moduli_chi(n, i).at_identity());
    }
    for (int n = 4 + 2 * i + 1; n <= 4 + 2 * i + 2; ++n)
      out.require(lagrange(xs, ys, n) == moduli_chi(n, i).at_identity(), "held-out " + at(n, i));
  }
}

void coinvariant_stabilization(Outcome& out) {
  const int n_max = 12;
  for (int i = 0; i <= 1; ++i)
    for (int a = 0; a <= 2; ++a) {
      struct Family {
        const char* name;
        ClassFunction (*chi)(int, int);
        int from;
      };
      for (const Family& f : {Family{"M", moduli_chi, 4 * i + a}, Family{"Mshift", shifted_chi, 2 * i + a}}) {
        int start = std::max(3, f.from);
        auto reference = coinvariant_character(f.chi(n_max, i), a);
        for (int n = start; n < n_max; ++n)
          out.require(coinvariant_character(f.chi(n, i), a) == reference,
                      std::string(f.name) + " coinvariants " + at(n, i) + " a=" + std::to_string(a));
      }
    }
}

void symmetric_group_core(Outcome& out) {
  for (int n = 0; n <= 8; ++n) {
    const auto& ps = partitions(n);
    Integer squares = 0;
    for (std::size_t a = 0; a < ps.size(); ++a) {
      squares += dimension(ps[a]) * dimension(ps[a]);
      for (std::size_t b = 0; b < ps.size(); ++b)
        out.require(inner_product(irreducible_character(ps[a]), irreducible_character(ps[b])) == (a == b ? 1 : 0),
                    "orthogonality " + ps[a].to_string() + ps[b].to_string());
    }
    out.require(squares == factorial(n), "column sum n=" + std::to_string(n));
    if (n == 0) continue;
    for (const auto& lambda : ps)
      for (const auto& mu : partitions(n - 1)) {
        Integer sum = 0;
        for (const auto& nu : branch_restrict(lambda)) sum += mn_character(nu, mu);
        out.require(mn_character(lambda, mu.merged(Partition({1}))) == sum, "branching " + lambda.to_string());
      }
  }
  for (int n = 1; n <= 6; ++n) {
    auto reg = ClassFunction::from(n, [n](const CycleType& mu) -> Rational {
      return mu.multiplicity(1) == n ? Rational(factorial(n)) : Rational(0);
    });
    auto d = decompose(reg);
    for (const auto& lambda : partitions(n))
      out.require(d.multiplicity(lambda) == dimension(lambda), "regular " + lambda.to_string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
  const std::vector<Criterion> criteria{
      {1, "H^1 identification", 5, h1_identification},
      {2, "character polynomials", 5, character_polynomials},
      {3, "oracle equivalence", 60, oracle_equivalence},
      {4, "splitting and restriction", 120, splitting_restriction},
      {5, "uniform stability at i = 2", 300, uniform_stability},
      {6, "weight, length and alternating bounds", 0, bounds},
      {7, "recursion identity on polynomials", 0, recursion_identity},
      {8, "Poincare polynomiality", 0, poincare_polynomiality},
      {9, "coinvariant stabilization", 0, coinvariant_stabilization},
      {10, "symmetric group core", 0, symmetric_group_core},
  };
  int failures = 0;
  int run = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    ++run;
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds)
      out.require(false, "runtime " + std::to_string(seconds) + " s over limit");
    if (!out.passed) ++failures;
    std::printf("%s [%d] %s (%.2f s)%s%s\n", out.passed ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                out.passed ? "" : ": ", out.notes.str().c_str());
  }
  std::printf("%d/%d criteria passed\n", run - failures, run);
  return failures == 0 ? 0 : 1;
}
