#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "core/arnold.hpp"
#include "core/characters.hpp"
#include "core/errors.hpp"

using namespace modstab;

namespace {

GeneratorFactor w(int a, int b) { return GeneratorFactor::make(a, b); }

// e_i(1, ..., m) by the product Π (1 + k t).
std::vector<Integer> elementary(int m) {
  std::vector<Integer> e{1};
  for (int k = 1; k <= m; ++k) {
    e.push_back(0);
    for (std::size_t i = e.size() - 1; i > 0; --i) e[i] += k * e[i - 1];
  }
  return e;
}

AlgebraElement random_element(int n, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgebraElement x(n, degree);
  for (const auto& m : basis(n, degree)) {
    int c = coeff(rng);
    if (c != 0) x.add(m, c);
  }
  return x;
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[k] = k + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

}  // namespace

TEST_CASE("generators") {
  CHECK(w(3, 1) == w(1, 3));
  CHECK_THROWS_AS(GeneratorFactor::make(2, 2), ContractViolation);
  Monomial m{w(1, 2), w(2, 3)};
  CHECK(m.is_normal_form());
  CHECK(m.max_index() == 3);
  CHECK(m.to_string() == "w(1,2)w(2,3)");
  CHECK(Monomial{}.to_string() == "1");
  CHECK_FALSE((Monomial{w(1, 3), w(2, 3)}.is_normal_form()));
}

TEST_CASE("basis examples") {
  CHECK(basis(3, 1) == std::vector<Monomial>{Monomial{w(1, 2)}, Monomial{w(1, 3)}, Monomial{w(2, 3)}});
  for (int n = 1; n <= 6; ++n) CHECK(basis(n, 0) == std::vector<Monomial>{Monomial{}});
  CHECK(basis(4, 2).size() == 11);
  CHECK(quotient_oracle(4, 2).dimension == 11);
}

TEST_CASE("basis counts are elementary symmetric functions") {
  for (int n = 1; n <= 9; ++n) {
    auto e = elementary(n - 1);
    for (int i = 0; i <= n + 1; ++i) {
      Integer expected = i < static_cast<int>(e.size()) ? e[i] : Integer(0);
      CHECK(Integer(basis(n, i).size()) == expected);
      for (const auto& m : basis(n, i)) CHECK(m.is_normal_form());
    }
  }
}

TEST_CASE("top vanishing") {
  for (int n = 1; n <= 8; ++n)
    for (int i = n; i <= n + 2; ++i) CHECK(basis(n, i).empty());
}

TEST_CASE("straightening examples") {
  CHECK(straighten(3, std::vector{w(1, 2), w(1, 2)}).is_zero());
  auto swapped = straighten(3, std::vector{w(1, 3), w(1, 2)});
  CHECK(swapped == AlgebraElement::from_monomial(3, Monomial{w(1, 2), w(1, 3)}, -1));
  auto rel = straighten(3, std::vector{w(1, 3), w(2, 3)});
  AlgebraElement expected(3, 2);
  expected.add(Monomial{w(1, 2), w(2, 3)}, 1);
  expected.add(Monomial{w(1, 2), w(1, 3)}, -1);
  CHECK(rel == expected);
  CHECK(rel.to_string() == "+1 w(1,2)w(2,3) -1 w(1,2)w(1,3)");
  CHECK(AlgebraElement(3, 2).to_string() == "0");
}

TEST_CASE("three-term relation vanishes") {
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          auto x = straighten(n, std::vector{w(i, j), w(j, k)}) + straighten(n, std::vector{w(j, k), w(k, i)}) +
                   straighten(n, std::vector{w(k, i), w(i, j)});
          CHECK(x.is_zero());
        }
}

TEST_CASE("straightening is idempotent on normal forms") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i < n; ++i)
      for (const auto& m : basis(n, i)) {
        CHECK(straighten(n, m.factors()) == AlgebraElement::from_monomial(n, m));
        CHECK(straighten_coefficient(m.factors(), m) == 1);
      }
}

TEST_CASE("straighten_coefficient agrees with straighten") {
  std::mt19937 rng(7);
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i <= 4; ++i)
      for (int trial = 0; trial < 30; ++trial) {
        Monomial word;
        std::uniform_int_distribution<int> point(1, n);
        for (int k = 0; k < i; ++k) {
          int a = point(rng), b = point(rng);
          while (b == a) b = point(rng);
          word.push_back(w(a, b));
        }
        auto full = straighten(n, word.factors());
        for (const auto& m : basis(n, i))
          CHECK(Rational(straighten_coefficient(word.factors(), m)) == full.coefficient(m));
      }
}

TEST_CASE("action examples") {
  std::mt19937 rng(11);
  auto x = random_element(4, 2, rng);
  CHECK(act(Permutation::identity(4), x) == x);
  auto w12 = AlgebraElement::from_monomial(3, Monomial{w(1, 2)});
  CHECK(act(Permutation::from_cycles(3, {{1, 2}}), w12) == w12);
  auto y = AlgebraElement::from_monomial(3, Monomial{w(1, 2), w(1, 3)});
  CHECK(act(Permutation::from_cycles(3, {{2, 3}}), y) == y * Rational(-1));
}

TEST_CASE("action is a group action") {
  std::mt19937 rng(2024);
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i < n; ++i)
      for (int trial = 0; trial < 4; ++trial) {
        auto x = random_element(n, i, rng);
        auto s = random_permutation(n, rng);
        auto t = random_permutation(n, rng);
        CHECK(act(s * t, x) == act(s, act(t, x)));
      }
}

TEST_CASE("character examples") {
  for (int n = 1; n <= 7; ++n) CHECK(character(n, 0) == ClassFunction::trivial(n));
  CHECK(character(4, 1).at_identity() == 6);
  CHECK(decompose(character(4, 1)).to_string() == "{(4):1, (3,1):1, (2,2):1}");
  CHECK(character(5, 2).at_identity() == elementary(4)[2]);
  CHECK(character(5, 2).at_identity() == 35);
  CHECK(character(5, 2) == quotient_oracle(5, 2).character);
}

TEST_CASE("first cohomology of configuration spaces") {
  for (int n = 4; n <= 9; ++n) {
    auto d = decompose(character(n, 1));
    IrrDecomposition expected(n);
    expected.add(Partition({n}), 1);
    expected.add(Partition({n - 1, 1}), 1);
    expected.add(Partition({n - 2, 2}), 1);
    CHECK(d == expected);
  }
}

TEST_CASE("characters are integral and traces match identity dimension") {
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i < n; ++i) {
      CHECK(character(n, i).is_integral());
      CHECK(character(n, i).at_identity() == Rational(basis(n, i).size()));
      decompose(character(n, i));
    }
}

TEST_CASE("quotient oracle examples") {
  for (int n = 1; n <= 5; ++n) CHECK(quotient_oracle(n, 0).dimension == 1);
  auto q = quotient_oracle(3, 1);
  CHECK(q.dimension == 3);
  // Degree one is the permutation module on 2-subsets: count fixed pairs.
  for (const auto& mu : partitions(3)) {
    auto s = Permutation::representative(mu);
    int fixed = 0;
    for (int a = 1; a <= 3; ++a)
      for (int b = a + 1; b <= 3; ++b)
        if (std::min(s(a), s(b)) == a && std::max(s(a), s(b)) == b) ++fixed;
    CHECK(q.character(mu) == fixed);
  }
  CHECK(q.character(Partition({1, 1, 1})) == 3);
  CHECK(q.character(Partition({2, 1})) == 1);
  CHECK(q.character(Partition({3})) == 0);
}

TEST_CASE("basis and quotient oracle agree") {
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= n; ++i) {
      auto q = quotient_oracle(n, i);
      CHECK(q.dimension == basis(n, i).size());
      CHECK(q.character == character(n, i));
    }
}

TEST_CASE("quotient oracle budget") {
  CHECK_THROWS_AS(quotient_oracle(7, 1), BudgetExceeded);
  CHECK_THROWS_AS(quotient_oracle(5, 1, 4), BudgetExceeded);
}
