#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "core/characters.hpp"
#include "core/errors.hpp"
#include "core/fistab.hpp"
#include "core/moduli.hpp"
#include "core/permutation.hpp"

using namespace modstab;

namespace {

// Orbits of S_{n-a} (on a+1..n) acting on the k-subsets of {1..n}; returns the
// S_a-character value at g of the invariant space: the number of orbits g fixes.
int fixed_orbits(int n, int a, int k, const Permutation& g) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> s;
    for (int p = 0; p < n; ++p)
      if (pick[p]) s.push_back(p + 1);
    subsets.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  auto index = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::find(subsets.begin(), subsets.end(), s) - subsets.begin());
  };
  std::vector<std::size_t> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  auto image = [&](const std::vector<int>& s, auto&& f) {
    std::vector<int> t;
    for (int p : s) t.push_back(f(p));
    return index(t);
  };
  for (int c = a + 1; c < n; ++c)
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      auto swapped = image(subsets[s], [&](int p) { return p == c ? c + 1 : p == c + 1 ? c : p; });
      parent[root(s)] = root(swapped);
    }
  std::vector<std::size_t> roots;
  for (std::size_t s = 0; s < subsets.size(); ++s) roots.push_back(root(s));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  int fixed = 0;
  for (auto r : roots)
    if (root(image(subsets[r], [&](int p) { return p <= a ? g(p) : p; })) == r) ++fixed;
  return fixed;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(family_name(Family::Moduli) == "M");
  CHECK(family_name(Family::ShiftedModuli) == "Mshift");
  CHECK(family_name(Family::Configuration) == "F");
  CHECK(parse_family("Mshift") == Family::ShiftedModuli);
  CHECK_THROWS_AS(parse_family("X"), ContractViolation);
  CHECK(family_min_n(Family::Configuration) == 1);
  CHECK(family_min_n(Family::Moduli) == 3);
}

TEST_CASE("moduli multiplicity tables") {
  auto r1 = moduli_multiplicity_table(1, 4, 10);
  REQUIRE(r1.rows.size() == 1);
  REQUIRE(r1.rows.count(Partition({2})) == 1);
  for (const auto& m : r1.rows.at(Partition({2}))) CHECK(m == Integer(1));
  CHECK(r1.onset == 4);
  CHECK(r1.passed());

  auto r0 = moduli_multiplicity_table(0, 5, 9);
  REQUIRE(r0.rows.size() == 1);
  for (const auto& m : r0.rows.at(Partition())) CHECK(m == Integer(1));
  CHECK(r0.onset == 5);

  auto r2 = moduli_multiplicity_table(2, 6, 13);
  REQUIRE(r2.onset.has_value());
  CHECK(*r2.onset <= 10);
  for (const auto& [lambda, row] : r2.rows)
    for (std::size_t k = 0; k < r2.ns.size(); ++k)
      if (r2.ns[k] >= 10) CHECK(r2.multiplicity(lambda, r2.ns[k]) == r2.multiplicity(lambda, 10));
  CHECK(r2.weight_ok);
  CHECK(r2.length_ok);
  CHECK(r2.alternating_ok);
  CHECK(r2.range_ok == true);
}

TEST_CASE("shifted multiplicity tables") {
  auto r1 = shifted_multiplicity_table(1, 4, 10);
  CHECK(r1.rows.size() == 2);
  for (const auto& lambda : {Partition({1}), Partition({2})})
    for (const auto& m : r1.rows.at(lambda)) CHECK(m == Integer(1));

  auto r0 = shifted_multiplicity_table(0, 4, 8);
  CHECK(r0.rows.size() == 1);
  CHECK(r0.rows.count(Partition()) == 1);

  auto r2 = shifted_multiplicity_table(2, 6, 12);
  REQUIRE(r2.onset.has_value());
  CHECK(*r2.onset <= 10);
}

TEST_CASE("undefined padding is reported as missing") {
  auto r = moduli_multiplicity_table(2, 5, 8);
  for (const auto& [lambda, row] : r.rows)
    for (std::size_t k = 0; k < r.ns.size(); ++k)
      if (r.ns[k] < lambda.size() + lambda.first()) CHECK_FALSE(row[k].has_value());
}

TEST_CASE("cross-family consistency") {
  for (int i = 0; i <= 2; ++i)
    for (int n = std::max(3, 4 * i + 2); n <= 11; ++n) {
      auto direct = decompose(shifted_character(n, i).chi);
      auto branched = restrict_decomposition(decompose(moduli_character(n + 1, i).chi));
      CHECK(direct == branched);
    }
}

TEST_CASE("coinvariant character examples") {
  for (int a = 0; a <= 4; ++a) CHECK(coinvariant_character(ClassFunction::trivial(6), a) == ClassFunction::trivial(a));
  auto chi = moduli_character(7, 2).chi;
  auto zero = coinvariant_character(chi, 0);
  CHECK(zero.size() == 1);
  CHECK(zero.at(0) == inner_product(chi, ClassFunction::trivial(7)));
  CHECK_THROWS_AS(coinvariant_character(chi, 8), ContractViolation);
}

TEST_CASE("coinvariants of the first moduli cohomology against orbit counts") {
  // H^1(M_{0,n}) = V(2)_n is the 2-subset permutation module minus the point permutation module.
  for (int n = 6; n <= 10; ++n) {
    auto c = coinvariant_character(moduli_character(n, 1).chi, 2);
    for (const auto& nu : partitions(2)) {
      auto g = Permutation::representative(nu);
      CHECK(c(nu) == fixed_orbits(n, 2, 2, g) - fixed_orbits(n, 2, 1, g));
    }
    CHECK(c.at_identity() == 1);
  }
}

TEST_CASE("stability degree checks") {
  auto zero = stability_degree_check(Family::Moduli, 0, 2, 3, 8);
  CHECK(zero.passed());
  for (const auto& s : zero.series) CHECK(s.onset == std::max(3, s.a));

  auto one = stability_degree_check(Family::Moduli, 1, 2, 4, 10);
  CHECK(one.passed());
  for (const auto& s : one.series) {
    for (std::size_t k = 0; k < s.ns.size(); ++k)
      if (s.ns[k] >= 4 + s.a) CHECK(s.characters[k] == s.characters.back());
    if (s.a == 0) CHECK(s.characters.back().at(0) == 0);
  }

  auto shifted = stability_degree_check(Family::ShiftedModuli, 1, 2, 3, 10);
  CHECK(shifted.passed());
}

TEST_CASE("bounds per family") {
  auto m = bounds_for(Family::Moduli, 2);
  CHECK(m.weight == 5);
  CHECK(m.length == 5);
  CHECK(m.alternating_after == 6);
  CHECK(m.stability_degree == 8);
  CHECK(m.stable_range == 10);
  auto s = bounds_for(Family::ShiftedModuli, 1);
  CHECK(s.weight == 2);
  CHECK(s.length == 2);
  CHECK(s.stability_degree == 2);
}
