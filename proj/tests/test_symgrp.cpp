#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "core/characters.hpp"
#include "core/errors.hpp"
#include "core/partition.hpp"
#include "core/permutation.hpp"

using namespace modstab;

namespace {

// Every weakly decreasing positive sequence summing to n, found by filtering all compositions.
std::set<std::vector<int>> partitions_by_compositions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (std::is_sorted(current.rbegin(), current.rend())) out.insert(current);
      return;
    }
    for (int k = 1; k <= left; ++k) {
      current.push_back(k);
      rec(left - k);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

// Number of standard Young tableaux of shape λ, by placing n, n-1, ... in removable corners.
long count_tableaux(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[r];
    total += count_tableaux(smaller);
  }
  return total;
}

int sign(const Permutation& p) {
  int s = 1;
  auto type = p.cycle_type();
  for (int len : type.parts())
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<int> to_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST_CASE("partition enumeration") {
  CHECK(partitions(0) == std::vector<Partition>{Partition()});
  CHECK(partitions(1) == std::vector<Partition>{Partition({1})});
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions(n);
    auto expected = partitions_by_compositions(n);
    std::set<std::vector<int>> got;
    for (const auto& p : ps) got.insert(to_vector(p));
    CHECK(ps.size() == expected.size());
    CHECK(got == expected);
    CHECK(std::is_sorted(ps.begin(), ps.end(), ReverseLex{}));
  }
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(5).front() == Partition({5}));
  CHECK(partitions(5).back() == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("partition validation and helpers") {
  CHECK_THROWS_AS(Partition({1, 2}), ContractViolation);
  CHECK_THROWS_AS(Partition({2, 0}), ContractViolation);
  CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition({3, 2, 1}));
  Partition p({3, 1, 1});
  CHECK(p.size() == 5);
  CHECK(p.length() == 3);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.to_string() == "(3,1,1)");
  CHECK(Partition().to_string() == "()");
  CHECK(p.without_first_row() == Partition({1, 1}));
  CHECK(p.merged(Partition({2})) == Partition({3, 2, 1, 1}));
}

TEST_CASE("class sizes against enumeration of S_n") {
  CHECK(class_size(Partition({1, 1, 1})) == 1);
  CHECK(class_size(Partition({3})) == 2);
  CHECK(class_size(Partition({2, 1})) == 3);
  for (int n = 1; n <= 7; ++n) {
    std::map<Partition, long> counts;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      ++counts[Permutation::from_images(images).cycle_type()];
    } while (std::next_permutation(images.begin(), images.end()));
    Integer total = 0;
    for (const auto& mu : partitions(n)) {
      CHECK(class_size(mu) == counts[mu]);
      total += class_size(mu);
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("permutations") {
  auto s = Permutation::from_cycles(4, {{1, 2, 3}});
  CHECK(s(1) == 2);
  CHECK(s(3) == 1);
  CHECK(s(4) == 4);
  CHECK(s.cycle_type() == Partition({3, 1}));
  CHECK(s * s.inverse() == Permutation::identity(4));
  auto t = Permutation::from_cycles(4, {{1, 4}});
  CHECK((s * t)(4) == s(t(4)));
  auto rep = Permutation::representative(Partition({2, 2, 1}));
  CHECK(rep.images()[0] == 2);
  CHECK(rep.images()[2] == 4);
  CHECK(rep.images()[4] == 5);
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), ContractViolation);
}

TEST_CASE("Murnaghan-Nakayama examples") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n)) CHECK(mn_character(Partition({n}), mu) == 1);
  CHECK(mn_character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == count_tableaux({2, 1}));
  CHECK(count_tableaux({2, 1}) == 2);
  CHECK_THROWS_AS(mn_character(Partition({2, 1}), Partition({2})), ContractViolation);
  CHECK(mn_character(Partition(), Partition()) == 1);
}

TEST_CASE("dimensions match standard tableaux counts") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions(n)) CHECK(dimension(lambda) == count_tableaux(to_vector(lambda)));
}

TEST_CASE("sign character matches permutation parity") {
  for (int n = 1; n <= 7; ++n) {
    Partition column(std::vector<int>(n, 1));
    for (const auto& mu : partitions(n))
      CHECK(mn_character(column, mu) == sign(Permutation::representative(mu)));
  }
}

TEST_CASE("orthogonality and column sums") {
  for (int n = 0; n <= 8; ++n) {
    const auto& ps = partitions_cached(n);
    Integer squares = 0;
    for (std::size_t a = 0; a < ps.size(); ++a) {
      squares += dimension(ps[a]) * dimension(ps[a]);
      for (std::size_t b = a; b < ps.size(); ++b) {
        Rational ip = inner_product(irreducible_character(ps[a]), irreducible_character(ps[b]));
        CHECK(ip == (a == b ? 1 : 0));
      }
    }
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("decompose recovers irreducibles") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& lambda : partitions(n)) {
      auto d = decompose(irreducible_character(lambda));
      CHECK(d.multiplicities().size() == 1);
      CHECK(d.multiplicity(lambda) == 1);
    }
  auto d = decompose(ClassFunction::trivial(5));
  CHECK(d.to_string() == "{(5):1}");
}

TEST_CASE("regular representation") {
  for (int n = 1; n <= 6; ++n) {
    auto reg = ClassFunction::from(n, [&](const CycleType& mu) -> Rational {
      return mu.multiplicity(1) == n ? Rational(factorial(n)) : Rational(0);
    });
    auto d = decompose(reg);
    for (const auto& lambda : partitions(n)) CHECK(d.multiplicity(lambda) == dimension(lambda));
    CHECK(d.dimension() == factorial(n));
    CHECK(d.character() == reg);
  }
}

TEST_CASE("decompose rejects non-characters") {
  // Half the regular character of S_3: multiplicity of the trivial representation is 1/2.
  auto half = ClassFunction::from(3, [](const CycleType& mu) -> Rational {
    return mu.multiplicity(1) == 3 ? Rational(3) : Rational(0);
  });
  CHECK_THROWS_AS(decompose(half), NotGenuineCharacter);
  try {
    decompose(half);
  } catch (const NotGenuineCharacter& e) {
    CHECK(std::string(e.what()).find("(3)") != std::string::npos);
  }
  auto negative = ClassFunction::trivial(3) * Rational(-1);
  CHECK_THROWS_AS(decompose(negative), NotGenuineCharacter);
}

TEST_CASE("padding, branching and length") {
  CHECK(pad(Partition({2}), 5) == Partition({3, 2}));
  CHECK(pad(Partition(), 4) == Partition({4}));
  CHECK(pad(Partition({1, 1}), 4) == Partition({2, 1, 1}));
  CHECK_THROWS_AS(pad(Partition({2}), 3), ContractViolation);

  CHECK(branch_restrict(Partition({2, 2})) == std::vector<Partition>{Partition({2, 1})});
  CHECK(branch_restrict(Partition({6})) == std::vector<Partition>{Partition({5})});
  CHECK(branch_restrict(Partition({3, 1})) == std::vector<Partition>{Partition({3}), Partition({2, 1})});

  IrrDecomposition triv(5);
  triv.add(Partition({5}), 1);
  CHECK(length_of(triv) == 1);
  IrrDecomposition alt(5);
  alt.add(Partition({1, 1, 1, 1, 1}), 1);
  CHECK(length_of(alt) == 5);
  IrrDecomposition mixed(4);
  mixed.add(Partition({2, 2}), 1);
  mixed.add(Partition({3, 1}), 2);
  CHECK(length_of(mixed) == 2);
  CHECK(length_of(IrrDecomposition(4)) == 0);
}

TEST_CASE("branching is consistent with characters") {
  for (int m = 1; m <= 7; ++m)
    for (const auto& lambda : partitions(m))
      for (const auto& mu : partitions(m - 1)) {
        Integer sum = 0;
        for (const auto& nu : branch_restrict(lambda)) sum += mn_character(nu, mu);
        CHECK(mn_character(lambda, mu.merged(Partition({1}))) == sum);
      }
}

TEST_CASE("pad then branch") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& lambda : partitions(k)) {
        if (n < lambda.size() + lambda.first() + 1) continue;
        auto branched = branch_restrict(pad(lambda, n + 1));
        CHECK(std::find(branched.begin(), branched.end(), pad(lambda, n)) != branched.end());
      }
}

TEST_CASE("characters are consistent across threads") {
  std::vector<std::vector<Integer>> results(4);
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < 4; ++w)
      workers.emplace_back([&, w] {
        for (const auto& lambda : partitions(10))
          for (const auto& mu : partitions(10)) results[w].push_back(mn_character(lambda, mu));
      });
  }
  for (int w = 1; w < 4; ++w) CHECK(results[w] == results[0]);
}
