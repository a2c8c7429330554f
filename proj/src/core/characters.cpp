#include "core/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "core/errors.hpp"

namespace modstab {

namespace {

// Shapes are handled through their beta-sets: β_j = λ_j + (l - 1 - j). Removing a
// border strip of length k is moving one bead from β to β - k onto a free
// position; the strip's height is the number of beads jumped over.
using BetaSet = std::vector<int>;  // strictly decreasing

BetaSet beta_set(std::span<const int> parts) {
  const int l = static_cast<int>(parts.size());
  BetaSet beta(l);
  for (int j = 0; j < l; ++j) beta[j] = parts[j] + (l - 1 - j);
  return beta;
}

using MemoKey = std::pair<BetaSet, std::vector<int>>;

struct MnMemo {
  std::shared_mutex mutex;
  std::map<MemoKey, Integer> values;
};

MnMemo& memo() {
  static MnMemo instance;
  return instance;
}

// `cycles` is consumed from the back, so it is stored in increasing order and
// the largest cycle is stripped first.
Integer mn_recursive(const BetaSet& beta, std::vector<int>& cycles) {
  if (cycles.empty()) return 1;
  MemoKey key{beta, cycles};
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().values.find(key);
    if (it != memo().values.end()) return it->second;
  }
  const int k = cycles.back();
  cycles.pop_back();
  Integer total = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    const int target = beta[j] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[j]) ++jumped;
    BetaSet next = beta;
    next[j] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    Integer value = mn_recursive(next, cycles);
    if (jumped % 2) total -= value;
    else total += value;
  }
  cycles.push_back(k);
  std::unique_lock lock(memo().mutex);
  memo().values.emplace(std::move(key), total);
  return total;
}

struct IrrCache {
  std::mutex mutex;
  std::map<Partition, std::unique_ptr<const ClassFunction>> characters;
};

IrrCache& irr_cache() {
  static IrrCache instance;
  return instance;
}

}  // namespace

Integer mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw ContractViolation("mn_character: |λ| = " + std::to_string(lambda.size()) +
                            " but |μ| = " + std::to_string(mu.size()));
  std::vector<int> cycles(mu.parts().rbegin(), mu.parts().rend());
  return mn_recursive(beta_set(lambda.parts()), cycles);
}

const ClassFunction& irreducible_character(const Partition& lambda) {
  auto& cache = irr_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.characters.find(lambda);
    if (it != cache.characters.end()) return *it->second;
  }
  auto chi = std::make_unique<const ClassFunction>(ClassFunction::from(
      lambda.size(), [&](const CycleType& mu) { return Rational(mn_character(lambda, mu)); }));
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.characters.emplace(lambda, std::move(chi));
  return *it->second;
}

Integer dimension(const Partition& lambda) {
  return irreducible_character(lambda).at_identity().get_num();
}

void IrrDecomposition::add(const Partition& lambda, const Integer& count) {
  if (lambda.size() != n_) throw ContractViolation("constituent " + lambda.to_string() + " is not a partition of " + std::to_string(n_));
  auto& slot = mult_[lambda];
  slot += count;
  if (slot == 0) mult_.erase(lambda);
}

Integer IrrDecomposition::multiplicity(const Partition& lambda) const {
  auto it = mult_.find(lambda);
  return it == mult_.end() ? Integer(0) : it->second;
}

Integer IrrDecomposition::dimension() const {
  Integer total = 0;
  for (const auto& [lambda, m] : mult_) total += m * modstab::dimension(lambda);
  return total;
}

ClassFunction IrrDecomposition::character() const {
  ClassFunction chi(n_);
  for (const auto& [lambda, m] : mult_) chi += irreducible_character(lambda) * Rational(m);
  return chi;
}

std::string IrrDecomposition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [lambda, m] : mult_) {
    if (!first) out += ", ";
    first = false;
    out += lambda.to_string() + ":" + m.get_str();
  }
  return out + "}";
}

IrrDecomposition decompose(const ClassFunction& chi) {
  IrrDecomposition d(chi.degree());
  for (const auto& lambda : partitions_cached(chi.degree())) {
    const Rational m = inner_product(chi, irreducible_character(lambda));
    if (!is_integer(m) || m < 0)
      throw NotGenuineCharacter("not a genuine character of S_" + std::to_string(chi.degree()) +
                                ": multiplicity of " + lambda.to_string() + " is " +
                                modstab::to_string(m));
    d.add(lambda, m.get_num());
  }
  if (d.character() != chi)
    throw VerificationFailure("decomposition does not reconstruct the class function");
  return d;
}

int length_of(const IrrDecomposition& d) {
  int length = 0;
  for (const auto& [lambda, m] : d.multiplicities())
    if (m > 0) length = std::max(length, lambda.length());
  return length;
}

}  // namespace modstab
