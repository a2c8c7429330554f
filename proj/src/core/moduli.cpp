#include "core/moduli.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "core/arnold.hpp"
#include "core/errors.hpp"

namespace modstab {

namespace {

void require_moduli_range(int n, int degree, const char* what) {
  if (n < 3) throw ContractViolation(std::string(what) + " needs n >= 3, got n = " + std::to_string(n));
  if (degree < 0) throw ContractViolation(std::string(what) + " needs degree >= 0");
}

template <typename Compute>
const ClassFunction& memoized(std::map<std::pair<int, int>, std::unique_ptr<const ClassFunction>>& table,
                              std::recursive_mutex& mutex, int n, int degree, Compute&& compute) {
  std::lock_guard lock(mutex);
  auto it = table.find({n, degree});
  if (it != table.end()) return *it->second;
  auto value = std::make_unique<const ClassFunction>(compute());
  return *table.emplace(std::pair(n, degree), std::move(value)).first->second;
}

std::recursive_mutex& moduli_mutex() {
  static std::recursive_mutex m;
  return m;
}

const ClassFunction& shifted_chi(int n, int degree) {
  static std::map<std::pair<int, int>, std::unique_ptr<const ClassFunction>> table;
  return memoized(table, moduli_mutex(), n, degree, [&] {
    if (degree == 0) return ClassFunction::trivial(n);
    ClassFunction r = character(n, degree) - shifted_chi(n, degree - 1);
    if (r.at_identity() < 0)
      throw VerificationFailure("shifted character (n=" + std::to_string(n) + ", i=" +
                                std::to_string(degree) + ") has negative dimension " +
                                to_string(r.at_identity()));
    // M_{0,n+1} has complex dimension n - 2.
    if (degree > n - 2 && !r.is_zero())
      throw VerificationFailure("shifted character (n=" + std::to_string(n) + ", i=" +
                                std::to_string(degree) + ") is nonzero above the top degree");
    return r;
  });
}

const ClassFunction& moduli_chi(int n, int degree) {
  static std::map<std::pair<int, int>, std::unique_ptr<const ClassFunction>> table;
  return memoized(table, moduli_mutex(), n, degree, [&] {
    if (degree == 0) return ClassFunction::trivial(n);
    ClassFunction q = shifted_chi(n, degree) - fixed_points_minus_one(n) * moduli_chi(n, degree - 1);
    try {
      decompose(q);
    } catch (const NotGenuineCharacter& e) {
      throw NotGenuineCharacter("H^" + std::to_string(degree) + "(M_{0," + std::to_string(n) +
                                "}): " + e.what());
    }
    if (degree > n - 3 && !q.is_zero())
      throw VerificationFailure("H^" + std::to_string(degree) + "(M_{0," + std::to_string(n) +
                                "}) is nonzero above the top degree");
    return q;
  });
}

}  // namespace

ShiftedCharacter shifted_character(int n, int degree) {
  require_moduli_range(n, degree, "shifted_character");
  return {n, degree, shifted_chi(n, degree)};
}

ModuliCharacter moduli_character(int n, int degree) {
  require_moduli_range(n, degree, "moduli_character");
  return {n, degree, moduli_chi(n, degree)};
}

IrrDecomposition restrict_decomposition(const IrrDecomposition& d) {
  IrrDecomposition out(d.degree() - 1);
  for (const auto& [lambda, m] : d.multiplicities())
    for (const auto& nu : branch_restrict(lambda)) out.add(nu, m);
  return out;
}

RestrictionVerdict restriction_check(int n, int degree) {
  require_moduli_range(n, degree, "restriction_check");
  RestrictionVerdict verdict;
  verdict.n = n;
  verdict.degree = degree;
  const ClassFunction& upper = moduli_character(n + 1, degree).chi;
  const ClassFunction shifted = shifted_character(n, degree).chi;
  const Partition fixed_point({1});
  for (const auto& mu : partitions_cached(n)) {
    const Rational& got = upper(mu.merged(fixed_point));
    const Rational& expected = shifted(mu);
    if (got != expected) {
      verdict.character_level = false;
      verdict.mismatches.push_back({mu, expected, got});
    }
  }
  verdict.branched = restrict_decomposition(decompose(upper));
  verdict.shifted = decompose(shifted);
  verdict.branching_level = verdict.branched == verdict.shifted;
  return verdict;
}

std::string RestrictionVerdict::to_string() const {
  std::string out = "restriction n=" + std::to_string(n) + " i=" + std::to_string(degree) + ": " +
                    (passed() ? "pass" : "FAIL");
  for (const auto& m : mismatches)
    out += "; at " + m.mu.to_string() + " expected " + modstab::to_string(m.expected) + " got " +
           modstab::to_string(m.got);
  if (!branching_level)
    out += "; branched " + branched.to_string() + " vs shifted " + shifted.to_string();
  return out;
}

}  // namespace modstab
