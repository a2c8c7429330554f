#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/characters.hpp"
#include "core/class_function.hpp"

namespace modstab {

/// The three FI-modules the engine knows: H^i(F(C,•)), H^i(M_{0,•+1}), H^i(M_{0,•}).
enum class Family { Configuration, ShiftedModuli, Moduli };

/// "F", "Mshift", "M".
std::string family_name(Family family);
/// Inverse of family_name; throws ContractViolation on unknown names.
Family parse_family(const std::string& name);

/// Smallest n for which the family is defined (1 for F, 3 otherwise).
int family_min_n(Family family);

ClassFunction family_character(Family family, int n, int degree);

/// The bounds each family is expected to satisfy in cohomological degree i.
struct FamilyBounds {
  int weight;             // |λ| of every constituent V(λ)_n
  int length;             // number of parts of every constituent λ[n]
  int alternating_after;  // (1^n) absent for n > this
  int stability_degree;   // coinvariants constant for n >= this + a
  int stable_range;       // multiplicities constant for n >= this
};
FamilyBounds bounds_for(Family family, int degree);

/// Irreducible multiplicities of one family in one degree across a range of n,
/// re-indexed by unpadded λ (first row stripped).
struct StabilityReport {
  Family family = Family::Moduli;
  int degree = 0;
  int n_min = 0;
  int n_max = 0;
  int margin = 2;
  std::vector<int> ns;
  /// rows[λ][k] is the multiplicity of V(λ)_{ns[k]}; std::nullopt where λ[n] is undefined.
  std::map<Partition, std::vector<std::optional<Integer>>> rows;
  std::vector<int> lengths;  // ℓ(V_n) per sampled n
  /// Smallest sampled n from which every row is constant, provided at least
  /// `margin` further samples follow; unset when no such n exists.
  std::optional<int> onset;

  bool weight_ok = true;
  bool length_ok = true;
  bool alternating_ok = true;
  /// Unset when the range does not reach the guaranteed stable range plus margin.
  std::optional<bool> range_ok;
  std::vector<std::string> findings;

  bool passed() const { return weight_ok && length_ok && alternating_ok && range_ok.value_or(true); }
  /// Multiplicity at n (undefined padding counts as 0).
  Integer multiplicity(const Partition& lambda, int n) const;
};

StabilityReport multiplicity_table(Family family, int degree, int n_min, int n_max, int margin = 2);
StabilityReport shifted_multiplicity_table(int degree, int n_min, int n_max, int margin = 2);
StabilityReport moduli_multiplicity_table(int degree, int n_min, int n_max, int margin = 2);

/// S_a-character of the S_{n-a}-coinvariants of χ, S_a on {1..a} and S_{n-a} on
/// {a+1..n}: ν ↦ Σ_{μ ⊢ n-a} |class μ|/(n-a)! · χ(ν ∪ μ). Over Q this equals the
/// character of the invariants.
ClassFunction coinvariant_character(const ClassFunction& chi, int a);

struct CoinvariantSeries {
  int a = 0;
  std::vector<int> ns;
  std::vector<ClassFunction> characters;  // over S_a, one per n
  /// First sampled n from which all later characters coincide.
  std::optional<int> onset;
  int bound = 0;  // stability degree + a
  bool ok = true;
};

struct StabilityDegreeReport {
  Family family = Family::Moduli;
  int degree = 0;
  int a_max = 0;
  std::vector<CoinvariantSeries> series;
  bool passed() const;
};

/// For each a <= a_max, checks that the coinvariant characters agree for all
/// sampled n >= stability_degree + a.
StabilityDegreeReport stability_degree_check(Family family, int degree, int a_max, int n_min, int n_max);

/// Note attached to reports: characters see only the dimensions of coinvariants.
inline constexpr const char* kCoinvariantNote =
    "character-level check: equal S_a-characters of coinvariants; whether the coinvariant "
    "map itself is an isomorphism is not certified by characters";

}  // namespace modstab
