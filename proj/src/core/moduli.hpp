#pragma once

#include <string>
#include <vector>

#include "core/characters.hpp"
#include "core/class_function.hpp"

namespace modstab {

/// S_n-character of H^i(M_{0,n+1}) restricted along S_n ↪ S_{n+1} (the first
/// point stays fixed). Obtained from the degreewise splitting
/// χ_{H^i(F(C,n))} = R_i + R_{i-1}, R_{-1} = 0.
struct ShiftedCharacter {
  int n = 0;
  int degree = 0;
  ClassFunction chi;
};

/// S_n-character of H^i(M_{0,n}), obtained from R_i = Q_i + (X_1 - 1) Q_{i-1}.
struct ModuliCharacter {
  int n = 0;
  int degree = 0;
  ClassFunction chi;
};

/// Requires n >= 3. Throws VerificationFailure when an identity value goes
/// negative (an upstream character error).
ShiftedCharacter shifted_character(int n, int degree);

/// Requires n >= 3. Throws NotGenuineCharacter naming (n, i, λ) if the result
/// fails to decompose with nonnegative integer multiplicities.
ModuliCharacter moduli_character(int n, int degree);

/// Mismatch between the restricted character of H^i(M_{0,n+1}) and the shifted character.
struct RestrictionMismatch {
  CycleType mu;
  Rational expected;
  Rational got;
};

struct RestrictionVerdict {
  int n = 0;
  int degree = 0;
  bool character_level = true;
  bool branching_level = true;
  std::vector<RestrictionMismatch> mismatches;
  IrrDecomposition branched;   // branching of decompose(moduli_character(n+1, i))
  IrrDecomposition shifted;    // decompose(shifted_character(n, i))

  bool passed() const { return character_level && branching_level; }
  std::string to_string() const;
};

/// Compares moduli_character(n+1, i) on μ ∪ (1) with shifted_character(n, i) on μ,
/// and the branched irreducible decomposition with the direct one.
RestrictionVerdict restriction_check(int n, int degree);

/// Branching rule applied to every constituent: Res^{S_{n+1}}_{S_n}.
IrrDecomposition restrict_decomposition(const IrrDecomposition& d);

/// Dimension and character of the degree-i part of the subalgebra of R_n
/// generated by θ_{i,j} = ω_{i,j} - ω_{1,2}, by exact elimination inside the
/// normal-form basis. Refuses n > max_n.
struct ThetaResult {
  std::size_t dimension = 0;
  ClassFunction character;
};
ThetaResult theta_subalgebra_oracle(int n, int degree, int max_n = 6);

}  // namespace modstab
