#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/class_function.hpp"
#include "core/numeric.hpp"
#include "core/partition.hpp"

namespace modstab {

/// χ^λ(μ) by the Murnaghan–Nakayama rule. Memoized on (shape, remaining cycles).
/// Throws ContractViolation when |λ| != |μ|.
Integer mn_character(const Partition& lambda, const CycleType& mu);

/// The irreducible character χ^λ as a class function on S_|λ|.
const ClassFunction& irreducible_character(const Partition& lambda);

/// dim V_λ = χ^λ(identity).
Integer dimension(const Partition& lambda);

/// Multiplicities of irreducible constituents, keyed by the full partition of n.
class IrrDecomposition {
 public:
  explicit IrrDecomposition(int n = 0) : n_(n) {}

  int degree() const { return n_; }
  const std::map<Partition, Integer, ReverseLex>& multiplicities() const { return mult_; }

  /// Adds `count` copies of V_λ; zero entries are removed.
  void add(const Partition& lambda, const Integer& count);
  Integer multiplicity(const Partition& lambda) const;
  bool empty() const { return mult_.empty(); }

  /// Σ mult(λ) dim λ.
  Integer dimension() const;
  ClassFunction character() const;

  /// "{(4):1, (3,1):1}"
  std::string to_string() const;

  friend bool operator==(const IrrDecomposition&, const IrrDecomposition&) = default;

 private:
  int n_;
  std::map<Partition, Integer, ReverseLex> mult_;
};

/// Decomposes a genuine character into irreducibles via the orthogonality
/// inner product. Throws NotGenuineCharacter, naming the failing λ, when a
/// multiplicity is fractional or negative.
IrrDecomposition decompose(const ClassFunction& chi);

/// Largest number of parts among constituents; 0 for the zero decomposition.
int length_of(const IrrDecomposition& d);

}  // namespace modstab
