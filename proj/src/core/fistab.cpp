#include "core/fistab.hpp"

#include <algorithm>
#include <set>

#include "core/arnold.hpp"
#include "core/errors.hpp"
#include "core/moduli.hpp"

namespace modstab {

std::string family_name(Family family) {
  switch (family) {
    case Family::Configuration: return "F";
    case Family::ShiftedModuli: return "Mshift";
    case Family::Moduli: return "M";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "F") return Family::Configuration;
  if (name == "Mshift") return Family::ShiftedModuli;
  if (name == "M") return Family::Moduli;
  throw ContractViolation("unknown family '" + name + "' (expected F, Mshift or M)");
}

int family_min_n(Family family) { return family == Family::Configuration ? 1 : 3; }

ClassFunction family_character(Family family, int n, int degree) {
  switch (family) {
    case Family::Configuration: return character(n, degree);
    case Family::ShiftedModuli: return shifted_character(n, degree).chi;
    case Family::Moduli: return moduli_character(n, degree).chi;
  }
  throw ContractViolation("unknown family");
}

FamilyBounds bounds_for(Family family, int degree) {
  const int i = degree;
  switch (family) {
    case Family::Moduli: return {2 * i + 1, 2 * i + 1, 2 * i + 2, 4 * i, 4 * i + 2};
    case Family::ShiftedModuli: return {2 * i, 2 * i, 2 * i + 1, 2 * i, 4 * i + 2};
    case Family::Configuration: return {2 * i, 2 * i + 1, 2 * i + 1, 2 * i, 4 * i + 2};
  }
  throw ContractViolation("unknown family");
}

Integer StabilityReport::multiplicity(const Partition& lambda, int n) const {
  auto row = rows.find(lambda);
  auto at = std::find(ns.begin(), ns.end(), n);
  if (row == rows.end() || at == ns.end()) return 0;
  const auto& value = row->second[at - ns.begin()];
  return value ? *value : Integer(0);
}

StabilityReport multiplicity_table(Family family, int degree, int n_min, int n_max, int margin) {
  if (degree < 0) throw ContractViolation("negative cohomological degree");
  if (margin < 0) throw ContractViolation("negative stability margin");
  StabilityReport report;
  report.family = family;
  report.degree = degree;
  report.n_min = std::max(n_min, family_min_n(family));
  report.n_max = n_max;
  report.margin = margin;
  const FamilyBounds bounds = bounds_for(family, degree);

  std::vector<IrrDecomposition> decompositions;
  for (int n = report.n_min; n <= n_max; ++n) {
    report.ns.push_back(n);
    decompositions.push_back(decompose(family_character(family, n, degree)));
  }

  std::set<Partition> seen;
  for (const auto& d : decompositions)
    for (const auto& [lambda, m] : d.multiplicities()) seen.insert(lambda.without_first_row());
  for (const auto& lambda : seen) {
    auto& row = report.rows[lambda];
    for (std::size_t k = 0; k < report.ns.size(); ++k) {
      const int n = report.ns[k];
      if (n < lambda.size() + lambda.first()) row.emplace_back(std::nullopt);
      else row.emplace_back(decompositions[k].multiplicity(pad(lambda, n)));
    }
  }

  for (std::size_t k = 0; k < report.ns.size(); ++k) {
    const int n = report.ns[k];
    const auto& d = decompositions[k];
    report.lengths.push_back(length_of(d));
    for (const auto& [lambda, m] : d.multiplicities()) {
      const Partition small = lambda.without_first_row();
      if (small.size() > bounds.weight) {
        report.weight_ok = false;
        report.findings.push_back("weight: n=" + std::to_string(n) + " constituent " + lambda.to_string() +
                                  " has |λ| = " + std::to_string(small.size()) + " > " +
                                  std::to_string(bounds.weight));
      }
    }
    if (report.lengths.back() > bounds.length) {
      report.length_ok = false;
      report.findings.push_back("length: n=" + std::to_string(n) + " has length " +
                                std::to_string(report.lengths.back()) + " > " + std::to_string(bounds.length));
    }
    if (n > bounds.alternating_after && n >= 1) {
      const Partition alternating(std::vector<int>(n, 1));
      if (d.multiplicity(alternating) != 0) {
        report.alternating_ok = false;
        report.findings.push_back("alternating: n=" + std::to_string(n) + " contains (1^n)");
      }
    }
  }

  // Onset: the start of the longest constant tail shared by every row.
  if (!report.ns.empty()) {
    std::size_t start = report.ns.size() - 1;
    while (start > 0) {
      bool same = true;
      for (const auto& lambda : seen)
        if (report.multiplicity(lambda, report.ns[start - 1]) != report.multiplicity(lambda, report.ns[start]))
          same = false;
      if (!same) break;
      --start;
    }
    const int candidate = report.ns[start];
    if (report.ns.back() - candidate >= margin) report.onset = candidate;
  }
  if (!report.onset)
    report.findings.push_back("no stabilization with margin " + std::to_string(margin) + " in the sampled range");

  if (report.n_max >= bounds.stable_range + margin && report.n_min <= bounds.stable_range) {
    report.range_ok = report.onset && *report.onset <= bounds.stable_range;
    if (!*report.range_ok)
      report.findings.push_back("onset exceeds the guaranteed stable range n >= " + std::to_string(bounds.stable_range));
  }
  return report;
}

StabilityReport shifted_multiplicity_table(int degree, int n_min, int n_max, int margin) {
  return multiplicity_table(Family::ShiftedModuli, degree, n_min, n_max, margin);
}

StabilityReport moduli_multiplicity_table(int degree, int n_min, int n_max, int margin) {
  return multiplicity_table(Family::Moduli, degree, n_min, n_max, margin);
}

ClassFunction coinvariant_character(const ClassFunction& chi, int a) {
  const int n = chi.degree();
  if (a < 0 || a > n) throw ContractViolation("coinvariant_character needs 0 <= a <= n");
  const int rest = n - a;
  const Rational order(factorial(rest));
  return ClassFunction::from(a, [&](const CycleType& nu) -> Rational {
    Rational sum = 0;
    for (const auto& mu : partitions_cached(rest)) sum += Rational(class_size(mu)) * chi(nu.merged(mu));
    return sum / order;
  });
}

bool StabilityDegreeReport::passed() const {
  return std::all_of(series.begin(), series.end(), [](const auto& s) { return s.ok; });
}

StabilityDegreeReport stability_degree_check(Family family, int degree, int a_max, int n_min, int n_max) {
  StabilityDegreeReport report;
  report.family = family;
  report.degree = degree;
  report.a_max = a_max;
  const FamilyBounds bounds = bounds_for(family, degree);
  for (int a = 0; a <= a_max; ++a) {
    CoinvariantSeries s;
    s.a = a;
    s.bound = bounds.stability_degree + a;
    for (int n = std::max({n_min, a, family_min_n(family)}); n <= n_max; ++n) {
      s.ns.push_back(n);
      s.characters.push_back(coinvariant_character(family_character(family, n, degree), a));
    }
    if (!s.ns.empty()) {
      std::size_t start = s.ns.size() - 1;
      while (start > 0 && s.characters[start - 1] == s.characters[start]) --start;
      s.onset = s.ns[start];
      s.ok = *s.onset <= std::max(s.bound, s.ns.front());
    }
    report.series.push_back(std::move(s));
  }
  return report;
}

}  // namespace modstab
