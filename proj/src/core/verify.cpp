#include "core/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "core/arnold.hpp"
#include "core/characters.hpp"
#include "core/charpoly.hpp"
#include "core/fistab.hpp"
#include "core/moduli.hpp"

namespace modstab {

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      passed = false;
      notes.push_back("FAIL " + message);
    }
  }
  void note(const std::string& message) { notes.push_back(message); }
};

using CheckFn = std::function<void(const RunConfig&, Outcome&)>;

void check_h1_identification(const RunConfig& config, Outcome& out) {
  const int hi = std::min(10, config.max_n);
  for (int n = 4; n <= hi; ++n) {
    IrrDecomposition expected(n);
    expected.add(Partition({n - 2, 2}), 1);
    const auto got = decompose(moduli_character(n, 1).chi);
    out.require(got == expected, "n=" + std::to_string(n) + ": got " + got.to_string());
  }
  out.note("H^1(M_{0,n}) = V(2)_n for n = 4.." + std::to_string(hi));
}

void check_character_polynomials(const RunConfig& config, Outcome& out) {
  const struct {
    Family family;
    const char* expected;
  } cases[] = {{Family::Moduli, "binom(X1,2) + X2 - X1"}, {Family::ShiftedModuli, "binom(X1,2) + X2 - 1"}};
  for (const auto& c : cases) {
    std::vector<ClassFunction> samples;
    for (int n = 4; n <= std::min(8, config.max_n); ++n) samples.push_back(family_character(c.family, n, 1));
    const FitResult r = fit(samples, 2);
    const std::string name = family_name(c.family);
    out.require(r.feasible && r.unique, name + ": fit not unique/feasible");
    out.require(r.polynomial.to_string() == c.expected, name + ": fitted " + r.polynomial.to_string());
    for (int n = 9; n <= std::min(10, config.max_n); ++n)
      out.require(r.polynomial.evaluate_on(n) == family_character(c.family, n, 1),
                  name + ": prediction fails at n=" + std::to_string(n));
    out.note(name + ": " + r.polynomial.to_string());
  }
}

void check_oracle_equivalence(const RunConfig& config, Outcome& out) {
  const int hi = config.oracle_max_n;
  for (int n = 1; n <= hi; ++n) {
    for (int i = 0; i <= n; ++i) {
      const auto oracle = quotient_oracle(n, i, hi);
      out.require(oracle.dimension == basis(n, i).size(),
                  "basis(" + std::to_string(n) + "," + std::to_string(i) + ") size disagrees with the quotient");
      out.require(oracle.character == character(n, i),
                  "character(" + std::to_string(n) + "," + std::to_string(i) + ") disagrees with the quotient");
    }
  }
  for (int n = 3; n <= hi; ++n) {
    for (int i = 0; i <= 2; ++i) {
      const auto theta = theta_subalgebra_oracle(n, i, hi);
      const auto& shifted = shifted_character(n, i).chi;
      out.require(Rational(theta.dimension) == shifted.at_identity() && theta.character == shifted,
                  "θ-subalgebra disagrees with the shifted character at (" + std::to_string(n) + "," +
                      std::to_string(i) + ")");
    }
  }
  out.note("oracles run for n <= " + std::to_string(hi));
  if (hi < 6) out.note("reduced oracle coverage: oracle_max_n = " + std::to_string(hi) + " < 6");
}

void check_splitting_and_restriction(const RunConfig& config, Outcome& out) {
  for (int n = 3; n <= std::min(12, config.max_n); ++n) {
    for (int i = 0; i <= 3; ++i) {
      ClassFunction sum = shifted_character(n, i).chi;
      if (i > 0) sum += shifted_character(n, i - 1).chi;
      out.require(character(n, i) == sum,
                  "splitting fails at (" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
  }
  for (int n = 3; n <= std::min(11, config.max_n - 1); ++n) {
    for (int i = 0; i <= 2; ++i) {
      const auto v = restriction_check(n, i);
      out.require(v.passed(), v.to_string());
    }
  }
}

void check_uniform_stability(const RunConfig& config, Outcome& out) {
  const int n_max = std::min(13, config.max_n);
  const auto report = multiplicity_table(Family::Moduli, 2, 6, n_max, config.stable_margin);
  for (const auto& [lambda, values] : report.rows) {
    for (int n = 11; n <= n_max; ++n)
      out.require(report.multiplicity(lambda, n) == report.multiplicity(lambda, 10),
                  "row " + lambda.to_string() + " changes at n=" + std::to_string(n));
  }
  out.note("observed onset " + (report.onset ? std::to_string(*report.onset) : std::string("none")) +
           ", sampled through n=" + std::to_string(n_max));
  if (n_max < 13) out.note("reduced range: max_n = " + std::to_string(n_max));
}

void check_bounds(const RunConfig& config, Outcome& out) {
  for (Family family : {Family::Moduli, Family::ShiftedModuli}) {
    for (int i = 0; i <= 2; ++i) {
      const auto report = multiplicity_table(family, i, 3, config.max_n, config.stable_margin);
      const std::string where = family_name(family) + " i=" + std::to_string(i);
      out.require(report.weight_ok, where + ": weight bound");
      out.require(report.length_ok, where + ": length bound");
      out.require(report.alternating_ok, where + ": alternating representation present");
      for (const auto& f : report.findings)
        if (f.rfind("weight", 0) == 0 || f.rfind("length", 0) == 0 || f.rfind("alternating", 0) == 0)
          out.note(where + ": " + f);
    }
  }
}

std::pair<FitResult, FitResult> fit_pair(int i, int n_max) {
  const int d = 2 * i;
  const int n0 = std::max(3, 4 * i + 2);
  std::vector<ClassFunction> shifted, moduli;
  for (int n = n0; n <= std::min(n0 + 3, n_max); ++n) {
    shifted.push_back(shifted_character(n, i).chi);
    moduli.push_back(moduli_character(n, i).chi);
  }
  return {fit(shifted, d), fit(moduli, d)};
}

void check_recursion_identity(const RunConfig& config, Outcome& out) {
  std::vector<CharacterPolynomial> p, q;
  for (int i = 0; i <= 2; ++i) {
    auto [pf, qf] = fit_pair(i, config.max_n);
    out.require(pf.feasible && pf.unique, "P_" + std::to_string(i) + " fit not unique");
    out.require(qf.feasible && qf.unique, "Q_" + std::to_string(i) + " fit not unique");
    p.push_back(pf.polynomial);
    q.push_back(qf.polynomial);
    out.note("P_" + std::to_string(i) + " = " + pf.polynomial.to_string());
    out.note("Q_" + std::to_string(i) + " = " + qf.polynomial.to_string());
    out.require(short_cycle_dependence(q[i], 2 * i).passed, "Q_" + std::to_string(i) + " uses long cycles");
    out.require(short_cycle_dependence(p[i], 2 * i).passed, "P_" + std::to_string(i) + " uses long cycles");
  }
  out.require(p[0] == q[0] && q[0] == CharacterPolynomial::constant(1), "P_0 = Q_0 = 1");
  for (int i = 1; i <= 2; ++i) {
    const auto v = verify_rec_identity(i, p[i], q[i], q[i - 1]);
    out.require(v.passed(), "i=" + std::to_string(i) + ": " + v.to_string());
  }
}

void check_poincare(const RunConfig& config, Outcome& out) {
  for (int i = 1; i <= 2; ++i) {
    const int n0 = 4;
    std::vector<Rational> xs, ys;
    for (int n = n0; n <= n0 + 2 * i; ++n) {
      xs.emplace_back(n);
      ys.push_back(moduli_character(n, i).chi.at_identity());
    }
    for (int n = n0 + 2 * i + 1; n <= std::min(n0 + 2 * i + 2, config.max_n); ++n) {
      const Rational predicted = interpolate(xs, ys, Rational(n));
      const Rational actual = moduli_character(n, i).chi.at_identity();
      out.require(predicted == actual, "i=" + std::to_string(i) + " n=" + std::to_string(n) + ": predicted " +
                                           to_string(predicted) + ", actual " + to_string(actual));
    }
  }
}

void check_coinvariants(const RunConfig& config, Outcome& out) {
  for (Family family : {Family::Moduli, Family::ShiftedModuli}) {
    for (int i = 0; i <= 1; ++i) {
      const auto report = stability_degree_check(family, i, 2, 3, config.max_n);
      for (const auto& s : report.series)
        out.require(s.ok, family_name(family) + " i=" + std::to_string(i) + " a=" + std::to_string(s.a) +
                              ": constant only from n=" + (s.onset ? std::to_string(*s.onset) : "-") +
                              ", bound " + std::to_string(s.bound));
    }
  }
  out.note(kCoinvariantNote);
}

void check_symmetric_group_core(const RunConfig&, Outcome& out) {
  for (int n = 0; n <= 8; ++n) {
    const auto& shapes = partitions_cached(n);
    Integer sum_of_squares = 0;
    for (std::size_t a = 0; a < shapes.size(); ++a) {
      const auto d = dimension(shapes[a]);
      sum_of_squares += d * d;
      for (std::size_t b = a; b < shapes.size(); ++b) {
        const Rational ip = inner_product(irreducible_character(shapes[a]), irreducible_character(shapes[b]));
        out.require(ip == (a == b ? 1 : 0), "orthogonality fails for " + shapes[a].to_string() + ", " +
                                                shapes[b].to_string());
      }
    }
    out.require(sum_of_squares == factorial(n), "Σ dim² != n! at n=" + std::to_string(n));
  }
  for (int n = 0; n + 1 <= 8; ++n) {
    for (const auto& lambda : partitions_cached(n + 1)) {
      for (const auto& mu : partitions_cached(n)) {
        Integer branched = 0;
        for (const auto& nu : branch_restrict(lambda)) branched += mn_character(nu, mu);
        out.require(mn_character(lambda, mu.merged(Partition({1}))) == branched,
                    "branching fails for " + lambda.to_string() + " at " + mu.to_string());
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    ClassFunction regular(n);
    regular.at(regular.size() - 1) = Rational(factorial(n));
    const auto d = decompose(regular);
    for (const auto& lambda : partitions_cached(n))
      out.require(d.multiplicity(lambda) == dimension(lambda),
                  "regular representation at " + lambda.to_string());
  }
}

const std::map<std::string, std::pair<std::string, CheckFn>>& registry() {
  static const std::map<std::string, std::pair<std::string, CheckFn>> checks = {
      {"h1_identification", {"H^1(M_{0,n}) = V(2)_n", check_h1_identification}},
      {"character_polynomials", {"degree-2 character polynomials and held-out prediction", check_character_polynomials}},
      {"oracle_equivalence", {"normal-form basis vs quotient and θ-subalgebra oracles", check_oracle_equivalence}},
      {"splitting_restriction", {"degreewise splitting and restriction/branching", check_splitting_and_restriction}},
      {"uniform_stability", {"H^2(M_{0,n}) multiplicities constant for n >= 10", check_uniform_stability}},
      {"bounds", {"weight, length and alternating bounds", check_bounds}},
      {"recursion_identity", {"Q_i = P_i - (X1 - 1) Q_{i-1} and degree bounds", check_recursion_identity}},
      {"poincare_polynomiality", {"dim H^i(M_{0,n}) polynomial of degree <= 2i", check_poincare}},
      {"coinvariant_stabilization", {"coinvariant characters stabilize", check_coinvariants}},
      {"symmetric_group_core", {"orthogonality, dimensions, branching, regular representation", check_symmetric_group_core}},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& verification_check_ids() {
  static const std::vector<std::string> ids = {
      "symmetric_group_core", "oracle_equivalence",     "h1_identification",      "character_polynomials",
      "splitting_restriction", "uniform_stability",     "bounds",                 "recursion_identity",
      "poincare_polynomiality", "coinvariant_stabilization"};
  return ids;
}

CheckResult run_check(const std::string& id, const RunConfig& config) {
  const auto& [title, fn] = registry().at(id);
  CheckResult result{id, title, false, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    fn(config, outcome);
  } catch (const std::exception& e) {
    outcome.passed = false;
    outcome.notes.push_back(std::string("FAIL exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = outcome.passed;
  // Keep failure details bounded.
  std::size_t shown = 0;
  for (const auto& note : outcome.notes) {
    if (++shown > 12) {
      result.detail += (result.detail.empty() ? "" : "; ") + std::string("...");
      break;
    }
    result.detail += (result.detail.empty() ? "" : "; ") + note;
  }
  return result;
}

std::vector<CheckResult> run_verification(const RunConfig& config) {
  config.validate();
  std::vector<CheckResult> results;
  for (const auto& id : verification_check_ids()) results.push_back(run_check(id, config));
  return results;
}

Document verification_document(const std::vector<CheckResult>& results, const RunConfig& config) {
  Document doc;
  doc.kind = "verify";
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    doc.passed = doc.passed && r.passed;
    checks.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    doc.rows.push_back({std::nullopt, r.id, r.passed ? "PASS" : "FAIL"});
    doc.text_header.push_back((r.passed ? "PASS " : "FAIL ") + r.id + ": " + r.detail);
  }
  doc.json["passed"] = doc.passed;
  doc.json["config"] = {{"max_n", config.max_n},
                        {"max_i", config.max_i},
                        {"oracle_max_n", config.oracle_max_n},
                        {"stable_margin", config.stable_margin}};
  doc.json["checks"] = std::move(checks);
  return doc;
}

Rational interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    Rational term = ys[j];
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (k != j) term *= (x - xs[k]) / (xs[j] - xs[k]);
    total += term;
  }
  return total;
}

}  // namespace modstab
