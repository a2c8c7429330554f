#include "core/report.hpp"

#include <algorithm>
#include <limits>

#include "core/characters.hpp"
#include "core/errors.hpp"

namespace modstab {

using json = nlohmann::ordered_json;

json exact_json(const Rational& value) {
  if (is_integer(value) && value.get_num().fits_slong_p()) return value.get_num().get_si();
  return to_string(value);
}

json partition_json(const Partition& p) {
  json out = json::array();
  for (int part : p.parts()) out.push_back(part);
  return out;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw ContractViolation("unknown format '" + name + "' (expected json, csv or text)");
}

namespace {

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void check_range(Family family, int degree, int n_min, int n_max, const RunConfig& config) {
  if (degree < 0) throw ContractViolation("degree must be nonnegative");
  if (n_min < family_min_n(family))
    throw ContractViolation("family " + family_name(family) + " needs n >= " + std::to_string(family_min_n(family)));
  if (n_max < n_min) throw ContractViolation("empty n range");
  config.require_budget(n_max, degree);
}

json single_or_array(std::vector<json> per_n) {
  if (per_n.size() == 1) return std::move(per_n.front());
  json out = json::array();
  for (auto& doc : per_n) out.push_back(std::move(doc));
  return out;
}

}  // namespace

std::string Document::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Json: return json.dump(2) + "\n";
    case OutputFormat::Csv: {
      std::string out = "n,key,value\n";
      for (const auto& row : rows)
        out += (row.n ? std::to_string(*row.n) : std::string()) + "," + csv_field(row.key_text) + "," +
               csv_field(row.value_text) + "\n";
      return out;
    }
    case OutputFormat::Text: {
      std::size_t wn = 1, wk = 3;
      for (const auto& row : rows) {
        wn = std::max(wn, row.n ? std::to_string(*row.n).size() : 0);
        wk = std::max(wk, row.key_text.size());
      }
      std::string out;
      for (const auto& line : text_header) out += line + "\n";
      auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(w, s.size()), ' ');
        return s;
      };
      out += pad("n", wn) + "  " + pad("key", wk) + "  value\n";
      for (const auto& row : rows)
        out += pad(row.n ? std::to_string(*row.n) : "", wn) + "  " + pad(row.key_text, wk) + "  " +
               row.value_text + "\n";
      return out;
    }
  }
  return {};
}

Document characters_document(Family family, int degree, int n_min, int n_max, const RunConfig& config) {
  check_range(family, degree, n_min, n_max, config);
  Document doc;
  doc.kind = "characters";
  doc.text_header.push_back("characters of family " + family_name(family) + ", degree " + std::to_string(degree));
  std::vector<json> per_n;
  for (int n = n_min; n <= n_max; ++n) {
    const ClassFunction chi = family_character(family, n, degree);
    json rows = json::array();
    for (std::size_t k = 0; k < chi.size(); ++k) {
      const auto& mu = chi.classes()[k];
      rows.push_back({{"key", partition_json(mu)}, {"value", exact_json(chi.at(k))}});
      doc.rows.push_back({n, mu.to_string(), to_string(chi.at(k))});
    }
    per_n.push_back({{"family", family_name(family)}, {"i", degree}, {"n", n}, {"rows", std::move(rows)}});
  }
  doc.json = single_or_array(std::move(per_n));
  return doc;
}

Document decomposition_document(Family family, int degree, int n_min, int n_max, const RunConfig& config) {
  check_range(family, degree, n_min, n_max, config);
  Document doc;
  doc.kind = "decompose";
  doc.text_header.push_back("irreducible multiplicities of V(λ)_n, family " + family_name(family) + ", degree " +
                            std::to_string(degree));
  std::vector<json> per_n;
  for (int n = n_min; n <= n_max; ++n) {
    const IrrDecomposition d = decompose(family_character(family, n, degree));
    // Keyed by unpadded λ; order follows the full partitions (reverse lex).
    json rows = json::array();
    for (const auto& [lambda, m] : d.multiplicities()) {
      const Partition small = lambda.without_first_row();
      rows.push_back({{"key", partition_json(small)}, {"value", exact_json(Rational(m))}});
      doc.rows.push_back({n, small.to_string(), m.get_str()});
    }
    per_n.push_back({{"family", family_name(family)}, {"i", degree}, {"n", n}, {"rows", std::move(rows)}});
  }
  doc.json = single_or_array(std::move(per_n));
  return doc;
}

Document charpoly_document(Family family, int degree, int poly_degree, int n_min, int n_max,
                           const RunConfig& config) {
  check_range(family, degree, n_min, n_max, config);
  if (poly_degree < 0) throw ContractViolation("polynomial degree must be nonnegative");
  std::vector<ClassFunction> samples;
  for (int n = n_min; n <= n_max; ++n) samples.push_back(family_character(family, n, degree));
  const FitResult result = fit(samples, poly_degree);

  Document doc;
  doc.kind = "charpoly";
  json out;
  out["family"] = family_name(family);
  out["i"] = degree;
  out["d"] = poly_degree;
  out["n_min"] = n_min;
  out["n_max"] = n_max;
  out["feasible"] = result.feasible;
  if (!result.feasible) {
    out["polynomial"] = nullptr;
    out["witness"] = *result.witness;
    doc.passed = false;
    doc.rows.push_back({std::nullopt, "witness", *result.witness});
    doc.text_header.push_back("fit infeasible: " + *result.witness);
    doc.json = std::move(out);
    return doc;
  }
  const auto& p = result.polynomial;
  out["polynomial"] = p.to_string();
  out["degree"] = p.degree();
  out["unique"] = result.unique;
  out["nullity"] = result.nullity;
  out["integral"] = p.has_integer_coefficients();
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json key = json::array();
    for (int m : e) key.push_back(m);
    terms.push_back({{"key", key}, {"value", exact_json(c)}});
    doc.rows.push_back({std::nullopt, monomial_to_string(e), to_string(c)});
  }
  out["terms"] = std::move(terms);
  json heldout = json::array();
  for (int n = n_max + 1; n <= n_max + 2; ++n) {
    if (n > config.max_n) {
      heldout.push_back({{"n", n}, {"pass", nullptr}, {"note", "beyond max_n budget"}});
      doc.rows.push_back({n, "heldout", "skipped"});
      continue;
    }
    const bool pass = p.evaluate_on(n) == family_character(family, n, degree);
    doc.passed = doc.passed && pass;
    heldout.push_back({{"n", n}, {"pass", pass}});
    doc.rows.push_back({n, "heldout", pass ? "pass" : "fail"});
  }
  out["heldout"] = std::move(heldout);
  doc.passed = doc.passed && result.unique;
  doc.text_header.push_back(family_name(family) + ", i=" + std::to_string(degree) + ", d<=" +
                            std::to_string(poly_degree) + ", fitted on n=" + std::to_string(n_min) + ".." +
                            std::to_string(n_max) + ": " + p.to_string() +
                            (result.unique ? "" : "  (non-unique, nullity " + std::to_string(result.nullity) + ")"));
  if (!p.has_integer_coefficients()) doc.text_header.push_back("warning: non-integral binomial coefficients");
  doc.json = std::move(out);
  return doc;
}

Document stability_document(Family family, int degree, int n_min, int n_max, int a_max,
                            const RunConfig& config) {
  check_range(family, degree, n_min, n_max, config);
  const StabilityReport report = multiplicity_table(family, degree, n_min, n_max, config.stable_margin);
  const StabilityDegreeReport coinv = stability_degree_check(family, degree, a_max, n_min, n_max);
  const FamilyBounds bounds = bounds_for(family, degree);

  Document doc;
  doc.kind = "stability";
  doc.passed = report.passed() && coinv.passed();
  json out;
  out["family"] = family_name(family);
  out["i"] = degree;
  out["n_min"] = report.n_min;
  out["n_max"] = report.n_max;
  out["margin"] = report.margin;
  out["ns"] = report.ns;
  json rows = json::array();
  for (const auto& [lambda, values] : report.rows) {
    json series = json::array();
    for (std::size_t k = 0; k < values.size(); ++k) {
      series.push_back(values[k] ? exact_json(Rational(*values[k])) : json(nullptr));
      doc.rows.push_back({report.ns[k], lambda.to_string(), values[k] ? values[k]->get_str() : "-"});
    }
    rows.push_back({{"key", partition_json(lambda)}, {"value", std::move(series)}});
  }
  out["rows"] = std::move(rows);
  out["lengths"] = report.lengths;
  out["onset"] = report.onset ? json(*report.onset) : json(nullptr);
  out["bounds"] = {{"weight", bounds.weight},
                   {"length", bounds.length},
                   {"alternating_after", bounds.alternating_after},
                   {"stable_range", bounds.stable_range},
                   {"stability_degree", bounds.stability_degree}};
  out["verdicts"] = {{"weight", report.weight_ok},
                     {"length", report.length_ok},
                     {"alternating", report.alternating_ok},
                     {"stable_range", report.range_ok ? json(*report.range_ok) : json(nullptr)}};
  out["findings"] = report.findings;

  json series = json::array();
  for (const auto& s : coinv.series) {
    json values = json::array();
    for (std::size_t k = 0; k < s.ns.size(); ++k) {
      json chi = json::array();
      for (std::size_t c = 0; c < s.characters[k].size(); ++c)
        chi.push_back({{"key", partition_json(s.characters[k].classes()[c])},
                       {"value", exact_json(s.characters[k].at(c))}});
      values.push_back({{"n", s.ns[k]}, {"character", std::move(chi)}});
    }
    series.push_back({{"a", s.a},
                      {"bound", s.bound},
                      {"onset", s.onset ? json(*s.onset) : json(nullptr)},
                      {"ok", s.ok},
                      {"values", std::move(values)}});
  }
  out["coinvariants"] = {{"a_max", a_max}, {"note", kCoinvariantNote}, {"series", std::move(series)}};
  doc.json = std::move(out);

  doc.text_header.push_back("stability of family " + family_name(family) + ", degree " + std::to_string(degree) +
                            ", n = " + std::to_string(report.n_min) + ".." + std::to_string(report.n_max));
  doc.text_header.push_back("onset: " + (report.onset ? std::to_string(*report.onset) : std::string("none")) +
                            "; weight " + (report.weight_ok ? "ok" : "FAIL") + ", length " +
                            (report.length_ok ? "ok" : "FAIL") + ", alternating " +
                            (report.alternating_ok ? "ok" : "FAIL") + ", stable range " +
                            (report.range_ok ? (*report.range_ok ? "ok" : "FAIL") : "not reached"));
  for (const auto& s : coinv.series)
    doc.text_header.push_back("coinvariants a=" + std::to_string(s.a) + ": constant from n=" +
                              (s.onset ? std::to_string(*s.onset) : std::string("-")) + " (bound " +
                              std::to_string(s.bound) + ") " + (s.ok ? "ok" : "FAIL"));
  for (const auto& f : report.findings) doc.text_header.push_back("finding: " + f);
  return doc;
}

}  // namespace modstab
