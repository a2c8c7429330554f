#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/charpoly.hpp"
#include "core/config.hpp"
#include "core/fistab.hpp"

namespace modstab {

/// One emitted row; CSV writes (n, key_text, value_text).
struct TableRow {
  std::optional<int> n;
  std::string key_text;
  std::string value_text;
};

/// A computed result ready for emission in any of the output formats.
struct Document {
  std::string kind;
  nlohmann::ordered_json json;
  std::vector<TableRow> rows;
  std::vector<std::string> text_header;
  bool passed = true;

  std::string render(OutputFormat format) const;
};

/// Exact numbers: JSON integers when they fit in 64 bits, "p/q" strings otherwise.
nlohmann::ordered_json exact_json(const Rational& value);
nlohmann::ordered_json partition_json(const Partition& p);

Document characters_document(Family family, int degree, int n_min, int n_max, const RunConfig& config);
Document decomposition_document(Family family, int degree, int n_min, int n_max, const RunConfig& config);
Document charpoly_document(Family family, int degree, int poly_degree, int n_min, int n_max,
                           const RunConfig& config);
Document stability_document(Family family, int degree, int n_min, int n_max, int a_max,
                            const RunConfig& config);

OutputFormat parse_format(const std::string& name);

}  // namespace modstab
