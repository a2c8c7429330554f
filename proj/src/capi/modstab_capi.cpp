#include "modstab/modstab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/characters.hpp"
#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/fistab.hpp"
#include "core/report.hpp"
#include "core/verify.hpp"

struct modstab_context {
  modstab::RunConfig config;
  std::string last_error;
};

struct modstab_table {
  modstab::Document document;
};

namespace {

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

modstab::Family to_family(modstab_family family) {
  switch (family) {
    case MODSTAB_FAMILY_F: return modstab::Family::Configuration;
    case MODSTAB_FAMILY_MSHIFT: return modstab::Family::ShiftedModuli;
    case MODSTAB_FAMILY_M: return modstab::Family::Moduli;
  }
  throw modstab::ContractViolation("unknown family code " + std::to_string(static_cast<int>(family)));
}

modstab::OutputFormat to_format(modstab_format format) {
  switch (format) {
    case MODSTAB_FORMAT_JSON: return modstab::OutputFormat::Json;
    case MODSTAB_FORMAT_CSV: return modstab::OutputFormat::Csv;
    case MODSTAB_FORMAT_TEXT: return modstab::OutputFormat::Text;
  }
  throw modstab::ContractViolation("unknown format code " + std::to_string(static_cast<int>(format)));
}

// Runs `body`, translating exceptions into status codes and the context's error slot.
template <typename Body>
modstab_status guarded(modstab_context* ctx, Body&& body) {
  if (!ctx) return MODSTAB_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return MODSTAB_OK;
  } catch (const modstab::BudgetExceeded& e) {
    ctx->last_error = e.what();
    return MODSTAB_ERR_BUDGET;
  } catch (const modstab::NotGenuineCharacter& e) {
    ctx->last_error = e.what();
    return MODSTAB_ERR_NOT_GENUINE;
  } catch (const modstab::VerificationFailure& e) {
    ctx->last_error = e.what();
    return MODSTAB_ERR_VERIFICATION;
  } catch (const modstab::ContractViolation& e) {
    ctx->last_error = e.what();
    return MODSTAB_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    return MODSTAB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return MODSTAB_ERR_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown error";
    return MODSTAB_ERR_INTERNAL;
  }
}

template <typename Build>
modstab_status produce(modstab_context* ctx, modstab_table** out, Build&& build) {
  if (!out) {
    if (ctx) ctx->last_error = "null output pointer";
    return MODSTAB_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(ctx, [&] {
    ctx->config.validate();
    *out = new modstab_table{build()};
  });
}

modstab::Partition partition_from(const int* parts, size_t count) {
  if (count > 0 && !parts) throw modstab::ContractViolation("null partition array");
  std::vector<int> values(parts, parts + count);
  for (int v : values)
    if (v <= 0) throw modstab::ContractViolation("parts must be positive");
  return modstab::Partition::from_unsorted(std::move(values));
}

}  // namespace

extern "C" {

modstab_status modstab_context_create(modstab_context** out) {
  if (!out) return MODSTAB_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) modstab_context();
  return *out ? MODSTAB_OK : MODSTAB_ERR_INTERNAL;
}

void modstab_context_destroy(modstab_context* ctx) { delete ctx; }

const char* modstab_last_error(const modstab_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

modstab_status modstab_context_set_budget(modstab_context* ctx, int max_n, int max_i) {
  return guarded(ctx, [&] {
    modstab::RunConfig next = ctx->config;
    next.max_n = max_n;
    next.max_i = max_i;
    next.validate();
    ctx->config = next;
  });
}

modstab_status modstab_context_set_oracle_max_n(modstab_context* ctx, int oracle_max_n) {
  return guarded(ctx, [&] {
    modstab::RunConfig next = ctx->config;
    next.oracle_max_n = oracle_max_n;
    next.validate();
    ctx->config = next;
  });
}

modstab_status modstab_context_set_stable_margin(modstab_context* ctx, int margin) {
  return guarded(ctx, [&] {
    modstab::RunConfig next = ctx->config;
    next.stable_margin = margin;
    next.validate();
    ctx->config = next;
  });
}

modstab_status modstab_characters(modstab_context* ctx, modstab_family family, int degree, int n_min,
                                  int n_max, modstab_table** out) {
  return produce(ctx, out, [&] {
    return modstab::characters_document(to_family(family), degree, n_min, n_max, ctx->config);
  });
}

modstab_status modstab_decompose(modstab_context* ctx, modstab_family family, int degree, int n_min,
                                 int n_max, modstab_table** out) {
  return produce(ctx, out, [&] {
    return modstab::decomposition_document(to_family(family), degree, n_min, n_max, ctx->config);
  });
}

modstab_status modstab_charpoly(modstab_context* ctx, modstab_family family, int degree, int poly_degree,
                                int n_min, int n_max, modstab_table** out) {
  return produce(ctx, out, [&] {
    return modstab::charpoly_document(to_family(family), degree, poly_degree, n_min, n_max, ctx->config);
  });
}

modstab_status modstab_stability(modstab_context* ctx, modstab_family family, int degree, int n_min,
                                 int n_max, int a_max, modstab_table** out) {
  return produce(ctx, out, [&] {
    if (a_max < 0) throw modstab::ContractViolation("a_max must be nonnegative");
    return modstab::stability_document(to_family(family), degree, n_min, n_max, a_max, ctx->config);
  });
}

modstab_status modstab_verify(modstab_context* ctx, modstab_table** out) {
  return produce(ctx, out, [&] {
    return modstab::verification_document(modstab::run_verification(ctx->config), ctx->config);
  });
}

void modstab_table_destroy(modstab_table* table) { delete table; }

size_t modstab_table_row_count(const modstab_table* table) {
  return table ? table->document.rows.size() : 0;
}

int modstab_table_row_n(const modstab_table* table, size_t row) {
  if (!table || row >= table->document.rows.size()) return -1;
  const auto& n = table->document.rows[row].n;
  return n ? *n : -1;
}

const char* modstab_table_row_key(const modstab_table* table, size_t row) {
  if (!table || row >= table->document.rows.size()) return nullptr;
  return table->document.rows[row].key_text.c_str();
}

const char* modstab_table_row_value(const modstab_table* table, size_t row) {
  if (!table || row >= table->document.rows.size()) return nullptr;
  return table->document.rows[row].value_text.c_str();
}

int modstab_table_passed(const modstab_table* table) { return table && table->document.passed ? 1 : 0; }

modstab_status modstab_table_render(const modstab_table* table, modstab_format format, char** out) {
  if (!table || !out) return MODSTAB_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    *out = duplicate(table->document.render(to_format(format)));
    return *out ? MODSTAB_OK : MODSTAB_ERR_INTERNAL;
  } catch (const modstab::ContractViolation&) {
    return MODSTAB_ERR_INVALID_ARGUMENT;
  } catch (...) {
    return MODSTAB_ERR_INTERNAL;
  }
}

modstab_status modstab_character_value(modstab_context* ctx, modstab_family family, int degree,
                                       const int* cycle_type, size_t parts, char** value) {
  if (!value) return MODSTAB_ERR_INVALID_ARGUMENT;
  *value = nullptr;
  return guarded(ctx, [&] {
    const modstab::CycleType mu = partition_from(cycle_type, parts);
    const modstab::Family f = to_family(family);
    if (degree < 0) throw modstab::ContractViolation("degree must be nonnegative");
    if (mu.size() < modstab::family_min_n(f))
      throw modstab::ContractViolation("family " + modstab::family_name(f) + " needs n >= " +
                                       std::to_string(modstab::family_min_n(f)));
    ctx->config.require_budget(mu.size(), degree);
    *value = duplicate(modstab::to_string(modstab::family_character(f, mu.size(), degree)(mu)));
  });
}

modstab_status modstab_irreducible_character(modstab_context* ctx, const int* shape, size_t shape_parts,
                                             const int* cycle_type, size_t cycle_parts, char** value) {
  if (!value) return MODSTAB_ERR_INVALID_ARGUMENT;
  *value = nullptr;
  return guarded(ctx, [&] {
    const modstab::Partition lambda = partition_from(shape, shape_parts);
    const modstab::CycleType mu = partition_from(cycle_type, cycle_parts);
    *value = duplicate(modstab::to_string(modstab::mn_character(lambda, mu)));
  });
}

void modstab_string_free(char* s) { std::free(s); }

const char* modstab_status_string(modstab_status status) {
  switch (status) {
    case MODSTAB_OK: return "ok";
    case MODSTAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MODSTAB_ERR_BUDGET: return "budget exceeded";
    case MODSTAB_ERR_NOT_GENUINE: return "not a genuine character";
    case MODSTAB_ERR_VERIFICATION: return "verification failure";
    case MODSTAB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
