// Command-line front end over the modstab C API.
//
//   modstab characters --family M -i 1 --n-min 5
//   modstab decompose  --family M -i 2 --n-min 6 --n-max 13 --format text
//   modstab charpoly   --family Mshift -i 1 --poly-degree 2 --n-min 4 --n-max 8
//   modstab stability  --family M -i 2 --n-min 6 --n-max 13
//   modstab verify     --out summary.json
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "modstab/modstab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string family = "M";
  int degree = 0;
  int n_min = -1;
  int n_max = -1;
  int poly_degree = -1;
  int a_max = 2;
  std::string format = "json";
  std::string out;
  int max_n = 13;
  int max_i = 2;
  int oracle_max_n = 6;
  int stable_margin = 2;
};

int exit_code_for(modstab_status status) {
  switch (status) {
    case MODSTAB_OK: return kExitOk;
    case MODSTAB_ERR_INVALID_ARGUMENT: return kExitUsage;
    case MODSTAB_ERR_BUDGET: return kExitBudget;
    default: return kExitVerification;
  }
}

using ContextPtr = std::unique_ptr<modstab_context, decltype(&modstab_context_destroy)>;
using TablePtr = std::unique_ptr<modstab_table, decltype(&modstab_table_destroy)>;

int fail(const modstab_context* ctx, modstab_status status) {
  std::cerr << "modstab: " << modstab_last_error(ctx) << "\n";
  return exit_code_for(status);
}

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  return static_cast<bool>(file);
}

int emit(const modstab_table* table, modstab_format format, const std::string& path) {
  char* rendered = nullptr;
  if (modstab_table_render(table, format, &rendered) != MODSTAB_OK) {
    std::cerr << "modstab: failed to render output\n";
    return kExitVerification;
  }
  const bool ok = write_output(rendered, path);
  modstab_string_free(rendered);
  if (!ok) {
    std::cerr << "modstab: cannot write " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact S_n-characters of H*(F(C,n)) and H*(M_{0,n}) with representation-stability checks"};
  app.require_subcommand(1);
  Options opt;

  const std::map<std::string, modstab_family> families{
      {"F", MODSTAB_FAMILY_F}, {"Mshift", MODSTAB_FAMILY_MSHIFT}, {"M", MODSTAB_FAMILY_M}};
  const std::map<std::string, modstab_format> formats{
      {"json", MODSTAB_FORMAT_JSON}, {"csv", MODSTAB_FORMAT_CSV}, {"text", MODSTAB_FORMAT_TEXT}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out, "Output path (default: stdout)");
    cmd->add_option("--max-n", opt.max_n, "Budget: largest n")->check(CLI::PositiveNumber);
    cmd->add_option("--max-i", opt.max_i, "Budget: largest degree")->check(CLI::NonNegativeNumber);
    cmd->add_option("--oracle-max-n", opt.oracle_max_n, "Largest n for the exact-elimination oracles")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--stable-margin", opt.stable_margin, "Samples required after a stabilization onset")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_range = [&](CLI::App* cmd) {
    cmd->add_option("--family", opt.family, "F, Mshift or M")->check(CLI::IsMember({"F", "Mshift", "M"}));
    cmd->add_option("-i,--degree", opt.degree, "Cohomological degree")->required();
    cmd->add_option("--n-min", opt.n_min, "First n")->required();
    cmd->add_option("--n-max", opt.n_max, "Last n (default: --n-min)");
    add_common(cmd);
  };

  auto* characters = app.add_subcommand("characters", "Character values per cycle type");
  add_range(characters);
  auto* decompose = app.add_subcommand("decompose", "Irreducible multiplicities of V(λ)_n");
  add_range(decompose);
  auto* charpoly = app.add_subcommand("charpoly", "Fit a character polynomial and test held-out n");
  add_range(charpoly);
  charpoly->add_option("--poly-degree", opt.poly_degree, "Degree bound (deg X_k = k)")->required();
  auto* stability = app.add_subcommand("stability", "Multiplicity stabilization and bound checks");
  add_range(stability);
  stability->add_option("--a-max", opt.a_max, "Largest a for coinvariant characters")
      ->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (opt.n_max < 0) opt.n_max = opt.n_min;

  modstab_context* raw = nullptr;
  if (modstab_context_create(&raw) != MODSTAB_OK) return kExitVerification;
  ContextPtr ctx(raw, &modstab_context_destroy);
  modstab_status status = modstab_context_set_budget(ctx.get(), opt.max_n, opt.max_i);
  if (status == MODSTAB_OK) status = modstab_context_set_oracle_max_n(ctx.get(), opt.oracle_max_n);
  if (status == MODSTAB_OK) status = modstab_context_set_stable_margin(ctx.get(), opt.stable_margin);
  if (status != MODSTAB_OK) return fail(ctx.get(), status);

  const modstab_family family = families.at(opt.family);
  const modstab_format format = formats.at(opt.format);
  modstab_table* result = nullptr;

  if (*characters) {
    status = modstab_characters(ctx.get(), family, opt.degree, opt.n_min, opt.n_max, &result);
  } else if (*decompose) {
    status = modstab_decompose(ctx.get(), family, opt.degree, opt.n_min, opt.n_max, &result);
  } else if (*charpoly) {
    status = modstab_charpoly(ctx.get(), family, opt.degree, opt.poly_degree, opt.n_min, opt.n_max, &result);
  } else if (*stability) {
    status = modstab_stability(ctx.get(), family, opt.degree, opt.n_min, opt.n_max, opt.a_max, &result);
  } else if (*verify) {
    status = modstab_verify(ctx.get(), &result);
  }
  if (status != MODSTAB_OK) return fail(ctx.get(), status);
  TablePtr table(result, &modstab_table_destroy);

  if (*verify) {
    // The JSON summary is always written; a human-readable line per check goes to stderr.
    for (std::size_t r = 0; r < modstab_table_row_count(table.get()); ++r)
      std::cerr << modstab_table_row_value(table.get(), r) << " " << modstab_table_row_key(table.get(), r) << "\n";
    const int code = emit(table.get(), MODSTAB_FORMAT_JSON, opt.out);
    if (code != kExitOk) return code;
    if (format != MODSTAB_FORMAT_JSON && !opt.out.empty()) emit(table.get(), format, "");
    return modstab_table_passed(table.get()) ? kExitOk : kExitVerification;
  }

  const int code = emit(table.get(), format, opt.out);
  if (code != kExitOk) return code;
  if (*charpoly && !modstab_table_passed(table.get())) return kExitVerification;
  return kExitOk;
}
