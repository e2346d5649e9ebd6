// veesys: build, check, restrict, compare and catalog covector systems.
//
// Exit codes: 0 success (or a v-system / equivalent pair), 1 negative verdict,
// 2 user error, 3 numeric degeneracy.

#include "veesys/veesys.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <limits>
#include <memory>
#include <string>

namespace {

using nlohmann::json;

struct SystemDeleter {
  void operator()(veesys_system* s) const { veesys_free(s); }
};
using SystemPtr = std::unique_ptr<veesys_system, SystemDeleter>;

struct StringDeleter {
  void operator()(char* s) const { veesys_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(veesys_status status) {
  switch (status) {
    case VEESYS_OK: return 0;
    case VEESYS_E_INVALID_SPEC:
    case VEESYS_E_PARSE:
    case VEESYS_E_IO:
    case VEESYS_E_EMPTY_SUBSPACE:
    case VEESYS_E_EMPTY_RESTRICTION:
    case VEESYS_E_PRECONDITION:
    case VEESYS_E_INVALID_ARGUMENT: return 2;
    default: return 3;
  }
}

/// Prints the error and returns the exit code for a failed call.
int fail(veesys_status status) {
  std::cerr << "error: " << veesys_last_error() << '\n';
  return exit_code(status);
}

struct Loaded {
  SystemPtr system;
  int code = 0;
};

Loaded load(const std::string& path) {
  veesys_system* raw = nullptr;
  const veesys_status st = veesys_load(path.c_str(), &raw);
  if (st != VEESYS_OK) return {nullptr, fail(st)};
  return {SystemPtr(raw), 0};
}

void summarize(const veesys_system* s) {
  std::cout << "name: " << veesys_name(s) << "\ndim: " << veesys_dim(s)
            << "\ncovectors: " << veesys_count(s) << '\n';
}

/// Writes the system to `out`, or its JSON to stdout when `out` is empty.
int emit(const veesys_system* s, const std::string& out) {
  if (out.empty()) {
    char* text = nullptr;
    const veesys_status st = veesys_to_json(s, &text);
    if (st != VEESYS_OK) return fail(st);
    StringPtr guard(text);
    std::cout << text;
    return 0;
  }
  const veesys_status st = veesys_save(s, out.c_str());
  if (st != VEESYS_OK) return fail(st);
  summarize(s);
  std::cout << "written: " << out << '\n';
  return 0;
}

int cmd_build(const std::string& spec, const std::string& out) {
  veesys_system* raw = nullptr;
  const veesys_status st = veesys_build(spec.c_str(), &raw);
  if (st != VEESYS_OK) return fail(st);
  SystemPtr s(raw);
  return emit(s.get(), out);
}

int cmd_check(const std::string& path, bool wdvv, std::size_t points, std::uint64_t seed,
              bool as_json) {
  Loaded in = load(path);
  if (!in.system) return in.code;
  veesys_tolerance tol = veesys_tolerance_default();
  tol.rng_seed = seed;
  int is_vee = 0;
  char* report_text = nullptr;
  veesys_status st = veesys_check(in.system.get(), &tol, &is_vee, &report_text);
  if (st != VEESYS_OK) return fail(st);
  StringPtr report_guard(report_text);
  json report = json::parse(report_text);

  if (wdvv) {
    double residual = 0.0, margin = 0.0;
    st = veesys_wdvv_sweep(in.system.get(), &tol, points, &residual, &margin);
    if (st != VEESYS_OK) return fail(st);
    report["wdvv"] = {{"points", points}, {"seed", seed}, {"max_residual", residual},
                      {"regularity_margin", margin}};
  }

  if (as_json) {
    std::cout << report.dump() << '\n';
  } else {
    std::cout << "system: " << report["name"].get<std::string>() << " (dim " << report["dim"]
              << ", " << report["count"] << " covectors)\n";
    std::cout << "v-system: " << (is_vee ? "yes" : "no") << "\n";
    std::cout << "planes: " << report["planes"] << ", max residual " << report["max_residual"]
              << '\n';
    for (const auto& v : report["violations"]) {
      std::cout << "violation: plane " << v["plane"] << " covectors " << v["plane_members"].dump()
                << ", alpha " << v["alpha"] << ", residual " << v["residual"] << '\n';
    }
    if (wdvv) {
      const auto& w = report["wdvv"];
      std::cout << "wdvv: max residual " << w["max_residual"] << " over " << w["points"]
                << " points (seed " << w["seed"] << ", margin " << w["regularity_margin"] << ")\n";
    }
  }
  return is_vee ? 0 : 1;
}

int cmd_restrict(const std::string& path, const std::string& along, const std::string& out) {
  Loaded in = load(path);
  if (!in.system) return in.code;
  veesys_system* raw = nullptr;
  char* log_text = nullptr;
  const veesys_status st = veesys_restrict(in.system.get(), along.c_str(), nullptr, &raw, &log_text);
  if (st != VEESYS_OK) return fail(st);
  SystemPtr result(raw);
  StringPtr log_guard(log_text);
  const json log = json::parse(log_text);
  std::ostream& info = out.empty() ? std::cerr : std::cout;
  info << "subsystem: " << log["subsystem"].dump() << '\n';
  for (const auto& g : log["merged"]) {
    info << "merged: covectors " << g["sources"].dump() << " with scalars "
         << g["source_scalars"].dump() << " -> " << g["merged_scalar"] << '\n';
  }
  if (!log["dropped"].empty()) info << "dropped (zero on L): " << log["dropped"].dump() << '\n';
  return emit(result.get(), out);
}

int cmd_equiv(const std::string& path1, const std::string& path2) {
  Loaded a = load(path1);
  if (!a.system) return a.code;
  Loaded b = load(path2);
  if (!b.system) return b.code;
  int eq = 0;
  char* cert = nullptr;
  const veesys_status st = veesys_equivalent(a.system.get(), b.system.get(), nullptr, &eq, &cert);
  if (st != VEESYS_OK) return fail(st);
  StringPtr guard(cert);
  if (!eq) {
    std::cout << "not equivalent\n";
    return 1;
  }
  std::cout << cert << '\n';
  return 0;
}

int print_report(const char* title, veesys_status st, int all_pass, const char* text) {
  if (st != VEESYS_OK) return fail(st);
  std::cerr << "== " << title << '\n';
  const json report = json::parse(text);
  for (const auto& line : report["lines"]) {
    std::cerr << (line["pass"].get<bool>() ? "PASS  " : "FAIL  ")
              << line["statement"].get<std::string>() << "  [" << line["detail"].get<std::string>()
              << "]\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_catalog(const std::string& group, double lambda, bool verify) {
  char* text = nullptr;
  veesys_status st = veesys_catalog(group.c_str(), lambda, &text);
  if (st != VEESYS_OK) return fail(st);
  StringPtr guard(text);
  std::cout << text;
  if (!verify) return 0;

  int pass1 = 0, pass2 = 0;
  char* r1 = nullptr;
  char* r2 = nullptr;
  st = veesys_verify_equivalence_table(&pass1, &r1);
  StringPtr g1(r1);
  int code = print_report("equivalence table", st, pass1, r1);
  if (code > 1) return code;
  st = veesys_verify_theorem4(&pass2, &r2);
  StringPtr g2(r2);
  const int code2 = print_report("one-parameter family identifications", st, pass2, r2);
  if (code2 > 1) return code2;
  return std::max(code, code2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify, restrict and classify v-systems"};
  app.require_subcommand(1);

  std::string spec, out, path, path2, along, group;
  bool wdvv = false, as_json = false, verify = false;
  std::size_t points = 20;
  std::uint64_t seed = 1;
  double lambda = std::numeric_limits<double>::quiet_NaN();

  auto* build = app.add_subcommand("build", "Build a named system, e.g. \"F4:lambda=1\"");
  build->add_option("spec", spec, "System spec string")->required();
  build->add_option("-o,--out", out, "Output file (JSON to stdout when omitted)");

  auto* check = app.add_subcommand("check", "Decide the v-conditions for a system file");
  check->add_option("path", path, "System file")->required();
  check->add_flag("--wdvv", wdvv, "Also evaluate the WDVV residual at seeded points");
  check->add_option("--points", points, "Number of sample points")->capture_default_str();
  check->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  check->add_flag("--json", as_json, "Machine-readable report");

  auto* restrict = app.add_subcommand("restrict", "Restrict a system along a subsystem");
  restrict->add_option("path", path, "System file")->required();
  restrict->add_option("--along", along, "Covectors such as \"e7-e8,e7+e8\" or 0-based indices")
      ->required();
  restrict->add_option("-o,--out", out, "Output file (JSON to stdout when omitted)");

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two system files");
  equiv->add_option("path1", path, "First system file")->required();
  equiv->add_option("path2", path2, "Second system file")->required();

  auto* catalog = app.add_subcommand("catalog", "Restrictions of E6, E7, E8 or F4 as JSON lines");
  catalog->add_option("group", group, "E6, E7, E8 or F4")->required();
  catalog->add_option("--lambda", lambda, "F4 orbit parameter (default 1)");
  catalog->add_flag("--verify", verify, "Also verify the known equivalences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*build) return cmd_build(spec, out);
  if (*check) return cmd_check(path, wdvv, points, seed, as_json);
  if (*restrict) return cmd_restrict(path, along, out);
  if (*equiv) return cmd_equiv(path, path2);
  if (*catalog) return cmd_catalog(group, lambda, verify);
  return 2;
}
