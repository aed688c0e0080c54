// Command-line front end: series evaluation, single-identity validation,
// catalog listing and full validation sweeps.
//
// Exit codes: 0 success, 1 validation failure, 2 usage/input error,
// 3 mathematical precondition failure (singularity, guard, hypotheses).
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lauricella/harness.hpp"
#include "lauricella/json_io.hpp"

using namespace lauricella;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitMathError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Point parse_point(const std::string& csv) {
  Point x;
  std::string token;
  std::istringstream ss(csv);
  while (std::getline(ss, token, ',')) x.push_back(parse_complex(token));
  if (x.empty()) throw InputError("--x: expected a comma-separated list of complex values");
  return x;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("LAURICELLA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("LAURICELLA_SEED: not an unsigned integer");
    }
  }
  return 0;
}

struct SeriesFlags {
  int max_degree = SeriesConfig{}.max_degree;
  double term_tol = SeriesConfig{}.term_tol;
  double domain_guard = SeriesConfig{}.domain_guard;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-degree", max_degree, "Total-degree truncation cap");
    cmd->add_option("--term-tol", term_tol, "Shell-norm stopping threshold");
    cmd->add_option("--domain-guard", domain_guard, "Guard-region scale in (0,1]");
  }
  SeriesConfig config() const { return {max_degree, term_tol, domain_guard}; }
};

int cmd_eval(const std::string& kind_name_arg, const std::string& params_path,
             const std::string& x_csv, const SeriesFlags& flags) {
  const Point x = parse_point(x_csv);
  const LauricellaKind kind = parse_kind(kind_name_arg, static_cast<int>(x.size()));
  if (static_cast<int>(x.size()) != kind.arity)
    throw InputError("--x: " + kind_name_arg + " needs " + std::to_string(kind.arity) +
                     " coordinates");
  const ParameterSet params = params_from_json_text(read_file(params_path));
  validate_parameters(kind, params);
  ToleranceConfig tol;
  const SeriesResult res = evaluate(kind, params, x, flags.config(), tol);
  std::cout << series_result_to_json(res) << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& id, const std::string& params_path, const std::string& x_csv,
                 int n, const SeriesFlags& flags) {
  const IdentityEntry* entry = find_entry(id);
  if (!entry) throw InputError("no catalog entry with id '" + id + "'");
  const Point x = parse_point(x_csv);
  if (static_cast<int>(x.size()) != entry->kind.arity)
    throw InputError("--x: entry " + id + " needs " + std::to_string(entry->kind.arity) +
                     " coordinates");
  const ParameterSet params = params_from_json_text(read_file(params_path));
  ToleranceConfig tol;
  const SeriesConfig cfg = flags.config();

  const SideResult lhs = eval_lhs(*entry, params, x, n, cfg, tol);
  const SideResult rhs = eval_rhs(*entry, params, x, n, cfg, tol);
  const double resid =
      frobenius_norm(sub(lhs.value, rhs.value)) / (1.0 + frobenius_norm(lhs.value));

  nlohmann::ordered_json j;
  j["id"] = id;
  j["equation"] = entry->equation;
  j["n"] = n;
  j["lhs"] = nlohmann::ordered_json::parse(matrix_to_json(lhs.value));
  j["rhs"] = nlohmann::ordered_json::parse(matrix_to_json(rhs.value));
  j["residual"] = resid;
  j["converged"] = lhs.converged && rhs.converged;
  if (entry->typo_candidate()) {
    try {
      const SideResult printed = eval_rhs(*entry, params, x, n, cfg, tol, true);
      j["printed_variant_residual"] =
          frobenius_norm(sub(lhs.value, printed.value)) / (1.0 + frobenius_norm(lhs.value));
    } catch (const Error& e) {
      j["printed_variant_error"] = e.what();
    }
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& filter, int trials, const std::string& dims_csv, int n_max,
              uint64_t seed, const std::string& out_path, double residual_tol,
              const SeriesFlags& flags) {
  std::vector<int> dims;
  std::string token;
  std::istringstream ss(dims_csv);
  while (std::getline(ss, token, ',')) {
    try {
      dims.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw InputError("--dims: expected a comma-separated list of integers");
    }
  }
  if (dims.empty()) throw InputError("--dims: empty list");

  RunOptions opts;
  if (residual_tol > 0.0) opts.residual_tol_override = residual_tol;
  ToleranceConfig tol;
  const ValidationReport report =
      run_suite(filter, trials, dims, n_max, flags.config(), tol, seed, opts);
  const std::string body = report_to_json(report);
  if (out_path.empty()) {
    std::cout << body << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write report file: " + out_path);
    out << body << "\n";
  }

  bool ok = true;
  for (const EntryReport& e : report.entries) {
    if (!e.pass) {
      ok = false;
      std::cerr << "FAIL " << e.id << " max_residual=" << e.max_residual << "\n";
    }
  }
  if (report.matched_entries == 0)
    std::cerr << "note: filter matched 0 entries; report passes vacuously\n";
  return ok ? kExitOk : kExitValidationFailure;
}

int cmd_list(bool as_json) {
  if (as_json) {
    std::cout << catalog_to_json() << "\n";
    return kExitOk;
  }
  std::printf("%-24s %-5s %-10s %-6s %-5s %s\n", "id", "kind", "equation", "shift", "typo",
              "hypotheses");
  for (const IdentityEntry& e : catalog()) {
    std::string hyps;
    for (const CommutePair& p : e.hypotheses) {
      if (!hyps.empty()) hyps += " ";
      hyps += format_param(e.kind, p.first) + "~" + format_param(e.kind, p.second);
    }
    const std::string shift =
        format_param(e.kind, e.lhs.target) + (e.lhs.direction > 0 ? "+n" : "-n");
    std::printf("%-24s %-5s %-10s %-6s %-5s %s\n", e.id.c_str(), kind_name(e.kind).c_str(),
                e.equation.c_str(), shift.c_str(), e.typo_candidate() ? "yes" : "", hyps.c_str());
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-argument Lauricella hypergeometric functions: evaluation and "
               "recursion-identity validation"};
  app.require_subcommand(1);

  std::string kind_arg, params_path, x_csv, id_arg, filter, dims_csv = "1,2", out_path;
  int n = 1, trials = 3, n_max = 2;
  double residual_tol = 0.0;
  uint64_t seed = 0;
  bool seed_given = false, as_json = false;
  SeriesFlags eval_flags, validate_flags, sweep_flags;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a function by truncated series");
  eval->add_option("--kind", kind_arg, "Function kind (GA..GD, F1..F14)")->required();
  eval->add_option("--params", params_path, "Parameter JSON file")->required();
  eval->add_option("--x", x_csv, "Comma-separated complex coordinates, e.g. 0.1,0.2+0.05i")
      ->required();
  eval_flags.attach(eval);

  CLI::App* validate = app.add_subcommand("validate", "Evaluate both sides of one identity");
  validate->add_option("--id", id_arg, "Catalog entry id, e.g. FA.A.raise.unit")->required();
  validate->add_option("--params", params_path, "Parameter JSON file")->required();
  validate->add_option("--x", x_csv, "Comma-separated complex coordinates")->required();
  validate->add_option("--n", n, "Shift magnitude")->check(CLI::NonNegativeNumber);
  validate_flags.attach(validate);

  CLI::App* sweep = app.add_subcommand("sweep", "Validate catalog entries on random draws");
  sweep->add_option("--filter", filter, "Entry-id glob, e.g. 'FA.*' (default: all)");
  sweep->add_option("--trials", trials, "Trials per entry/dim/n");
  sweep->add_option("--dims", dims_csv, "Comma-separated matrix dimensions");
  sweep->add_option("--n-max", n_max, "Largest shift magnitude");
  sweep->add_option("--seed", seed, "RNG seed (default: LAURICELLA_SEED or 0)")
      ->each([&](const std::string&) { seed_given = true; });
  sweep->add_option("--out", out_path, "Report file (default: stdout)");
  sweep->add_option("--residual-tol", residual_tol,
                    "Override per-dim residual tolerances (default 1e-10 at r=1, 1e-8 above)");
  sweep_flags.attach(sweep);

  CLI::App* list = app.add_subcommand("list", "List catalog entries");
  list->add_flag("--json", as_json, "Emit the catalog export JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (eval->parsed()) return cmd_eval(kind_arg, params_path, x_csv, eval_flags);
    if (validate->parsed()) return cmd_validate(id_arg, params_path, x_csv, n, validate_flags);
    if (sweep->parsed()) {
      if (!seed_given) seed = default_seed();
      return cmd_sweep(filter, trials, dims_csv, n_max, seed, out_path, residual_tol,
                       sweep_flags);
    }
    if (list->parsed()) return cmd_list(as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathError;
  } catch (const SingularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathError;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathError;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
