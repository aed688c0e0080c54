#include "lauricella/json_io.hpp"

#include <cmath>

#include <json.hpp>

#include "lauricella/harness.hpp"

namespace lauricella {

using json = nlohmann::ordered_json;

namespace {

json matrix_to_obj(const ComplexMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
  return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_obj(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected a matrix object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError(where + ".dim: expected an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw InputError(where + ".dim: must be positive");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw InputError(where + ".entries: expected an array of [re, im] pairs");
  const json& entries = j["entries"];
  if (static_cast<int>(entries.size()) != dim * dim)
    throw InputError(where + ".entries: expected " + std::to_string(dim * dim) +
                     " pairs, got " + std::to_string(entries.size()));
  ComplexMatrix m(dim);
  for (size_t i = 0; i < entries.size(); ++i) {
    const json& p = entries[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw InputError(where + ".entries[" + std::to_string(i) + "]: expected [re, im]");
    m.entries()[i] = {p[0].get<double>(), p[1].get<double>()};
  }
  return m;
}

json parse_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(where + ": invalid JSON: " + e.what());
  }
}

std::vector<ComplexMatrix> matrix_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of matrices");
  std::vector<ComplexMatrix> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(matrix_from_obj(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

} // namespace

std::string matrix_to_json(const ComplexMatrix& m) { return matrix_to_obj(m).dump(); }

ComplexMatrix matrix_from_json_text(const std::string& text, const std::string& where) {
  return matrix_from_obj(parse_text(text, where), where);
}

std::string params_to_json(const ParameterSet& p) {
  json j;
  for (const auto& [key, list] : {std::pair{"a", &p.a}, {"b", &p.b}, {"c", &p.c}}) {
    json arr = json::array();
    for (const ComplexMatrix& m : *list) arr.push_back(matrix_to_obj(m));
    j[key] = std::move(arr);
  }
  return j.dump();
}

ParameterSet params_from_json_text(const std::string& text) {
  const json j = parse_text(text, "params");
  if (!j.is_object()) throw InputError("params: expected an object with a/b/c arrays");
  ParameterSet p;
  for (const char* key : {"a", "b", "c"}) {
    if (!j.contains(key))
      throw InputError(std::string("params.") + key + ": missing parameter list");
    auto list = matrix_list(j[key], std::string("params.") + key);
    if (key[0] == 'a') p.a = std::move(list);
    else if (key[0] == 'b') p.b = std::move(list);
    else p.c = std::move(list);
  }
  return p;
}

std::string series_result_to_json(const SeriesResult& r) {
  json j;
  j["value"] = matrix_to_obj(r.value);
  j["last_shell_norm"] = r.last_shell_norm;
  j["shells_used"] = r.shells_used;
  j["converged"] = r.converged;
  return j.dump();
}

namespace {

json entry_to_obj(const IdentityEntry& e) {
  json j;
  j["id"] = e.id;
  j["kind"] = kind_name(e.kind);
  j["equation"] = e.equation;
  json hyp = json::array();
  for (const CommutePair& p : e.hypotheses)
    hyp.push_back(format_param(e.kind, p.first) + "~" + format_param(e.kind, p.second));
  j["hypotheses"] = std::move(hyp);
  j["shift"] = format_param(e.kind, e.lhs.target) +
               std::string(e.lhs.direction > 0 ? "+nI" : "-nI");
  j["typo_candidate"] = e.typo_candidate();
  if (e.fixed_n) j["fixed_n"] = *e.fixed_n;
  if (!e.note.empty()) j["note"] = e.note;
  if (!e.derived_from.empty()) j["derived_from"] = e.derived_from;
  return j;
}

} // namespace

std::string catalog_entry_to_json(const IdentityEntry& e) { return entry_to_obj(e).dump(); }

std::string catalog_to_json() {
  json arr = json::array();
  for (const IdentityEntry& e : catalog()) arr.push_back(entry_to_obj(e));
  return arr.dump(2);
}

std::string suite_config_json(const std::string& filter, int trials,
                              const std::vector<int>& dims, int n_max, const SeriesConfig& cfg,
                              const RunOptions& opts) {
  json j;
  j["filter"] = filter;
  j["trials"] = trials;
  j["dims"] = dims;
  j["n_max"] = n_max;
  j["max_degree"] = cfg.max_degree;
  j["term_tol"] = cfg.term_tol;
  j["domain_guard"] = cfg.domain_guard;
  j["residual_tol_r1"] = opts.residual_tol_r1;
  j["residual_tol_rk"] = opts.residual_tol_rk;
  if (opts.residual_tol_override) j["residual_tol_override"] = *opts.residual_tol_override;
  return j.dump();
}

std::string trial_inputs_json(const IdentityEntry& entry, const ParameterSet& params,
                              const Point& x, int n, double residual) {
  json j;
  j["entry"] = entry.id;
  j["n"] = n;
  j["residual"] = residual;
  json xs = json::array();
  for (const Complex& z : x) xs.push_back(json::array({z.real(), z.imag()}));
  j["x"] = std::move(xs);
  j["params"] = json::parse(params_to_json(params));
  return j.dump();
}

std::string report_to_json(const ValidationReport& report) {
  json j;
  j["seed"] = report.seed;
  j["config"] = json::parse(report.config_json);
  j["matched_entries"] = report.matched_entries;
  json entries = json::array();
  for (const EntryReport& e : report.entries) {
    json je;
    je["id"] = e.id;
    je["equation"] = e.equation;
    je["trials"] = e.trials;
    je["redraws"] = e.redraws;
    je["max_residual"] = e.max_residual;
    je["pass"] = e.pass;
    je["inconclusive"] = e.inconclusive;
    if (e.printed_variant_residual) je["printed_variant_residual"] = *e.printed_variant_residual;
    if (!e.errors.empty()) je["errors"] = e.errors;
    if (!e.failure_inputs_json.empty()) je["failure_inputs"] = json::parse(e.failure_inputs_json);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

Complex parse_complex(const std::string& token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty complex token");

  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) {
    try {
      size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw InputError("");
      return {v, 0.0};
    } catch (const std::exception&) {
      throw InputError("bad complex token '" + token + "' (expected forms: 1.5, 0.1+0.2i)");
    }
  }

  s.pop_back(); // strip the trailing i
  // Split at the last +/- that is not a leading sign and not an exponent sign.
  size_t split = std::string::npos;
  for (size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto num = [&](std::string t, bool unit_ok) -> double {
    if (unit_ok && (t.empty() || t == "+" || t == "-")) return t == "-" ? -1.0 : 1.0;
    try {
      size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) throw InputError("");
      return v;
    } catch (const std::exception&) {
      throw InputError("bad complex token '" + token + "' (expected forms: 1.5, 0.1+0.2i)");
    }
  };
  if (split == std::string::npos) return {0.0, num(s, true)};
  return {num(s.substr(0, split), false), num(s.substr(split), true)};
}

std::string format_complex(const Complex& z) {
  std::string out = std::to_string(z.real());
  if (z.imag() != 0.0) {
    out += (z.imag() >= 0.0 ? "+" : "-");
    out += std::to_string(std::abs(z.imag())) + "i";
  }
  return out;
}

} // namespace lauricella
