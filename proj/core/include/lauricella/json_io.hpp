#ifndef LAURICELLA_JSON_IO_HPP
#define LAURICELLA_JSON_IO_HPP

#include <string>
#include <vector>

#include "lauricella/catalog.hpp"
#include "lauricella/series.hpp"

namespace lauricella {

struct EntryReport;
struct ValidationReport;
struct RunOptions;

// Matrix wire format, used by every CLI command:
//   {"dim": r, "entries": [[re, im], ...]}   (row-major)
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json_text(const std::string& text, const std::string& where);

// Parameter file: {"a": [matrix...], "b": [...], "c": [...]}
std::string params_to_json(const ParameterSet& p);
ParameterSet params_from_json_text(const std::string& text);

std::string series_result_to_json(const SeriesResult& r);

// Catalog export: id, kind, equation label, hypotheses, typo-candidate flag.
std::string catalog_entry_to_json(const IdentityEntry& e);
std::string catalog_to_json();

std::string report_to_json(const ValidationReport& report);

// Internal helpers shared with the harness (deterministic bodies, no
// timestamps).
std::string suite_config_json(const std::string& filter, int trials,
                              const std::vector<int>& dims, int n_max, const SeriesConfig& cfg,
                              const RunOptions& opts);
std::string trial_inputs_json(const IdentityEntry& entry, const ParameterSet& params,
                              const Point& x, int n, double residual);

// CLI complex token, e.g. "0.5", "0.1+0.2i", "-1i".
Complex parse_complex(const std::string& token);
std::string format_complex(const Complex& z);

} // namespace lauricella

#endif
