// report.hpp
//
// One JSON document per analysis run. Key order is fixed and no timing or
// environment data is recorded, so the same input under the same options
// always renders to the same bytes. Verdicts lifted from the theory carry
// a "claim" tag naming the statement they instantiate, and every
// cap-limited result says whether it is proven or only explored to a cap.

#ifndef STRAT_REPORT_HPP
#define STRAT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strat/epss.hpp"
#include "strat/graded.hpp"
#include "strat/stratification.hpp"
#include "strat/yoneda.hpp"

namespace strat {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  int max_ext_degree = 12;
  int max_gamma_degree = 8;
  int max_path_length = 30;
  std::string field = "q";  // "q" or "fp:<prime>"
  std::string fixture;      // set when the input came from a bundled fixture
};

struct AnalyzeResult {
  int exit_code = 0;  // 0 report ready, 2 invalid input, 3 a cap ran out
  Json report;
  std::string error;  // human readable cause for nonzero exit codes
};

// 64-bit FNV-1a of a byte string, rendered "fnv1a:<16 hex digits>".
std::string fnv1a_digest(const std::string& data);

// Digest of a filtration certificate: layer labels and embedding matrices
// in a canonical text form. Lets a report pin a witness without dumping it.
std::string cert_witness(const FiltrationCert& cert);

// Stable rendering: two-space indent, trailing newline.
std::string render_report(const Json& j);

// The full pipeline on one input text: algebra, standard modules,
// stratification and directedness, the ext algebra with its presentation,
// koszulity, and the relative layer. Prime fields skip every step that
// needs the graded radical; those sections carry a "skipped" note instead.
AnalyzeResult run_analysis(const std::string& text, const AnalyzeOptions& opt);

// Ext dimension table between two standard modules named by vertex label.
AnalyzeResult ext_table(const std::string& text, const AnalyzeOptions& opt,
                        const std::string& from, const std::string& to, int maxdeg);

struct SelftestResult {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> lines;  // "pass ..." or "FAIL ..." per check
};

// Invariant sweep over the bundled fixtures: associativity of both
// structure constant tables, certificate recheck, agreement of the two
// stratification routes, and the hypothesis-to-verdict implications.
// The corruption switch deliberately breaks one ext product on one fixture
// to prove the sweep can fail.
SelftestResult run_selftest(bool inject_corruption);

}  // namespace strat

#endif
