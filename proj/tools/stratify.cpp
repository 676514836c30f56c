// stratify.cpp
//
// Command line front end. Four subcommands:
//   analyze   full report on one algebra (file or bundled fixture)
//   ext       ext dimension table between two standard modules
//   fixtures  list the bundled fixtures
//   selftest  invariant sweep over the fixtures
//
// Exit codes: 0 done, 1 selftest found failures, 2 invalid input,
// 3 a cap ran out before an honest answer was possible.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "strat/fixtures.hpp"
#include "strat/report.hpp"

namespace {

using strat::AnalyzeOptions;
using strat::AnalyzeResult;
using strat::Json;

struct CommonArgs {
  AnalyzeOptions opt;
  std::string input_path;
  std::string json_path;  // "-" for stdout
};

void add_common(CLI::App* cmd, CommonArgs& args, bool takes_input) {
  if (takes_input) {
    cmd->add_option("input", args.input_path, "algebra description file");
    cmd->add_option("--fixture", args.opt.fixture, "bundled fixture name instead of a file");
  }
  cmd->add_option("--field", args.opt.field, "coefficient field, q or fp:<prime>")
      ->capture_default_str();
  cmd->add_option("--max-path-length", args.opt.max_path_length, "path length cap for the algebra")
      ->capture_default_str();
  cmd->add_option("--json", args.json_path, "write the JSON report to this path, '-' for stdout");
}

std::string load_input(const CommonArgs& args) {
  if (!args.opt.fixture.empty()) return strat::fixture(args.opt.fixture).text;
  if (args.input_path.empty())
    throw std::runtime_error("no input: give a file or --fixture <name>");
  std::ifstream in(args.input_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + args.input_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Report writer shared by analyze and ext. Returns the exit code.
int finish(const AnalyzeResult& res, const CommonArgs& args, const std::string& summary) {
  if (res.exit_code != 0) {
    std::cerr << "stratify: " << res.error << "\n";
    return res.exit_code;
  }
  if (args.json_path == "-") {
    std::cout << strat::render_report(res.report);
  } else if (!args.json_path.empty()) {
    std::ofstream out(args.json_path, std::ios::binary);
    if (!out) {
      std::cerr << "stratify: cannot write '" << args.json_path << "'\n";
      return 2;
    }
    out << strat::render_report(res.report);
    std::cout << summary;
  } else {
    std::cout << summary;
  }
  return 0;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string analyze_summary(const Json& r) {
  std::ostringstream s;
  const Json& a = r["algebra"];
  s << "algebra: " << a["vertices"].size() << " vertices, " << a["arrows"].size()
    << " arrows, dimension " << a["dimension"].get<int>() << "\n";
  s << "order: " << r["order"]["kind"].get<std::string>() << "\n";
  const Json& st = r["stratification"];
  s << "standardly stratified [" << st["claim"].get<std::string>()
    << "]: " << yesno(st["standardly_stratified"].get<bool>())
    << "   quasi-hereditary: " << yesno(st["quasi_hereditary"].get<bool>()) << "\n";
  const Json& d = r["directedness"];
  s << "directed [" << d["claim"].get<std::string>() << "]: " << yesno(d["directed"].get<bool>())
    << " (" << (d["proven"].get<bool>() ? "proven" : "explored to cap") << ", "
    << d["violations"].size() << " violations)\n";
  const Json& t = r["theorem14"];
  s << "ext freeness [" << t["claim"].get<std::string>()
    << "]: " << yesno(t["pass"].get<bool>()) << "\n";
  const Json& g = r["gamma"];
  s << "gamma graded dims: " << g["gamma_graded_dims"].dump() << " total "
    << g["gamma_total_dim"].get<int>() << "\n";
  auto section = [&](const char* key, const char* label, const char* flag) {
    const Json& j = r[key];
    if (j.contains("skipped")) {
      s << label << ": skipped (" << j["skipped"].get<std::string>() << ")\n";
    } else {
      s << label << " [" << j["claim"].get<std::string>() << "]: " << yesno(j[flag].get<bool>())
        << "\n";
    }
  };
  section("koszul", "koszul", "verdict");
  section("gamma_stratified_leq", "gamma stratified for the order", "stratified");
  section("gamma_stratified_op", "gamma stratified for the opposite", "stratified");
  section("prop216", "linear slice implication", "implication_holds");
  const Json& e = r["epss"];
  if (e["applicable"].get<bool>()) {
    s << "relative layer: axioms " << (e["axioms"]["ok"].get<bool>() ? "ok" : "FAIL")
      << ", hypotheses [" << e["thm212"]["claim"].get<std::string>()
      << "] " << yesno(e["thm212"]["ok"].get<bool>()) << "\n";
  } else {
    s << "relative layer: not applicable (" << e["reason"].get<std::string>() << ")\n";
  }
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratification toolkit for bound quiver algebras"};
  app.require_subcommand(1);

  CommonArgs an_args;
  auto* an = app.add_subcommand("analyze", "full report on one algebra");
  add_common(an, an_args, true);
  an->add_option("--max-ext-degree", an_args.opt.max_ext_degree,
                 "top degree for ext computations")
      ->capture_default_str();
  an->add_option("--max-gamma-degree", an_args.opt.max_gamma_degree,
                 "degree bound for the ext algebra")
      ->capture_default_str();

  CommonArgs ext_args;
  std::string ext_from, ext_to;
  int ext_maxdeg = 12;
  auto* ex = app.add_subcommand("ext", "ext dimensions between two standard modules");
  add_common(ex, ext_args, true);
  ex->add_option("--from", ext_from, "source vertex label")->required();
  ex->add_option("--to", ext_to, "target vertex label")->required();
  ex->add_option("--max-degree", ext_maxdeg, "top ext degree")->capture_default_str();

  CommonArgs fx_args;
  auto* fx = app.add_subcommand("fixtures", "list the bundled fixtures");
  fx->add_option("--json", fx_args.json_path, "write the list as JSON, '-' for stdout");

  bool corrupt = false;
  auto* st = app.add_subcommand("selftest", "invariant sweep over the bundled fixtures");
  st->add_flag("--inject-corruption", corrupt,
               "break one ext product on purpose; the sweep must notice");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) {
      std::string text = load_input(an_args);
      AnalyzeResult res = strat::run_analysis(text, an_args.opt);
      return finish(res, an_args, res.exit_code == 0 ? analyze_summary(res.report) : "");
    }

    if (ex->parsed()) {
      std::string text = load_input(ext_args);
      AnalyzeResult res = strat::ext_table(text, ext_args.opt, ext_from, ext_to, ext_maxdeg);
      std::string summary;
      if (res.exit_code == 0) {
        std::ostringstream s;
        s << "ext(delta_" << ext_from << ", delta_" << ext_to << "):";
        for (int i = 0; i < int(res.report["dims"].size()); ++i)
          s << " s=" << i << ":" << res.report["dims"][i].get<int>();
        s << (res.report["proven"].get<bool>() ? "  (proven)" : "  (explored to cap)") << "\n";
        summary = s.str();
      }
      return finish(res, ext_args, summary);
    }

    if (fx->parsed()) {
      if (fx_args.json_path == "-") {
        Json list = Json::array();
        for (const auto& f : strat::fixtures())
          list.push_back(Json{{"name", f.name}, {"description", f.description}});
        std::cout << strat::render_report(list);
      } else {
        for (const auto& f : strat::fixtures())
          std::cout << f.name << "  " << f.description << "\n";
      }
      return 0;
    }

    if (st->parsed()) {
      strat::SelftestResult res = strat::run_selftest(corrupt);
      for (const auto& line : res.lines) std::cout << line << "\n";
      std::cout << res.checks << " checks, " << res.failures << " failures\n";
      return res.failures == 0 ? 0 : 1;
    }
  } catch (const std::out_of_range& e) {
    std::cerr << "stratify: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "stratify: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
