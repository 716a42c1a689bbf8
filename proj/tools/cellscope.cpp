// cellscope: left cells, skew tableaux and the weak-interval classification
// for the symmetric group, from the command line.
//
// Exit codes: 0 success, 1 a verification found a mismatch, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cellscope/cells.hpp"
#include "cellscope/classify.hpp"
#include "cellscope/error.hpp"
#include "cellscope/json_io.hpp"
#include "cellscope/parallel.hpp"
#include "cellscope/parabolic.hpp"
#include "cellscope/tableau.hpp"

namespace cs = cellscope;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 0;
  std::string shape;
  std::string w;
  std::string j;
  std::string entries_file;
  std::string method = "approx";
  std::string format = "json";
  std::string tableau_kind = "std";
  int offset = 0;
  int rank_cap = cs::kDefaultRankCap;
  int threads = 0;
  bool summary_only = false;
};

int env_rank_cap() {
  const char* raw = std::getenv("CELLSCOPE_RANK_CAP");
  if (raw == nullptr || *raw == '\0') return cs::kDefaultRankCap;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw cs::Error(cs::ErrorKind::parse, std::string("CELLSCOPE_RANK_CAP token '") + raw + "'");
  }
}

void print_line(const cs::Json& j) { std::cout << j.dump() << '\n'; }

cs::CellPartition build_cells(const RunConfig& cfg) {
  cs::check_rank(cfg.n, cfg.rank_cap);
  const cs::CellMethod method = cs::parse_cell_method(cfg.method);
  if (method == cs::CellMethod::rs) return cs::rs_cells(cfg.n, cfg.rank_cap);
  return cs::approx_cells(cfg.n, cfg.rank_cap);
}

int run_cells(const RunConfig& cfg) {
  const auto cp = build_cells(cfg);
  for (std::size_t k = 0; k < cp.cell_count(); ++k) print_line(cs::cell_to_json(cp, k));
  return 0;
}

int run_tableaux(const RunConfig& cfg) {
  const cs::SkewShape shape = cs::parse_shape(cfg.shape);
  if (cfg.tableau_kind == "top") {
    print_line(cs::tableau_to_json(cs::tau_top(shape, cfg.offset)));
  } else if (cfg.tableau_kind == "col") {
    print_line(cs::tableau_to_json(cs::tau_col(shape, cfg.offset)));
  } else {
    for (const auto& t : cs::enumerate_std(shape, cfg.offset)) print_line(cs::tableau_to_json(t));
  }
  return 0;
}

int run_sqsh(const RunConfig& cfg) {
  const cs::SkewShape shape = cs::parse_shape(cfg.shape);
  std::ifstream in(cfg.entries_file);
  if (!in) throw cs::Error(cs::ErrorKind::parse, "cannot open entries file '" + cfg.entries_file + "'");
  cs::Json doc;
  try {
    doc = cs::Json::parse(in);
  } catch (const cs::Json::exception& ex) {
    throw cs::Error(cs::ErrorKind::parse, "entries file '" + cfg.entries_file + "': " + ex.what());
  }
  cs::Json tab;
  if (doc.is_array()) {
    tab["entries"] = doc;
  } else {
    tab = doc;
  }
  tab["lambda"] = shape.lambda().parts();
  tab["mu"] = shape.mu().parts();
  const cs::SkewTableau t = cs::tableau_from_json(tab);
  print_line(cs::tableau_to_json(cs::squash(t)));
  return 0;
}

int run_check(const RunConfig& cfg) {
  cs::check_rank(cfg.n, cfg.rank_cap);
  const cs::Permutation w = cs::parse_permutation(cfg.w);
  if (w.rank() != cfg.n) {
    throw cs::Error(cs::ErrorKind::parse, "permutation '" + cfg.w + "' is not in Sym(" +
                                              std::to_string(cfg.n) + ")");
  }
  const cs::GenSet j = cs::parse_genset(cfg.j, cfg.n);
  const cs::ElementSet interval = cs::weak_interval(w, j);
  const bool union_of_cells = cfg.method == "local"
                                  ? cs::local_union_check(interval)
                                  : cs::is_union_of_left_cells(interval, build_cells(cfg));
  const bool qualifying = !interval.empty() && union_of_cells;

  cs::Json out;
  out["n"] = cfg.n;
  out["w"] = cs::to_string(w);
  out["J"] = cs::to_string(j);
  out["in_DJ"] = cs::in_coset_reps(w, j);
  out["interval_size"] = interval.size();
  cs::Json members = cs::Json::array();
  for (const auto& x : interval.members()) members.push_back(cs::to_string(x));
  out["interval"] = std::move(members);
  out["union_of_cells"] = union_of_cells;
  out["qualifying"] = qualifying;
  out["shape"] = nullptr;
  int status = 0;
  if (cs::in_coset_reps(w, j)) {
    const cs::SkewTableau t = cs::canonical_tableau(j, w);
    const bool maximal = cs::is_maximal_tableau(t);
    if (qualifying) out["shape"] = cs::to_string(t.shape());
    out["canonical_tableau"] = cs::tableau_to_json(t);
    out["canonical_is_maximal"] = maximal;
    if (maximal != qualifying) status = kExitMismatch;
  }
  print_line(out);
  return status;
}

int run_verify(const RunConfig& cfg) {
  cs::check_rank(cfg.n, cfg.rank_cap);
  const cs::CellMethod method = cs::parse_cell_method(cfg.method);
  const cs::VerificationReport report = cs::verify_main_theorem(cfg.n, method, cfg.rank_cap);
  const cs::IntervalClassification intervals =
      cs::interval_classification_check(cfg.n, cs::rs_cells(cfg.n, cfg.rank_cap));
  const bool ok = report.theorem_holds() && intervals.holds();

  if (cfg.format == "text") {
    std::cout << "n=" << cfg.n << " method=" << cs::to_string(method) << '\n'
              << "pairs checked: " << report.records.size() << '\n'
              << "qualifying pairs: " << report.qualifying_pairs << '\n'
              << "basic skew diagrams: " << report.basic_skew_diagrams << '\n'
              << "mismatches: " << report.mismatches.size() << '\n'
              << "interval classification: " << (intervals.holds() ? "holds" : "FAILS") << '\n'
              << (ok ? "theorem holds" : "THEOREM FAILS") << '\n';
    return ok ? 0 : kExitMismatch;
  }
  if (!cfg.summary_only) {
    for (const auto& r : report.records) print_line(cs::record_to_json(r));
  }
  cs::Json summary = cs::report_summary_json(report);
  summary["interval_check"] = cs::interval_summary_json(intervals);
  summary["all_hold"] = ok;
  print_line(summary);
  return ok ? 0 : kExitMismatch;
}

int run_counterexamples(const RunConfig& cfg) {
  cs::check_rank(cfg.n, cfg.rank_cap);
  const auto pair = cs::exceptional_tableaux(cfg.n);
  const auto cp = cfg.method == "local" ? std::nullopt : std::optional(build_cells(cfg));
  int status = 0;
  for (const auto& [name, t] : {std::pair{"t", pair.t}, std::pair{"u", pair.u}}) {
    const bool cig = cp ? cs::is_cell_ideal_generating(t, *cp) : cs::is_cell_ideal_generating_local(t);
    cs::Json out;
    out["name"] = name;
    out["tableau"] = cs::tableau_to_json(t);
    out["perm"] = cs::to_string(cs::perm_of(t));
    out["J"] = cs::to_string(cs::shape_genset(t.shape()));
    out["standard"] = cs::is_standard(t);
    out["squashed"] = cs::is_squashed(t);
    out["maximal"] = cs::is_maximal_tableau(t);
    out["cell_ideal_generating"] = cig;
    print_line(out);
    if (cig) status = kExitMismatch;
  }
  return status;
}

int run_a5() {
  const cs::A5Report report = cs::a5_ideal_check();
  print_line(cs::a5_to_json(report));
  return report.is_weak_ideal ? 0 : kExitMismatch;
}

int run_dot(const RunConfig& cfg) {
  const auto cp = build_cells(cfg);
  const cs::GenSet j = cs::parse_genset(cfg.j, cfg.n);
  const cs::ElementSet set = cs::min_left_coset_reps(j).right_translate(cs::longest_element(j));
  std::ostringstream os;
  os << "digraph weak_order_ideal {\n"
     << "  label=\"D_J w_J, n=" << cfg.n << ", J={" << cs::to_string(j) << "}\";\n"
     << "  node [style=filled, colorscheme=set312];\n";
  const auto members = set.members();
  for (const auto& x : members) {
    const auto id = cp.cell_id(x);
    os << "  \"" << cs::to_string(x) << "\" [fillcolor=" << (id % 12) + 1 << ", label=\""
       << cs::to_string(x) << "\\ncell " << id << "\"];\n";
  }
  for (const auto& x : members) {
    for (int i = 1; i < cfg.n; ++i) {
      const cs::Permutation y = x.left_simple(i);
      if (cs::length(y) > cs::length(x) && set.contains(y)) {
        os << "  \"" << cs::to_string(x) << "\" -> \"" << cs::to_string(y) << "\" [label=\"s" << i << "\"];\n";
      }
    }
  }
  os << "}\n";
  std::cout << os.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left cells, skew tableaux and weak-interval classification in Sym(n)"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<int> cap_flag;
  app.add_option("--rank-cap", cap_flag, "Largest n for whole-group work (env CELLSCOPE_RANK_CAP, default 9)");
  app.add_option("--threads", cfg.threads, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);

  auto* cells = app.add_subcommand("cells", "Left cells of Sym(n) as JSON lines");
  cells->add_option("--n", cfg.n)->required();
  cells->add_option("--method", cfg.method)->check(CLI::IsMember({"approx", "rs"}));

  auto* tableaux = app.add_subcommand("tableaux", "Standard or canonical tableaux of a shape");
  tableaux->add_option("--shape", cfg.shape)->required();
  tableaux->add_option("--m", cfg.offset, "Target offset")->check(CLI::NonNegativeNumber);
  auto* kinds = tableaux->add_option_group("kind");
  kinds->add_flag_callback("--std", [&] { cfg.tableau_kind = "std"; }, "All standard tableaux (default)");
  kinds->add_flag_callback("--top", [&] { cfg.tableau_kind = "top"; }, "The maximal (row-filled) tableau");
  kinds->add_flag_callback("--col", [&] { cfg.tableau_kind = "col"; }, "The column-filled tableau");
  kinds->require_option(0, 1);

  auto* sqsh = app.add_subcommand("sqsh", "Squash a standard skew tableau");
  sqsh->add_option("--shape", cfg.shape)->required();
  sqsh->add_option("--entries", cfg.entries_file, "JSON file: [[row,col,value],...] or a tableau object")->required();

  auto* check = app.add_subcommand("check", "Classify one pair (w, J)");
  check->add_option("--n", cfg.n)->required();
  check->add_option("--w", cfg.w)->required();
  check->add_option("--j", cfg.j, "Comma-separated generator indices");
  check->add_option("--method", cfg.method)->check(CLI::IsMember({"approx", "rs", "local"}));

  auto* verify = app.add_subcommand("verify", "Exhaustive verification for Sym(n)");
  verify->add_option("--n", cfg.n)->required();
  verify->add_option("--method", cfg.method)->check(CLI::IsMember({"approx", "rs", "local"}));
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--summary-only", cfg.summary_only, "Skip the per-pair JSON lines");

  auto* counter = app.add_subcommand("counterexamples", "The two exceptional tableaux for n");
  counter->add_option("--n", cfg.n)->required();
  counter->add_option("--method", cfg.method)->check(CLI::IsMember({"approx", "rs", "local"}));

  auto* a5 = app.add_subcommand("a5", "Union of the listed Q-symbol fibers in Sym(6)");

  auto* dot = app.add_subcommand("dot", "D_J w_J as a DOT graph coloured by left cell");
  dot->add_option("--n", cfg.n)->required();
  dot->add_option("--j", cfg.j, "Comma-separated generator indices");
  dot->add_option("--method", cfg.method)->check(CLI::IsMember({"approx", "rs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.rank_cap = cap_flag ? *cap_flag : env_rank_cap();
    cs::set_thread_count(cfg.threads);
    if (cells->parsed()) return run_cells(cfg);
    if (tableaux->parsed()) return run_tableaux(cfg);
    if (sqsh->parsed()) return run_sqsh(cfg);
    if (check->parsed()) return run_check(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (counter->parsed()) return run_counterexamples(cfg);
    if (a5->parsed()) return run_a5();
    if (dot->parsed()) return run_dot(cfg);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == cs::ErrorKind::cell_disagreement ? kExitMismatch : kExitUsage;
  }
  return kExitUsage;
}
