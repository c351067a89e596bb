#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ternions/errors.hpp"
#include "ternions/report.hpp"
#include "ternions/ring.hpp"
#include "ternions/snowflake.hpp"
#include "ternions/verify.hpp"

namespace {

using namespace ternions;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// q^{3(n+1)}, saturating instead of overflowing
std::uint64_t tuple_space(unsigned q, unsigned n) {
  const std::uint64_t base = std::uint64_t(q) * q * q;
  std::uint64_t out = 1;
  for (unsigned i = 0; i <= n; ++i) {
    if (base != 0 && out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

// fail before the ring tables are even allocated
void ensure_budget(unsigned q, unsigned n, std::uint64_t budget) {
  const std::uint64_t space = tuple_space(q, n);
  if (space <= budget) return;
  std::ostringstream os;
  os << "classifying q = " << q << ", n = " << n << " means scanning ";
  if (space == kSaturated)
    os << "more than 2^64";
  else
    os << space;
  os << " tuples, over the budget of " << budget
     << "; raise --budget to proceed";
  throw BudgetExceeded(os.str());
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free cyclic submodules over the ring of ternions"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned threads = 0;
  std::uint64_t budget = 100'000'000ULL;
  app.add_option("--threads", threads, "worker count, 0 = machine parallelism")
      ->capture_default_str();
  app.add_option("--budget", budget, "enumeration cap in tuples")
      ->capture_default_str();

  unsigned q = 0;
  unsigned n = 2;
  std::string side_name;
  std::string json_path;
  std::string dot_path;
  bool label_grid = false;

  CLI::App* tables = app.add_subcommand("tables", "print both operation tables");
  tables->add_option("--q", q, "field order, must be prime")->required();
  tables->add_flag("--labels", label_grid,
                   "render in the 0-7 labelling (q = 2 only)");

  const auto add_run_options = [&](CLI::App* cmd, bool with_side) {
    cmd->add_option("--q", q, "field order, must be prime")->required();
    cmd->add_option("--n", n, "tuple length minus one")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    if (with_side)
      cmd->add_option("--side", side_name, "left or right")
          ->required()
          ->check(CLI::IsMember({"left", "right"}));
    cmd->add_option("--json", json_path,
                    "write the JSON report here instead of stdout");
  };

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "count tuples by unimodularity and freeness");
  add_run_options(classify_cmd, true);

  CLI::App* snowflake_cmd = app.add_subcommand(
      "snowflake", "list the free cyclic submodules and their overlaps");
  add_run_options(snowflake_cmd, true);
  snowflake_cmd->add_option("--dot", dot_path,
                            "also write the incidence graph here in DOT form");

  CLI::App* core_cmd = app.add_subcommand(
      "core", "extract the core geometry and check the plane axioms");
  add_run_options(core_cmd, true);

  CLI::App* twin_cmd =
      app.add_subcommand("twin", "compare the left and right snowflakes");
  add_run_options(twin_cmd, false);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify-golden", "replay the recorded q = 2 facts against the computation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const EnumerationConfig cfg{budget, threads};
  const auto side = [&] {
    return side_name == "right" ? Side::right : Side::left;
  };

  try {
    if (tables->parsed()) {
      const Ring ring(q);
      std::cout << (label_grid ? render_label_tables(ring)
                               : render_tables(ring));
      return 0;
    }
    if (classify_cmd->parsed()) {
      ensure_budget(q, n, budget);
      const Ring ring(q);
      emit(report_classification(classify(ring, n, side(), cfg)), json_path);
      return 0;
    }
    if (snowflake_cmd->parsed()) {
      ensure_budget(q, n, budget);
      const Ring ring(q);
      const Snowflake sf = build_snowflake(ring, n, side(), cfg);
      emit(report_snowflake(ring, sf), json_path);
      if (!dot_path.empty()) emit(export_dot(ring, sf), dot_path);
      return 0;
    }
    if (core_cmd->parsed()) {
      ensure_budget(q, n, budget);
      const Ring ring(q);
      const Snowflake sf = build_snowflake(ring, n, side(), cfg);
      const CoreGeometry core = extract_core(ring, sf);
      emit(report_core(ring, sf, core), json_path);
      return core.verdict && !core.verdict->is_projective_plane ? 1 : 0;
    }
    if (twin_cmd->parsed()) {
      ensure_budget(q, n, budget);
      const Ring ring(q);
      const TwinReport tr = twin_compare(ring, n, cfg);
      emit(report_twin(ring, tr), json_path);
      return tr.all_equal() ? 0 : 1;
    }
    (void)verify_cmd;
    const std::vector<GoldenCheck> checks = verify_golden();
    std::size_t passed = 0;
    for (const GoldenCheck& c : checks) {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": "
                << c.detail << "\n";
      if (c.pass) ++passed;
    }
    std::cout << passed << "/" << checks.size() << " checks passed\n";
    return all_passed(checks) ? 0 : 1;
  } catch (const DegenerateCore& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
