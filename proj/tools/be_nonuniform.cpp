// be-nonuniform: reproduce the lower-bound tables, evaluate non-uniform
// bounds on custom systems, run the property suites and searches.
//
// Exit codes: 0 ok, 1 findings, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "be_nonuniform/commands.hpp"

namespace bn = be_nonuniform;

namespace {

constexpr int kUsageError = 2;

int emit(const bn::RunReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << bn::to_json(report).dump(2) << "\n";
  } else {
    std::cout << bn::to_json(report).dump() << "\n";
  }
  for (const auto& f : report.findings) std::cerr << "finding: " << f << "\n";
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-uniform Berry-Esseen bounds: constants, minorants and checks", "be-nonuniform"};
  app.require_subcommand(1);

  std::string table_format = "csv";
  auto* table2 = app.add_subcommand("table2", "Lower bounds for K_0(delta) on the two-point family");
  table2->add_option("--format", table_format, "csv | json | md")
      ->check(CLI::IsMember({"csv", "json", "md"}));

  std::optional<double> t1_p;
  double t1_tol = 1e-10;
  auto* theorem1 = app.add_subcommand("theorem1", "Lower bound for the Bikelis/Petrov constant A");
  theorem1->add_option("--p", t1_p, "evaluate at this p in (0,1); omitted: maximize over [0.01, 0.99]");
  theorem1->add_option("--tol", t1_tol, "optimizer tolerance");

  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  auto* verify = app.add_subcommand("verify", "Seeded property suites (forms, sandwich, consistency)");
  verify->add_option("--suite", suite, "forms | sandwich | consistency | all")
      ->check(CLI::IsMember({"forms", "sandwich", "consistency", "all"}));
  verify->add_option("--seed", seed, "generator seed");
  verify->add_option("--count", count, "systems (forms, consistency) or draws (sandwich)")
                        ->check(CLI::PositiveNumber);

  std::string input;
  bn::EvalOptions eval_opt;
  std::optional<double> eval_s;
  std::string g_spec;
  auto* eval = app.add_subcommand("eval", "Evaluate all bounds on a JSON summand system");
  eval->add_option("--input", input, "system JSON file")->required();
  eval->add_option("--x", eval_opt.xs, "evaluation points (default: atoms of S_n/B_n)")->delimiter(',');
  eval->add_option("--delta", eval_opt.delta, "moment order offset in [0,1]");
  eval->add_option("--s", eval_s, "structural parameter s >= 0 (default: tabulated s_1)");
  eval->add_option("--g", g_spec, "Petrov weight: constant | power:<d> | lower:<a> | upper:<a> | tab:<file>");
  eval->add_flag("--iid", eval_opt.iid, "use the i.i.d. constants");
  eval->add_flag("--fractions", "kept for compatibility; fractions are always reported");

  bn::SearchOptions search_opt;
  auto* search = app.add_subcommand("search", "Extremal-law search for a lower bound");
  search->add_option("--family", search_opt.family, "two_point_xy | pinelis_xy | three_point")
      ->check(CLI::IsMember({"two_point_xy", "pinelis_xy", "three_point"}));
  search->add_option("--weight", search_opt.weight, "nagaev_bikelis | bikelis_A | petrov_constant_g")
      ->check(CLI::IsMember({"nagaev_bikelis", "bikelis_A", "petrov_constant_g"}));
  search->add_option("--delta", search_opt.delta, "delta in [0,1]");
  search->add_option("--s", search_opt.s, "s >= 0");
  search->add_option("--tol", search_opt.tol, "refinement tolerance");
  search->add_flag("--minorant", search_opt.minorant, "maximize the closed-form two-point minorant over p");

  std::string format = "json";
  for (auto* sub : {theorem1, verify, eval, search})
    sub->add_option("--format", format, "json | compact")->check(CLI::IsMember({"json", "compact"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*table2) {
      const bn::RunReport report = bn::cmd_table2();
      if (table_format == "csv") {
        std::cout << bn::render_table2_csv(report);
      } else if (table_format == "md") {
        std::cout << bn::render_table2_md(report);
      } else {
        std::cout << bn::to_json(report).dump(2) << "\n";
      }
      return report.exit_code();
    }
    if (*theorem1) {
      if (t1_p && !(*t1_p > 0.0 && *t1_p < 1.0)) {
        std::cerr << "theorem1: --p must lie in (0,1)\n";
        return kUsageError;
      }
      return emit(bn::cmd_theorem1(t1_p, t1_tol), format);
    }
    if (*verify) {
      return emit(bn::cmd_verify(bn::parse_suite(suite), seed, count), format);
    }
    if (*eval) {
      eval_opt.s = eval_s;
      if (!g_spec.empty()) eval_opt.weight = bn::parse_weight_spec(g_spec);
      const bn::SummandSystem system = bn::system_from_json(bn::read_json_file(input));
      return emit(bn::cmd_eval(system, eval_opt), format);
    }
    if (*search) return emit(bn::cmd_search(search_opt), format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
