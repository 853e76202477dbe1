#pragma once

// Command implementations behind the be-nonuniform CLI. Each returns a
// RunReport; rendering and exit codes live in the tool.

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "be_nonuniform/bounds.hpp"
#include "be_nonuniform/fractions.hpp"
#include "be_nonuniform/io.hpp"
#include "be_nonuniform/minorants.hpp"
#include "be_nonuniform/optimize.hpp"
#include "be_nonuniform/suites.hpp"

namespace be_nonuniform {

enum class RunStatus { kOk, kFinding, kError };

struct RunReport {
  std::string command;
  json inputs = json::object();
  json rows = json::array();
  std::vector<std::string> findings;
  json extra = json::object();  // command-specific payload (fractions, summaries)

  RunStatus status() const noexcept { return findings.empty() ? RunStatus::kOk : RunStatus::kFinding; }
  int exit_code() const noexcept { return findings.empty() ? 0 : 1; }
};

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::kOk:
      return "ok";
    case RunStatus::kFinding:
      return "finding";
    case RunStatus::kError:
      return "error";
  }
  return "error";
}

inline json to_json(const RunReport& r) {
  json j = {{"command", r.command},
            {"inputs", r.inputs},
            {"rows", r.rows},
            {"status", to_string(r.status())},
            {"findings", r.findings}};
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

/// Locale-independent fixed-point rendering (correctly rounded, ties to even
/// on the exact binary value).
inline std::string fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
  if (res.ec != std::errc{}) return "nan";
  return std::string(buf.data(), res.ptr);
}

// ---------------------------------------------------------------------------
// table2

struct Table2Entry {
  double delta;
  double p;      // 0 marks the p -> 0+ limit
  double published;  // printed lower bound for K_0(delta)
};

inline constexpr std::array<Table2Entry, 11> kTable2 = {{
    {0.0, 0.0, 1.0},
    {0.1, 0.06, 1.0061},
    {0.2, 0.066, 1.0108},
    {0.3, 0.07, 1.0139},
    {0.4, 0.074, 1.0158},
    {0.5, 0.076, 1.0167},
    {0.6, 0.08, 1.0168},
    {0.7, 0.08, 1.0164},
    {0.8, 0.08, 1.0157},
    {0.9, 0.08, 1.0147},
    {1.0, 0.08, 1.0135},
}};

inline constexpr double kTable2Slack = 1.5e-4;

inline RunReport cmd_table2() {
  RunReport r;
  r.command = "table2";
  for (const auto& e : kTable2) {
    const ModulusParams params(e.delta, 0.0);
    const double computed = e.p == 0.0 ? limit_minorant(params) : theorem2_minorant(e.p, params);
    const double diff = computed - e.published;
    const bool match = std::fabs(diff) <= kTable2Slack;
    r.rows.push_back({{"delta", e.delta},
                      {"p", e.p},
                      {"computed", computed},
                      {"computed_4dp", fixed(computed, 4)},
                      {"published", e.published},
                      {"diff", diff},
                      {"match", match},
                      {"source", e.p == 0.0 ? "limit_minorant" : "theorem2_minorant"}});
    if (!match)
      r.findings.push_back("delta=" + fixed(e.delta, 1) + ": computed " + fixed(computed, 6) +
                           " differs from " + fixed(e.published, 4));
  }
  return r;
}

inline std::string render_table2_csv(const RunReport& r) {
  std::string out = "delta,p,computed,published,match\n";
  for (const auto& row : r.rows) {
    out += fixed(row["delta"].get<double>(), 1) + "," + fixed(row["p"].get<double>(), 3) + "," +
           row["computed_4dp"].get<std::string>() + "," + fixed(row["published"].get<double>(), 4) + "," +
           (row["match"].get<bool>() ? "true" : "false") + "\n";
  }
  return out;
}

inline std::string render_table2_md(const RunReport& r) {
  std::string out = "| delta | p | K_0 >= (computed) | K_0 >= (published) | match |\n|---|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    out += "| " + fixed(row["delta"].get<double>(), 1) + " | " + fixed(row["p"].get<double>(), 3) + " | " +
           row["computed_4dp"].get<std::string>() + " | " + fixed(row["published"].get<double>(), 4) + " | " +
           (row["match"].get<bool>() ? "yes" : "NO") + " |\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// theorem1

inline constexpr double kTheorem1Threshold = 1.6153;
inline constexpr double kTheorem1P = 0.15;

inline RunReport cmd_theorem1(std::optional<double> p, double tol = 1e-10) {
  RunReport r;
  r.command = "theorem1";
  r.inputs["p"] = p ? json(*p) : json(nullptr);
  if (p) {
    const double v = theorem1_minorant(*p);
    const bool checked = *p == kTheorem1P;
    r.rows.push_back({{"mode", "fixed"}, {"p", *p}, {"value", v}, {"threshold", kTheorem1Threshold},
                      {"exceeds_threshold", v > kTheorem1Threshold}});
    if (checked && !(v > kTheorem1Threshold))
      r.findings.push_back("theorem1_minorant(0.15) = " + fixed(v, 8) + " does not exceed 1.6153");
    return r;
  }
  auto f = [](double q) { return theorem1_minorant(q); };
  const SearchResult s = maximize_1d(f, 0.01, 0.99, tol);
  r.inputs["range"] = {0.01, 0.99};
  r.inputs["tol"] = tol;
  r.rows.push_back({{"mode", "optimized"}, {"p", s.argmax.front()}, {"value", s.value},
                    {"threshold", kTheorem1Threshold}, {"exceeds_threshold", s.value > kTheorem1Threshold}});
  r.extra["search"] = to_json(s);
  if (!(s.value > kTheorem1Threshold))
    r.findings.push_back("optimized minorant " + fixed(s.value, 8) + " does not exceed 1.6153");
  return r;
}

// ---------------------------------------------------------------------------
// verify

enum class Suite { kForms, kSandwich, kConsistency, kAll };

inline Suite parse_suite(const std::string& s) {
  if (s == "forms") return Suite::kForms;
  if (s == "sandwich") return Suite::kSandwich;
  if (s == "consistency") return Suite::kConsistency;
  if (s == "all") return Suite::kAll;
  throw InvalidInput("unknown suite '" + s + "'");
}

inline constexpr std::size_t kMaxFindingsListed = 50;

// `count` is the number of random systems for forms/consistency and the
// number of random draws for sandwich.
inline RunReport cmd_verify(Suite suite, std::uint64_t seed, std::size_t count) {
  if (count == 0) throw InvalidInput("verify: count must be at least 1");
  RunReport r;
  r.command = "verify";
  r.inputs = {{"seed", seed}, {"count", count}};
  std::vector<SuiteOutcome> outcomes;
  if (suite == Suite::kForms || suite == Suite::kAll) outcomes.push_back(run_forms_suite(seed, count));
  if (suite == Suite::kSandwich || suite == Suite::kAll) outcomes.push_back(run_sandwich_suite(seed, count));
  if (suite == Suite::kConsistency || suite == Suite::kAll) outcomes.push_back(run_consistency_suite(seed, count));
  for (const auto& o : outcomes) {
    for (const auto& c : o.checks)
      r.rows.push_back({{"suite", o.suite}, {"check", c.name}, {"evaluated", c.evaluated},
                        {"failed", c.failed}, {"worst", c.worst}});
    std::size_t listed = 0;
    for (const auto& f : o.findings) {
      if (listed++ == kMaxFindingsListed) {
        r.findings.push_back(o.suite + ": " + std::to_string(o.findings.size() - kMaxFindingsListed) +
                             " further findings not listed");
        break;
      }
      r.findings.push_back(o.suite + "/" + f.check + " item " + std::to_string(f.item) + " x=" +
                           std::to_string(f.x) + ": " + f.detail);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// eval

struct EvalOptions {
  std::vector<double> xs;  // empty: atoms of S_n / B_n
  double delta = 1.0;
  std::optional<double> s;        // default: tabulated s_1(delta) when available, else 0
  std::optional<GWeight> weight;  // default: |u|^delta
  bool iid = false;
};

inline RunReport cmd_eval(const SummandSystem& system, const EvalOptions& opt) {
  require_delta(opt.delta, "eval");
  RunReport r;
  r.command = "eval";
  const auto row = ReferenceConstants::row(opt.delta);
  const double s = opt.s.value_or(row ? (opt.iid ? row->s1_iid : row->s1) : 0.0);
  if (!(s >= 0.0)) throw InvalidInput("eval: s must be non-negative");
  const GWeight w = opt.weight.value_or(GWeight{weight::Power{opt.delta}});

  std::vector<double> xs = opt.xs;
  if (xs.empty()) {
    const auto v = system.normalized_sum().values();
    xs.assign(v.begin(), v.end());
  }
  r.inputs = {{"n", system.n()}, {"delta", opt.delta}, {"s", s}, {"weight", describe(w)},
              {"iid", opt.iid}, {"x", xs}};

  auto emit = [&](const char* inequality, const BoundEvaluation& e) {
    json j = to_json(e);
    j["inequality"] = inequality;
    r.rows.push_back(j);
    if (!e.satisfied)
      r.findings.push_back(std::string(inequality) + " violated at x=" + std::to_string(e.x) +
                           ": lhs=" + std::to_string(e.lhs) + " rhs=" + std::to_string(e.rhs));
  };

  for (double x : xs) {
    const double lhs = delta_n(system, x, DeltaSide::kMax);
    emit("nagaev_bikelis", make_evaluation(x, lhs, rhs_nagaev_bikelis(system, x, opt.delta),
                                           ReferenceConstants::k0(opt.delta, opt.iid)));
    emit("bikelis", make_evaluation(x, lhs, rhs_bikelis_min(system, x), ReferenceConstants::a(x, opt.iid)));
    emit("petrov", make_evaluation(x, lhs, rhs_petrov(system, x, w), ReferenceConstants::a(x, opt.iid)));
  }
  const SupResult sup = weighted_sup_delta(system, opt.delta, xs);
  emit("structural", make_evaluation(sup.x, sup.value, rhs_structural(system, opt.delta, s),
                                     ReferenceConstants::ks(opt.delta, s, opt.iid)));
  r.extra["fractions"] = to_json(fraction_report(system, opt.delta));
  r.extra["fractions"]["lindeberg_at_1"] = lindeberg(system, 1.0);
  return r;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
  std::string family = "two_point_xy";
  std::string weight = "nagaev_bikelis";
  double delta = 1.0;
  double s = 0.0;
  double tol = 1e-10;
  bool minorant = false;  // maximize the closed-form two-point minorant instead
};

inline RunReport cmd_search(const SearchOptions& opt) {
  const ModulusParams params(opt.delta, opt.s);
  if (!(opt.tol > 0.0)) throw InvalidInput("search: tol must be positive");
  RunReport r;
  r.command = "search";
  r.inputs = {{"family", opt.minorant ? "two_point_minorant" : opt.family},
              {"weight", opt.weight},
              {"delta", opt.delta},
              {"s", opt.s},
              {"tol", opt.tol}};
  SearchResult res;
  if (opt.minorant) {
    res = search_two_point(params, opt.tol);
  } else {
    res = search_general(parse_family(opt.family), params, parse_weight_kind(opt.weight), opt.tol);
  }
  r.rows.push_back(to_json(res));
  if (!res.converged) r.findings.push_back("search did not reach the requested tolerance");
  return r;
}

}  // namespace be_nonuniform
