#pragma once

// JSON formats.
//
//   distribution  {"atoms": [[value, prob], ...]}
//   system        {"summands": [{"atoms": [[value, prob], ...]}, ...]}
//   weight grid   {"grid": [[x, g], ...]}

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "be_nonuniform/bounds.hpp"
#include "be_nonuniform/distributions.hpp"
#include "be_nonuniform/errors.hpp"
#include "be_nonuniform/fractions.hpp"
#include "be_nonuniform/gclass.hpp"
#include "be_nonuniform/scalar_search.hpp"

namespace be_nonuniform {

using json = nlohmann::json;

namespace detail {

inline std::vector<std::pair<double, double>> read_pairs(const json& arr, const char* what) {
  if (!arr.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<std::pair<double, double>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw InvalidInput(std::string(what) + " entries must be [number, number]");
    out.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return out;
}

}  // namespace detail

inline DiscreteDistribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms")) throw InvalidInput("distribution needs an \"atoms\" array");
  std::vector<Atom> atoms;
  for (const auto& [v, p] : detail::read_pairs(j.at("atoms"), "atoms")) atoms.push_back({v, p});
  return DiscreteDistribution(std::move(atoms));
}

inline json to_json(const DiscreteDistribution& d) {
  json atoms = json::array();
  for (const Atom& a : d.atoms()) atoms.push_back({a.value, a.prob});
  return {{"atoms", atoms}};
}

/// Accepts a system object, or a bare distribution (n = 1).
inline SummandSystem system_from_json(const json& j) {
  if (j.is_object() && j.contains("summands")) {
    const json& arr = j.at("summands");
    if (!arr.is_array()) throw InvalidInput("\"summands\" must be an array");
    std::vector<DiscreteDistribution> summands;
    for (const auto& s : arr) summands.push_back(distribution_from_json(s));
    return SummandSystem(std::move(summands));
  }
  return SummandSystem(distribution_from_json(j));
}

inline json to_json(const SummandSystem& system) {
  json arr = json::array();
  for (const auto& d : system.summands()) arr.push_back(to_json(d));
  return {{"summands", arr}};
}

inline weight::Tabulated tabulated_from_json(const json& j) {
  if (!j.is_object() || !j.contains("grid")) throw InvalidInput("weight needs a \"grid\" array");
  return weight::Tabulated(detail::read_pairs(j.at("grid"), "grid"));
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

inline json to_json(const SearchResult& r) {
  json j = {{"argmax", r.argmax},
            {"value", r.value},
            {"bracket", r.bracket},
            {"evaluations", r.evaluations},
            {"converged", r.converged},
            {"at_boundary", r.at_boundary}};
  j["limit_reference"] = r.limit_reference ? json(*r.limit_reference) : json(nullptr);
  return j;
}

inline json to_json(const FractionReport& f) {
  return {{"bn", f.bn}, {"lyapounov", f.lyapounov}, {"t_fraction", f.t_fraction}, {"delta", f.delta}};
}

inline json to_json(const BoundEvaluation& e) {
  return {{"x", e.x},
          {"lhs", e.lhs},
          {"rhs_coefficient", e.rhs_coefficient},
          {"constant_used", e.constant_used},
          {"rhs", e.rhs},
          {"satisfied", e.satisfied}};
}

/// Weight spec: constant | power:<d> | lower:<a> | upper:<a> | tab:<path>.
inline GWeight parse_weight_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto number = [&] {
    try {
      std::size_t used = 0;
      const double v = std::stod(arg, &used);
      if (used != arg.size()) throw InvalidInput("bad number");
      return v;
    } catch (const std::exception&) {
      throw InvalidInput("weight spec '" + spec + "': expected a number after ':'");
    }
  };
  if (kind == "constant") return weight::Constant{};
  if (kind == "power") {
    const double d = number();
    if (!(d >= 0.0 && d <= 1.0)) throw InvalidInput("power weight exponent must lie in [0,1]");
    return weight::Power{d};
  }
  if (kind == "lower" || kind == "upper") {
    const double a = number();
    if (!(a > 0.0)) throw InvalidInput("envelope scale must be positive");
    if (kind == "lower") return weight::LowerStar{a};
    return weight::UpperStar{a};
  }
  if (kind == "tab") return tabulated_from_json(read_json_file(arg));
  throw InvalidInput("unknown weight spec '" + spec + "'");
}

}  // namespace be_nonuniform
