#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "soritic/sorites.hpp"
#include "soritic/version.hpp"

namespace soritic {

namespace detail {

using json = nlohmann::json;

inline const json& require(const json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) throw ConfigError(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(pointer + "/" + key, "missing required field");
  return *it;
}

inline long long as_integer(const json& v, const std::string& pointer) {
  if (!v.is_number_integer()) throw ConfigError(pointer, "expected an integer");
  return v.get<long long>();
}

// Integer, or a string such as "98/99".
inline Rational as_rational(const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const SyntaxError& e) {
      throw ConfigError(pointer, e.what());
    }
  }
  throw ConfigError(pointer, "expected an integer or a rational string");
}

inline EpsSeries as_series(const json& v, const std::string& pointer) {
  if (!v.is_string()) throw ConfigError(pointer, "expected a series string");
  try {
    return parse_series(v.get<std::string>());
  } catch (const SyntaxError& e) {
    throw ConfigError(pointer, e.what());
  }
}

inline void reject_unknown(const json& obj, std::initializer_list<std::string_view> known, const std::string& pointer) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError(pointer + "/" + key, "unknown field");
  }
}

inline Backend parse_backend(const json& b) {
  const std::string type_ptr = "/backend/type";
  if (!b.is_object()) throw ConfigError("/backend", "expected an object");
  reject_unknown(b, {"type", "params"}, "/backend");
  const json& type = require(b, "type", "/backend");
  if (!type.is_string()) throw ConfigError(type_ptr, "expected a string");
  const std::string t = type.get<std::string>();
  static const json kEmpty = json::object();
  const json& params = b.contains("params") ? b.at("params") : kEmpty;
  const std::string pp = "/backend/params";
  if (!params.is_object()) throw ConfigError(pp, "expected an object");

  if (t == "classical_cutoff") return ClassicalCutoff{as_integer(require(params, "cutoff", pp), pp + "/cutoff")};
  if (t == "kleene_penumbra")
    return KleenePenumbra{as_integer(require(params, "t1", pp), pp + "/t1"),
                          as_integer(require(params, "t2", pp), pp + "/t2")};
  if (t == "fuzzy_membership") {
    FuzzyMembership fm;
    const json& pts = require(params, "points", pp);
    if (!pts.is_array() || pts.empty()) throw ConfigError(pp + "/points", "expected a nonempty array");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::string ip = pp + "/points/" + std::to_string(i);
      if (!pts[i].is_array() || pts[i].size() != 2) throw ConfigError(ip, "expected [x, degree]");
      fm.points.emplace_back(as_rational(pts[i][0], ip + "/0"), as_rational(pts[i][1], ip + "/1"));
      if (fm.points.back().second < 0 || fm.points.back().second > 1)
        throw ConfigError(ip + "/1", "degree outside [0,1]");
    }
    if (params.contains("threshold")) fm.threshold = as_rational(params.at("threshold"), pp + "/threshold");
    return fm;
  }
  if (t == "supervaluation") {
    Supervaluation sv;
    const json& ks = require(params, "cutoffs", pp);
    if (!ks.is_array() || ks.empty()) throw ConfigError(pp + "/cutoffs", "expected a nonempty array");
    for (std::size_t i = 0; i < ks.size(); ++i)
      sv.family.cutoffs.push_back(as_integer(ks[i], pp + "/cutoffs/" + std::to_string(i)));
    return sv;
  }
  if (t == "nonstandard") {
    Nonstandard ns;
    std::string th = "limited";
    if (params.contains("threshold")) {
      if (!params.at("threshold").is_string()) throw ConfigError(pp + "/threshold", "expected a string");
      th = params.at("threshold").get<std::string>();
    }
    if (th != "limited") {
      try {
        ns.cut = parse_external(th);
      } catch (const SyntaxError& e) {
        throw ConfigError(pp + "/threshold", e.what());
      }
    }
    return ns;
  }
  throw ConfigError(type_ptr, "unknown backend type '" + t + "'");
}

}  // namespace detail

/// Reads a scenario document:
/// `{name, range: [lo, hi], backend: {type, params}, witnesses: [...], chainLength}`.
/// Throws ConfigError carrying a JSON pointer to the offending field.
inline SoritesScenario scenario_from_json(const nlohmann::json& doc) {
  using detail::require;
  SoritesScenario sc;
  if (!doc.is_object()) throw ConfigError("", "expected an object");
  detail::reject_unknown(doc, {"name", "range", "backend", "witnesses", "chainLength"}, "");
  const auto& name = require(doc, "name", "");
  if (!name.is_string()) throw ConfigError("/name", "expected a string");
  sc.name = name.get<std::string>();

  const auto& range = require(doc, "range", "");
  if (!range.is_array() || range.size() != 2) throw ConfigError("/range", "expected [lo, hi]");
  sc.lo = detail::as_integer(range[0], "/range/0");
  sc.hi = detail::as_integer(range[1], "/range/1");
  if (sc.lo > sc.hi) throw ConfigError("/range", "lo exceeds hi");

  sc.backend = detail::parse_backend(require(doc, "backend", ""));

  if (doc.contains("witnesses")) {
    const auto& ws = doc.at("witnesses");
    if (!ws.is_array()) throw ConfigError("/witnesses", "expected an array");
    sc.witnesses.clear();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      std::string p = "/witnesses/" + std::to_string(i);
      EpsSeries w = detail::as_series(ws[i], p);
      try {
        ModelInteger::witness(w);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(p, e.what());
      }
      sc.witnesses.push_back(std::move(w));
    }
  }

  if (doc.contains("chainLength")) {
    const auto& cl = doc.at("chainLength");
    if (cl.is_number_integer()) {
      if (cl.get<long long>() < 0) throw ConfigError("/chainLength", "expected a natural number");
      sc.chain_length = ModelInteger::naive(cl.get<unsigned long long>());
    } else {
      EpsSeries s = detail::as_series(cl, "/chainLength");
      bool constant = s.is_zero() || (s.is_monomial() && s.valuation() == Valuation(0));
      if (constant) {
        Rational v = s.leading_coefficient();
        if (!is_integer(v) || v < 0) throw ConfigError("/chainLength", "expected a natural number");
        sc.chain_length = ModelInteger::naive(numerator_of(v).convert_to<unsigned long long>());
      } else {
        try {
          sc.chain_length = ModelInteger::witness(s);
        } catch (const std::invalid_argument& e) {
          throw ConfigError("/chainLength", e.what());
        }
      }
    }
  } else {
    sc.chain_length = ModelInteger::naive(static_cast<unsigned long long>(sc.hi - sc.lo));
  }

  if (!is_nonstandard(sc.backend) && sc.chain_length.is_naive() &&
      static_cast<long long>(sc.chain_length.naive_value()) > sc.hi - sc.lo)
    throw ConfigError("/chainLength", "chain leaves the series range");

  try {
    sc.validate();
  } catch (const EmptyFamily& e) {
    throw ConfigError("/backend/params", e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("/backend/params", e.what());
  }
  return sc;
}

inline SoritesScenario scenario_from_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

/// Machine-readable mirror of the report. Key order is fixed.
inline nlohmann::ordered_json report_to_json(const SoritesReport& r, std::uint64_t seed = 0) {
  using oj = nlohmann::ordered_json;
  auto opt = [](const auto& o) -> oj { return o ? oj(*o) : oj(nullptr); };
  oj j;
  j["tool"] = "soritic";
  j["version"] = std::string(kVersion);
  j["seed"] = seed;
  j["scenario"] = r.scenario;
  j["backend"] = {{"id", r.backend}, {"detail", r.backend_detail}};
  j["range"] = {r.lo, r.hi};
  j["barnes"] = {
      {"c1", {{"holds", r.barnes.c1}, {"evidence", r.barnes.c1_evidence}}},
      {"c2", {{"holds", r.barnes.c2}, {"evidence", r.barnes.c2_evidence}}},
      {"c3", {{"holds", r.barnes.c3}, {"evidence", r.barnes.c3_evidence}, {"witness", opt(r.barnes.c3_witness)}}},
  };
  oj negs = oj::array();
  for (const auto& [w, neg] : r.induction.witness_negations) negs.push_back({{"witness", w}, {"notS", neg}});
  j["induction"] = {
      {"basis", {{"holds", r.induction.basis}, {"value", r.induction.basis_value}}},
      {"step",
       {{"holds", r.induction.step},
        {"counterexample", opt(r.induction.step_counterexample)},
        {"valueAtCounterexample", r.induction.step_counterexample ? oj(r.induction.step_value_at_counterexample) : oj(nullptr)},
        {"weakest", r.induction.weakest_step_value}}},
      {"premise", r.induction.premise_value},
      {"conclusion", r.induction.conclusion_value},
      {"witnesses", negs},
      {"verdict", r.induction.verdict},
  };
  oj members = oj::array();
  for (const auto& m : r.conditional.per_member)
    members.push_back({{"cutoff", m.cutoff}, {"failingLink", opt(m.failing_link)}});
  j["conditional"] = {
      {"chainLength", r.conditional.chain_length},
      {"completed", r.conditional.completed},
      {"failingLink", opt(r.conditional.failing_link)},
      {"conclusion", r.conditional.conclusion},
      {"conclusionValue", r.conditional.conclusion_value},
      {"premiseFloor", r.conditional.premise_floor},
      {"perMember", members},
      {"refused", opt(r.conditional.refused)},
      {"verdict", r.conditional.verdict},
  };
  j["doubling"] = {
      {"applicable", r.doubling.applicable},
      {"invarianceHolds", opt(r.doubling.invariance_holds)},
      {"witness", opt(r.doubling.witness)},
      {"samples", r.doubling.samples},
      {"verdict", r.doubling.verdict},
  };
  j["notes"] = r.notes;
  return j;
}

inline std::string report_to_text(const SoritesReport& r, std::uint64_t seed = 0) {
  std::ostringstream os;
  auto mark = [](bool b) { return b ? "yes" : "NO "; };
  os << "soritic " << kVersion << " sorites report (seed " << seed << ")\n";
  os << "scenario: " << r.scenario << "\n";
  os << "backend:  " << r.backend_detail << "\n";
  os << "range:    " << r.lo << ".." << r.hi << "\n\n";
  os << "Barnes constraints\n";
  os << "  c1 true at the first item      " << mark(r.barnes.c1) << "  " << r.barnes.c1_evidence << "\n";
  os << "  c2 false at the end            " << mark(r.barnes.c2) << "  " << r.barnes.c2_evidence << "\n";
  os << "  c3 adjacent items tolerant     " << mark(r.barnes.c3) << "  " << r.barnes.c3_evidence << "\n\n";
  os << "Induction\n";
  os << "  basis       " << mark(r.induction.basis) << "  value " << r.induction.basis_value << "\n";
  os << "  step        " << mark(r.induction.step);
  if (r.induction.step_counterexample)
    os << "  fails at n=" << *r.induction.step_counterexample << " (value " << r.induction.step_value_at_counterexample
       << ")";
  os << "  weakest " << r.induction.weakest_step_value << "\n";
  os << "  premise     " << r.induction.premise_value << "\n";
  os << "  conclusion  " << r.induction.conclusion_value << "\n";
  for (const auto& [w, neg] : r.induction.witness_negations)
    os << "  not S(" << w << ")  " << mark(neg) << "\n";
  os << "  verdict: " << r.induction.verdict << "\n\n";
  os << "Conditional (chain length " << r.conditional.chain_length << ")\n";
  if (r.conditional.refused) {
    os << "  refused: " << *r.conditional.refused << "\n";
  } else {
    os << "  completed   " << mark(r.conditional.completed) << "\n";
    if (r.conditional.failing_link)
      os << "  fails at    " << *r.conditional.failing_link << "->" << *r.conditional.failing_link + 1 << "\n";
    os << "  conclusion  " << r.conditional.conclusion << " = " << r.conditional.conclusion_value << "\n";
    os << "  premises    floor " << r.conditional.premise_floor << "\n";
    for (const auto& m : r.conditional.per_member)
      os << "  member k=" << m.cutoff << "  "
         << (m.failing_link ? "fails at " + std::to_string(*m.failing_link) + "->" + std::to_string(*m.failing_link + 1)
                            : std::string("completes"))
         << "\n";
  }
  os << "  verdict: " << r.conditional.verdict << "\n\n";
  os << "Doubling\n";
  os << "  " << r.doubling.verdict << "\n";
  if (!r.notes.empty()) {
    os << "\nNotes\n";
    for (const auto& n : r.notes) os << "  - " << n << "\n";
  }
  return os.str();
}

}  // namespace soritic
