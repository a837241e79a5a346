#pragma once

#include <array>
#include <string>
#include <utility>

#include "soritic/truth.hpp"

namespace soritic {

/// Row order of the published strong Kleene tables.
inline constexpr std::array<TruthValue3, 3> kNegationRows{TruthValue3::True, TruthValue3::False, TruthValue3::Half};

inline constexpr std::array<std::pair<TruthValue3, TruthValue3>, 9> kBinaryRows{{
    {TruthValue3::True, TruthValue3::True},
    {TruthValue3::True, TruthValue3::False},
    {TruthValue3::True, TruthValue3::Half},
    {TruthValue3::False, TruthValue3::True},
    {TruthValue3::False, TruthValue3::False},
    {TruthValue3::False, TruthValue3::Half},
    {TruthValue3::Half, TruthValue3::True},
    {TruthValue3::Half, TruthValue3::False},
    {TruthValue3::Half, TruthValue3::Half},
}};

namespace detail {

inline std::string cell(const std::string& s, std::size_t width = 6) {
  return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
}

inline std::string trim_right(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace detail

/// The negation table (3 rows) and the binary connective table (9 rows) as
/// fixed-width text.
inline std::string kleene_tables_text() {
  using detail::cell;
  std::string out;
  out += detail::trim_right(cell("p") + cell("~p")) + "\n";
  for (TruthValue3 p : kNegationRows) out += detail::trim_right(cell(to_string(p)) + cell(to_string(k3_not(p)))) + "\n";
  out += "\n";
  out += detail::trim_right(cell("p") + cell("q") + cell("p|q") + cell("p&q") + cell("p->q") + cell("p<->q")) + "\n";
  for (auto [p, q] : kBinaryRows) {
    out += detail::trim_right(cell(to_string(p)) + cell(to_string(q)) + cell(to_string(k3_or(p, q))) +
                              cell(to_string(k3_and(p, q))) + cell(to_string(k3_implies(p, q))) +
                              cell(to_string(k3_iff(p, q)))) +
           "\n";
  }
  return out;
}

}  // namespace soritic
