#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "soritic/external_number.hpp"

namespace soritic {

/// Deterministic generator of model values for property suites.
///
/// Draws come straight from mt19937_64 output so a seed reproduces the same
/// instances on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return below(2) == 1; }

  Rational coefficient() {
    static constexpr std::array<int, 3> kDen{1, 2, 3};
    long long num = static_cast<long long>(below(5)) + 1;
    if (coin()) num = -num;
    return Rational(num, kDen[below(kDen.size())]);
  }

  Rational exponent() {
    static const std::array<Rational, 7> kExp{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                              Rational(1, 2), Rational(1), Rational(2)};
    return kExp[below(kExp.size())];
  }

  EpsSeries series(std::size_t max_terms = 3) {
    std::vector<Term> terms;
    std::size_t n = below(max_terms + 1);
    for (std::size_t i = 0; i < n; ++i) terms.push_back({exponent(), coefficient()});
    return EpsSeries::from_terms(std::move(terms));
  }

  EpsSeries nonzero_series(std::size_t max_terms = 3) {
    for (;;) {
      EpsSeries s = series(max_terms);
      if (!s.is_zero()) return s;
    }
  }

  Neutrix neutrix() {
    if (below(4) == 0) return Neutrix::zero();
    return Neutrix::scaled(exponent(), coin() ? NeutrixKind::Lim : NeutrixKind::Osl);
  }

  ExternalNumber external() { return {series(), neutrix()}; }

  /// Not reduced to a neutrix.
  ExternalNumber non_neutrix() {
    for (;;) {
      ExternalNumber x = external();
      if (!x.is_neutrix()) return x;
    }
  }

  /// An appreciable rational constant (valuation 0).
  EpsSeries appreciable() { return EpsSeries(coefficient() * Rational(static_cast<long long>(below(1000)) + 1)); }

  /// A member of `n`: sums of terms at and just past its boundary exponent.
  EpsSeries member(const Neutrix& n) {
    if (n.is_zero()) return {};
    static const std::array<Rational, 5> kOffsets{Rational(1, 1000), Rational(1, 7), Rational(1, 2), Rational(1),
                                                  Rational(3)};
    std::vector<Term> terms;
    if (n.kind() == NeutrixKind::Lim && coin())
      terms.push_back({n.exponent(), coefficient() * Rational(static_cast<long long>(below(10000)) + 1)});
    std::size_t extra = below(3);
    for (std::size_t i = 0; i < extra; ++i)
      terms.push_back({n.exponent() + kOffsets[below(kOffsets.size())], coefficient() * 1000});
    return EpsSeries::from_terms(std::move(terms));
  }

  EpsSeries member(const ExternalNumber& x) { return x.rep() + member(x.neutrix()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace soritic
