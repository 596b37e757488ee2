#pragma once

#include <cstdint>
#include <string>

namespace fqsolve {

/// Exact rational used for the split fractions and reduction parameters, so that floor and
/// ceiling of fraction * n are computed without rounding error.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  /// Accepts "a/b", a decimal such as "0.33", or an integer.
  static Rational parse(const std::string& text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::int64_t floor_times(std::int64_t n) const;
  std::int64_t ceil_times(std::int64_t n) const;
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

}  // namespace fqsolve
