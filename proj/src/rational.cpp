#include "fqsolve/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "fqsolve/errors.hpp"

namespace fqsolve {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw InvalidParams("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    const bool digits = std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
    if (s.empty() || s.size() > 18 || !digits)
      throw InvalidParams("not a rational number: '" + text + "'");
    return std::stoll(s);
  };
  const auto slash = text.find('/');
  if (slash != std::string::npos) return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text), 1);
  const std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
  if (fp.empty() || fp.size() > 15) throw InvalidParams("not a rational number: '" + text + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  const std::int64_t whole = ip.empty() ? 0 : parse_int(ip);
  return Rational(whole * den + parse_int(fp), den);
}

std::int64_t Rational::floor_times(std::int64_t n) const {
  const __int128 p = static_cast<__int128>(num) * n;
  __int128 r = p / den;
  if (p % den != 0 && p < 0) --r;
  return static_cast<std::int64_t>(r);
}

std::int64_t Rational::ceil_times(std::int64_t n) const {
  const __int128 p = static_cast<__int128>(num) * n;
  __int128 r = p / den;
  if (p % den != 0 && p > 0) ++r;
  return static_cast<std::int64_t>(r);
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

}  // namespace fqsolve
