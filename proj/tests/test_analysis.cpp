#include <cmath>

#include "doctest.h"
#include "fqsolve/analysis.hpp"
#include "fqsolve/errors.hpp"

using namespace fqsolve;

namespace {

// Direct enumeration of {0..q-1}^n.
std::uint64_t count_by_enumeration(std::uint32_t n, std::int64_t delta, std::uint32_t q, bool exact) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= q;
  std::uint64_t hits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::int64_t s = 0;
    for (std::uint64_t c = code; c; c /= q) s += static_cast<std::int64_t>(c % q);
    if (exact ? s == delta : s <= delta) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("extended binomials match enumeration") {
  CHECK(ext_binom(2, 2, 3) == 3);
  CHECK(ext_binom_cum(2, 1, 3) == 3);
  CHECK(ext_binom_cum(3, -1, 2) == 0);
  CHECK(ext_binom_cum(3, 100, 2) == 8);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (std::uint32_t n = 0; n <= 5; ++n) {
      for (std::int64_t d = 0; d <= static_cast<std::int64_t>(n * (q - 1)); ++d) {
        CHECK(ext_binom(n, d, q) == count_by_enumeration(n, d, q, true));
        CHECK(ext_binom_cum(n, d, q) == count_by_enumeration(n, d, q, false));
        CHECK(trimmed_count(n, d, q) == count_by_enumeration(n, d, q, false));
      }
    }
  }
  CHECK_THROWS_AS(ext_binom(2, 5, 3), DomainError);
  CHECK_THROWS_AS(ext_binom(2, -1, 3), DomainError);
}

TEST_CASE("q = 2 reduces to ordinary binomials") {
  BigInt c = 1;
  for (std::uint32_t k = 0; k <= 40; ++k) {
    CHECK(ext_binom(40, k, 2) == c);
    c = c * (40 - k) / (k + 1);
  }
}

TEST_CASE("extended binomials stay exact beyond 64 bits") {
  // (q^n - 1) / (q - 1) style identity: the row sums to q^n.
  const auto t = ExtBinomTable::build(60, 7);
  BigInt sum = 0;
  for (const auto& v : t.row) sum += v;
  BigInt expect = 1;
  for (int i = 0; i < 60; ++i) expect *= 7;
  CHECK(sum == expect);
  CHECK_THROWS_AS(trimmed_count(60, 360, 7), TooLarge);
}

TEST_CASE("H(2, alpha) is the binary entropy") {
  for (double a : {0.01, 0.1, 0.25, 0.4, 0.49}) CHECK(entropy_H(2, a) == doctest::Approx(binary_entropy(a)).epsilon(1e-8));
  CHECK(entropy_H(3, 0.0) == 0.0);
  CHECK(entropy_H(2, 0.25) == doctest::Approx(0.811278124).epsilon(1e-8));
}

TEST_CASE("H bounds the normalised trimmed count") {
  // log_q |T_{n, alpha n (q-1)}| / n <= H(q, alpha)
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (double a : {0.1, 0.2, 0.3, 0.45}) {
      const std::uint32_t n = 200;
      const auto delta = static_cast<std::int64_t>(std::floor(a * n * (q - 1)));
      const double lg = std::log(ext_binom_cum(n, delta, q).convert_to<double>()) / std::log(double(q));
      CHECK(lg / n <= entropy_H(q, a) + 1e-9);
      CHECK(lg / n >= entropy_H(q, a) - 0.05);
    }
  }
}

TEST_CASE("gap function approaches its limit") {
  const double a = 0.25;
  CHECK(gap_I(1, a) == doctest::Approx((1 - binary_entropy(a)) * std::log(2.0)).epsilon(1e-8));
  CHECK(std::abs(gap_I(9999, a) - gap_I_limit(a)) < 1e-3);
  double prev = 0;
  for (std::uint32_t qm1 : {1u, 2u, 4u, 8u, 16u, 64u}) {
    const double v = gap_I(qm1, a);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("zeta values") {
  CHECK(zeta_at(2, 1, 0.3) == doctest::Approx(0.7));
  const auto r22 = zeta(2, 2);
  CHECK(r22.zeta == doctest::Approx(0.6942).epsilon(1e-3));
  CHECK(r22.kappa_star > 0);
  CHECK(r22.kappa_star < 1.0 / 3);
  for (std::uint32_t d = 2; d <= 6; ++d) {
    const auto r = zeta(2, d);
    CHECK(r.zeta <= 1 - 1.0 / (2 * d) + 1e-9);
    CHECK(r.zeta <= r.theorem1_bound + 1e-9);
    CHECK(r.zeta < 1.0);
  }
  // Increasing in q for fixed d.
  CHECK(zeta(3, 2).zeta > zeta(2, 2).zeta);
  CHECK(zeta(4, 2).zeta > zeta(3, 2).zeta);
}

TEST_CASE("row sums, reflection symmetry and unimodality") {
  for (std::uint32_t q = 2; q <= 9; ++q) {
    for (std::uint32_t n = 0; n <= 30; ++n) {
      const auto t = ExtBinomTable::build(n, q);
      const std::size_t top = std::size_t{n} * (q - 1);
      REQUIRE(t.row.size() == top + 1);
      BigInt sum = 0, qn = 1;
      for (std::uint32_t i = 0; i < n; ++i) qn *= q;
      bool sym = true, mono = true;
      for (std::size_t D = 0; D <= top; ++D) {
        sum += t.row[D];
        if (t.row[D] != t.row[top - D]) sym = false;
        if (D >= 1 && D <= top / 2 && t.row[D] < t.row[D - 1]) mono = false;
      }
      CHECK(sum == qn);
      CHECK(sym);
      CHECK(mono);
      CHECK(ext_binom_cum(n, static_cast<std::int64_t>(top), q) == qn);
    }
  }
}

TEST_CASE("entropy bound grid") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    for (double a = 0.05; a < 0.5; a += 0.05) {
      const double h = entropy_H(q, a);
      CHECK(h > 0);
      CHECK(h <= 1.0);
      for (std::uint32_t n : {5u, 20u, 60u}) {
        const auto delta = static_cast<std::int64_t>(std::floor(a * (q - 1) * n));
        const double lhs = std::log(ext_binom_cum(n, delta, q).convert_to<double>());
        CHECK(lhs <= h * n * std::log(double(q)) * (1 + 1e-12) + 1e-9);
      }
    }
  }
}

TEST_CASE("zeta special cases") {
  CHECK(zeta(2, 1).zeta == doctest::Approx(1e-5).epsilon(1e-3));
  CHECK(theorem1_bound(2, 2) == doctest::Approx(1 - 1.0 / 8));
  CHECK(theorem1_bound(9, 1) == doctest::Approx(1 - 1.0 / (8 * std::log(9.0))));
}
