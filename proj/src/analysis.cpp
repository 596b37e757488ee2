#include "fqsolve/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "fqsolve/errors.hpp"

namespace fqsolve {
namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section minimisation of a unimodal f on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Coarse grid scan, then golden section inside the bracket around the best
// grid point. Returns the minimiser.
double scan_then_refine(const std::function<double(double)>& f, double lo, double hi, int points,
                        double tol) {
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double v = f(lo + step * i);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = lo + step * std::max(0, best - 1);
  const double b = lo + step * std::min(points - 1, best + 1);
  const double x = golden_min(f, a, b, tol);
  return f(x) <= best_val ? x : lo + step * best;
}

}  // namespace

ExtBinomTable ExtBinomTable::build(std::uint32_t n, std::uint32_t q) {
  ExtBinomTable t;
  t.n = n;
  t.q = q;
  t.row.assign(1, BigInt(1));
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<BigInt> next(t.row.size() + q - 1, BigInt(0));
    for (std::size_t d = 0; d < t.row.size(); ++d) {
      for (std::uint32_t e = 0; e < q; ++e) next[d + e] += t.row[d];
    }
    t.row = std::move(next);
  }
  return t;
}

BigInt ext_binom(std::uint32_t n, std::int64_t delta, std::uint32_t q) {
  const std::int64_t top = static_cast<std::int64_t>(n) * (q - 1);
  if (delta < 0 || delta > top) {
    throw DomainError("ext_binom: degree " + std::to_string(delta) + " outside 0.." +
                      std::to_string(top));
  }
  return ExtBinomTable::build(n, q).row[static_cast<std::size_t>(delta)];
}

BigInt ext_binom_cum(std::uint32_t n, std::int64_t delta, std::uint32_t q) {
  if (delta < 0) return 0;
  const auto table = ExtBinomTable::build(n, q);
  BigInt sum = 0;
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(delta), table.row.size() - 1);
  for (std::size_t d = 0; d <= top; ++d) sum += table.row[d];
  return sum;
}

std::uint64_t trimmed_count(std::uint32_t n, std::int64_t delta, std::uint32_t q) {
  const BigInt c = ext_binom_cum(n, delta, q);
  if (c > std::numeric_limits<std::uint64_t>::max()) throw TooLarge("trimmed point set too large");
  return c.convert_to<std::uint64_t>();
}

double binary_entropy(double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) return 0.0;
  return -alpha * std::log2(alpha) - (1.0 - alpha) * std::log2(1.0 - alpha);
}

double entropy_H(std::uint32_t q, double alpha) {
  if (q < 2) throw DomainError("entropy_H: q must be at least 2");
  if (!(alpha >= 0.0) || alpha >= 0.5) throw DomainError("entropy_H: alpha must lie in [0, 1/2)");
  if (alpha == 0.0) return 0.0;
  const double ln_q = std::log(static_cast<double>(q));
  const double s = ln_q / (q - 1);
  // Convex in theta, so the scan only guards the bracket.
  auto f = [&](double theta) {
    const double num = -std::expm1(theta * q * s);
    const double den = -std::expm1(theta * s);
    return -alpha * theta + (std::log(num) - std::log(den)) / ln_q;
  };
  const double theta = scan_then_refine(f, -50.0, -1e-12, 64, 1e-10);
  return std::min(1.0, f(theta));
}

double gap_I(std::uint32_t q_minus_1, double alpha) {
  if (q_minus_1 < 1) throw DomainError("gap_I: q-1 must be positive");
  if (!(alpha > 0.0) || alpha >= 0.5) throw DomainError("gap_I: alpha must lie in (0, 1/2)");
  const std::uint32_t q = q_minus_1 + 1;
  return (1.0 - entropy_H(q, alpha)) * std::log(static_cast<double>(q));
}

double gap_I_limit(double alpha) {
  if (!(alpha > 0.0) || alpha >= 0.5) throw DomainError("gap_I_limit: alpha must lie in (0, 1/2)");
  auto neg = [&](double theta) { return -(alpha * theta - std::log(std::expm1(theta) / theta)); };
  const double theta = scan_then_refine(neg, -200.0, -1e-12, 256, 1e-10);
  return -neg(theta);
}

double theorem1_bound(std::uint32_t q, std::uint32_t d) {
  return 1.0 - std::min(1.0 / (8.0 * std::log(static_cast<double>(q))), 1.0 / (4.0 * d));
}

double zeta_at(std::uint32_t q, std::uint32_t d, double kappa) {
  const double limit = 1.0 / (2.0 * d - 1.0);
  if (!(kappa > 0.0) || kappa >= limit) throw DomainError("zeta_at: kappa outside (0, 1/(2d-1))");
  if (d == 1) return 1.0 - kappa;
  auto term = [&](double delta) {
    const double a = delta * (d - 1) / (1.0 - delta);
    return entropy_H(q, a) * (1.0 - delta);
  };
  const double best = scan_then_refine([&](double x) { return -term(x); }, 0.0, kappa, 129,
                                       1e-10 * kappa);
  const double sup = std::max({term(best), term(kappa), 0.0});
  return std::max(1.0 - kappa, sup);
}

ExponentReport zeta(std::uint32_t q, std::uint32_t d) {
  if (d < 1) throw DomainError("zeta: d must be at least 1");
  ExponentReport r;
  r.q = q;
  r.d = d;
  r.theorem1_bound = theorem1_bound(q, d);
  const double kappa_max = (1.0 - 1e-5) / (2.0 * d - 1.0);
  // 1 - kappa decreases and the sup term is nondecreasing in kappa, so the
  // minimum of their max sits at the crossing (or at kappa_max if none).
  auto excess = [&](double kappa) { return zeta_at(q, d, kappa) - (1.0 - kappa); };
  if (excess(kappa_max) <= 0.0) {
    r.kappa_star = kappa_max;
    r.zeta = 1.0 - kappa_max;
    return r;
  }
  double lo = 0.0, hi = kappa_max;
  while (hi - lo > 1e-12 * kappa_max) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  r.kappa_star = hi;
  r.zeta = zeta_at(q, d, hi);
  return r;
}

}  // namespace fqsolve
