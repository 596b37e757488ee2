#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fqsolve {

using BigInt = boost::multiprecision::cpp_int;

/// Row of extended binomial coefficients for fixed (n, q):
/// row[D] = number of exponent vectors in {0..q-1}^n with total degree D,
/// for D = 0..n(q-1). Built by convolving n copies of the uniform step
/// distribution on {0..q-1}.
struct ExtBinomTable {
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<BigInt> row;

  static ExtBinomTable build(std::uint32_t n, std::uint32_t q);
};

/// Monomials of total degree exactly `delta`. Throws DomainError when delta
/// is outside 0..n(q-1).
BigInt ext_binom(std::uint32_t n, std::int64_t delta, std::uint32_t q);

/// Monomials of total degree at most `delta` (the size of T_{n,delta}).
/// Negative delta gives 0; delta >= n(q-1) gives q^n.
BigInt ext_binom_cum(std::uint32_t n, std::int64_t delta, std::uint32_t q);

/// Same as ext_binom_cum as a machine word; throws TooLarge on overflow.
std::uint64_t trimmed_count(std::uint32_t n, std::int64_t delta, std::uint32_t q);

double binary_entropy(double alpha);

/// H(q, alpha): the exponent of the large-deviation bound on ext_binom_cum,
/// inf over theta < 0 of -alpha*theta + log_q((1 - q^{theta q/(q-1)}) /
/// (1 - q^{theta/(q-1)})). Defined here for alpha in [0, 1/2); H(q, 0) = 0.
double entropy_H(std::uint32_t q, double alpha);

/// I(q-1, alpha) = (1 - H(q, alpha)) ln q.
double gap_I(std::uint32_t q_minus_1, double alpha);

/// sup over theta < 0 of alpha*theta - ln((e^theta - 1)/theta), the q -> inf
/// limit of gap_I.
double gap_I_limit(double alpha);

double theorem1_bound(std::uint32_t q, std::uint32_t d);

/// zeta_{q,d}(kappa) = max(1 - kappa, sup_{0<=delta<=kappa} H(q, a) (1 - delta))
/// with a = delta (d-1)/(1-delta).
double zeta_at(std::uint32_t q, std::uint32_t d, double kappa);

struct ExponentReport {
  std::uint32_t q = 0;
  std::uint32_t d = 0;
  double kappa_star = 0.0;
  double zeta = 0.0;
  double theorem1_bound = 0.0;
};

/// Minimises zeta_at over kappa in (0, (1 - 1e-5)/(2d-1)].
ExponentReport zeta(std::uint32_t q, std::uint32_t d);

}  // namespace fqsolve
