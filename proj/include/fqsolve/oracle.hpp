#pragma once

#include <cstdint>

#include "fqsolve/analysis.hpp"
#include "fqsolve/exec.hpp"
#include "fqsolve/mpoly.hpp"

namespace fqsolve {

// Exhaustive ground truth. Nothing here shares evaluation code with the
// transform or the solver; only field arithmetic and mpoly are reused.

struct RootCount {
  BigInt count;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
};

constexpr std::uint64_t kMaxOracleGrid = 100'000'000;
constexpr std::uint64_t kMaxOracleInterpolationGrid = 10'000'000;

/// Number of common roots in F_q^n. Throws TooLarge if q^n > kMaxOracleGrid.
RootCount count_common_roots(const PolySystem& s, Exec exec = Exec::parallel);

/// sum over F_q^n of the indicator, via eval_indicator at every point.
Elem brute_Z(const PolySystem& s, Exec exec = Exec::parallel);

/// Exact Z_beta: sums the indicator over the last beta coordinates, then
/// interpolates on the full grid of the remaining n - beta coordinates.
/// Throws TooLarge if q^n > kMaxOracleInterpolationGrid.
Polynomial brute_partial_sum(const PolySystem& s, std::uint32_t beta, Exec exec = Exec::parallel);

/// Values of p on the whole grid F_q^n in lexicographic order, by a dense
/// per-axis Vandermonde product.
std::vector<Elem> grid_values(const Polynomial& p);

}  // namespace fqsolve
