#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqsolve/exec.hpp"
#include "fqsolve/mpoly.hpp"
#include "fqsolve/randomized.hpp"
#include "fqsolve/rational.hpp"

namespace fqsolve {

struct SolverParams {
  Rational kappa;
  Rational lambda;
  std::optional<std::uint64_t> t_override;
  std::optional<std::uint64_t> outer_reps;
  std::uint64_t seed = 0;
  Exec exec = Exec::parallel;

  /// kappa = 0.99 / (2d - 1), lambda = kappa / 2.
  static SolverParams defaults(std::uint32_t d);
  /// Throws InvalidParams unless 0 < lambda <= kappa < 1/(2d-1).
  void validate(std::uint32_t d) const;
};

/// (min(m d, n) - beta)(q - 1). Negative values mean the partial sum is the
/// zero polynomial.
std::int64_t zdegree(std::int64_t m, std::int64_t beta, std::int64_t n, std::int64_t d, std::int64_t q);

/// Most frequent value, ties to the smallest index. Throws InvalidParams on
/// empty input.
Elem plurality(const std::vector<Elem>& values);

/// ceil(96 n ln q), the default repetition count of the recursive step.
std::uint64_t default_repetitions(std::uint32_t n, std::uint32_t q);
std::uint64_t default_outer_reps(std::uint32_t n);

/// Randomized partial sum Z_beta over the first n - beta variables.
Polynomial partial_sum(const PolySystem& s, std::uint32_t beta, const SolverParams& params, RngStream rng);

/// Randomized full sum of the indicator over F_q^n.
Elem full_sum(const PolySystem& s, const SolverParams& params, RngStream rng);

enum class Verdict { sat, unsat };

/// Isolation trials, each running full_sum; SAT on the first nonzero sum.
Verdict solve_pes(const PolySystem& s, const SolverParams& params);

}  // namespace fqsolve
