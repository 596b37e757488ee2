#include "fqsolve/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fqsolve/errors.hpp"
#include "fqsolve/transform.hpp"

namespace fqsolve {
namespace {

// Coefficients of a polynomial over the first `vars` variables on the layout
// (vars, delta, 0). delta < 0 encodes the zero polynomial.
struct DensePoly {
  std::uint32_t vars = 0;
  std::int64_t delta = -1;
  std::vector<Elem> coeffs;
};

class PartialSummer {
 public:
  PartialSummer(const SolverParams& params, std::uint32_t n_total) : params_(params), n_(n_total) {}

  DensePoly run(const PolySystem& s, std::uint32_t beta, RngStream rng) const {
    const Field& f = *s.field;
    const std::uint32_t q = f.q();
    const std::int64_t delta = zdegree(static_cast<std::int64_t>(s.m()), beta, n_, s.d, q);
    const std::uint32_t vars = n_ - beta;
    if (delta < 0) return {vars, delta, {}};

    const auto step = static_cast<std::uint32_t>(params_.lambda.ceil_times(n_));
    if (beta < step || n_ <= 3) return base_case(s, beta, delta);

    const std::uint32_t beta1 = beta - step;
    const std::uint32_t mu = beta1 + 2;
    const std::uint64_t t = params_.t_override.value_or(default_repetitions(n_, q));
    // Points T_{n-beta, delta} x F_q^{beta - beta1} in the child's variables.
    const TrimmedLayout target(q, n_ - beta1, delta, beta - beta1);
    const std::uint64_t npts = target.size();
    std::vector<std::uint32_t> votes(npts * q, 0);

    auto repetition = [&](std::uint64_t j) {
      RngStream r = rng.child(j);
      RngStream rs_rng = r.child(0);
      PolySystem reduced(s.field, s.n, razborov_smolensky(s, mu, rs_rng), s.d);
      const DensePoly z = run(reduced, beta1, r.child(1));
      if (z.delta < 0) return std::vector<Elem>(npts, 0);
      const TrimmedLayout src(q, z.vars, z.delta, 0);
      return evaluate_dense_on(f, src, z.coeffs, target, Exec::serial);
    };

    if (use_openmp(params_.exec) && t > 1) {
#pragma omp parallel
      {
        std::vector<std::uint32_t> local(npts * q, 0);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(t); ++j) {
          const auto vals = repetition(static_cast<std::uint64_t>(j));
          for (std::uint64_t i = 0; i < npts; ++i) ++local[i * q + vals[i]];
        }
#pragma omp critical(fqsolve_votes)
        for (std::size_t i = 0; i < votes.size(); ++i) votes[i] += local[i];
      }
    } else {
      for (std::uint64_t j = 0; j < t; ++j) {
        const auto vals = repetition(j);
        for (std::uint64_t i = 0; i < npts; ++i) ++votes[i * q + vals[i]];
      }
    }

    // Plurality per point, then sum over the trailing grid block.
    const std::uint64_t G = target.grid_size();
    const std::uint64_t nout = npts / G;
    std::vector<Elem> sums(nout, 0);
    for (std::uint64_t p = 0; p < nout; ++p) {
      Elem acc = 0;
      for (std::uint64_t g = 0; g < G; ++g) {
        const std::uint32_t* row = &votes[(p * G + g) * q];
        const Elem winner = static_cast<Elem>(std::max_element(row, row + q) - row);
        acc = f.add(acc, winner);
      }
      sums[p] = acc;
    }
    return interpolate(f, vars, delta, std::move(sums));
  }

 private:
  DensePoly base_case(const PolySystem& s, std::uint32_t beta, std::int64_t delta) const {
    const Field& f = *s.field;
    const std::uint32_t q = f.q();
    const TrimmedLayout pts(q, n_, delta, beta);
    std::vector<Elem> indicator(pts.size(), 1);
    for (const auto& p : s.polys) {
      const auto vals = evaluate_on(p, pts, params_.exec);
      for (std::size_t i = 0; i < vals.size(); ++i)
        if (indicator[i] != 0) indicator[i] = f.sub(1, f.pow(vals[i], q - 1));
    }
    const std::uint64_t G = pts.grid_size();
    std::vector<Elem> sums(pts.size() / G, 0);
    for (std::size_t p = 0; p < sums.size(); ++p) {
      Elem acc = 0;
      for (std::uint64_t g = 0; g < G; ++g) acc = f.add(acc, indicator[p * G + g]);
      sums[p] = acc;
    }
    return interpolate(f, n_ - beta, delta, std::move(sums));
  }

  DensePoly interpolate(const Field& f, std::uint32_t vars, std::int64_t delta, std::vector<Elem> values) const {
    const TrimmedLayout layout(f.q(), vars, delta, 0);
    inverse_transform(f, layout, values, params_.exec);
    return {vars, delta, std::move(values)};
  }

  const SolverParams& params_;
  std::uint32_t n_;
};

void check_system(const PolySystem& s, const SolverParams& params) {
  s.validate();
  params.validate(s.d);
}

}  // namespace

SolverParams SolverParams::defaults(std::uint32_t d) {
  SolverParams p;
  const std::int64_t w = 2 * static_cast<std::int64_t>(std::max<std::uint32_t>(d, 1)) - 1;
  p.kappa = Rational(99, 100 * w);
  p.lambda = Rational(99, 200 * w);
  return p;
}

void SolverParams::validate(std::uint32_t d) const {
  const Rational zero(0, 1);
  const Rational cap(1, 2 * static_cast<std::int64_t>(std::max<std::uint32_t>(d, 1)) - 1);
  if (!(zero < lambda)) throw InvalidParams("lambda must be positive");
  if (!(lambda <= kappa)) throw InvalidParams("lambda must not exceed kappa");
  if (!(kappa < cap)) throw InvalidParams("kappa must be below 1/(2d-1) = " + cap.str());
  if (t_override && *t_override == 0) throw InvalidParams("repetition count must be positive");
  if (outer_reps && *outer_reps == 0) throw InvalidParams("outer repetition count must be positive");
}

std::int64_t zdegree(std::int64_t m, std::int64_t beta, std::int64_t n, std::int64_t d, std::int64_t q) {
  return (std::min(m * d, n) - beta) * (q - 1);
}

Elem plurality(const std::vector<Elem>& values) {
  if (values.empty()) throw InvalidParams("plurality of an empty list");
  std::map<Elem, std::size_t> counts;
  for (Elem v : values) ++counts[v];
  Elem best = counts.begin()->first;
  std::size_t best_count = 0;
  for (const auto& [v, c] : counts) {
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  return best;
}

std::uint64_t default_repetitions(std::uint32_t n, std::uint32_t q) {
  return static_cast<std::uint64_t>(std::ceil(96.0 * n * std::log(static_cast<double>(q))));
}

std::uint64_t default_outer_reps(std::uint32_t n) { return std::max<std::uint64_t>(1, 9ull * n); }

Polynomial partial_sum(const PolySystem& s, std::uint32_t beta, const SolverParams& params, RngStream rng) {
  if (beta > s.n) throw InvalidParams("beta exceeds the number of variables");
  check_system(s, params);
  const DensePoly z = PartialSummer(params, s.n).run(s, beta, std::move(rng));
  if (z.delta < 0) return Polynomial(s.field, s.n - beta);
  const TrimmedLayout layout(s.field->q(), z.vars, z.delta, 0);
  return from_dense(s.field, layout, z.coeffs);
}

Elem full_sum(const PolySystem& s, const SolverParams& params, RngStream rng) {
  check_system(s, params);
  const auto beta = static_cast<std::uint32_t>(params.kappa.floor_times(s.n));
  const DensePoly z = PartialSummer(params, s.n).run(s, beta, std::move(rng));
  if (z.delta < 0) return 0;
  const Field& f = *s.field;
  const TrimmedLayout src(f.q(), z.vars, z.delta, 0);
  const TrimmedLayout grid(f.q(), z.vars, 0, z.vars);
  const auto vals = evaluate_dense_on(f, src, z.coeffs, grid, params.exec);
  Elem acc = 0;
  for (Elem v : vals) acc = f.add(acc, v);
  return acc;
}

Verdict solve_pes(const PolySystem& s, const SolverParams& params) {
  check_system(s, params);
  const std::uint64_t reps = params.outer_reps.value_or(default_outer_reps(s.n));
  const RngStream root(params.seed);
  for (std::uint64_t r = 0; r < reps; ++r) {
    RngStream trial = root.child(r);
    RngStream vv_rng = trial.child(0);
    std::vector<Polynomial> polys = s.polys;
    for (auto& p : valiant_vazirani(s.field, s.n, vv_rng)) polys.push_back(std::move(p));
    const PolySystem augmented(s.field, s.n, std::move(polys), s.d);
    if (full_sum(augmented, params, trial.child(1)) != 0) return Verdict::sat;
  }
  return Verdict::unsat;
}

}  // namespace fqsolve
