#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "fqsolve/exec.hpp"
#include "fqsolve/field.hpp"
#include "fqsolve/mpoly.hpp"

namespace fqsolve {

/// Counts multiply-add steps performed by the transform kernels.
struct OpCounter {
  std::atomic<std::uint64_t> ops{0};
};

/// Dense indexing of T_{n-b,delta} x F_q^b in canonical (lexicographic)
/// order. The same set indexes monomials (coefficient vectors) and points
/// (evaluation vectors): exponent vector e <-> point (sigma_{e_1}, ...),
/// where sigma_i is the field element with index i.
class TrimmedLayout {
 public:
  TrimmedLayout(std::uint32_t q, std::uint32_t n, std::int64_t delta, std::uint32_t b);
  explicit TrimmedLayout(const TrimmedPointSet& ps) : TrimmedLayout(ps.q, ps.n, ps.delta, ps.b) {}

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::int64_t delta() const { return delta_; }
  std::uint32_t b() const { return b_; }
  std::uint32_t trimmed() const { return n_ - b_; }
  std::uint64_t size() const { return size_; }
  TrimmedPointSet point_set() const { return {q_, n_, delta_, b_}; }

  /// |T_{m, d}| for m <= n-b; 0 for d < 0.
  std::uint64_t trimmed_size(std::uint32_t m, std::int64_t d) const;
  std::uint64_t grid_size() const { return grid_; }

  bool contains(std::span<const std::uint16_t> e) const;
  /// Position of e. Precondition: contains(e).
  std::uint64_t rank(std::span<const std::uint16_t> e) const;

  /// Visits every element in canonical order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (size_ == 0) return;
    Monomial cur(n_, 0);
    std::uint64_t idx = 0;
    visit(0, delta_, cur, idx, fn);
  }

 private:
  template <typename Fn>
  void visit(std::uint32_t i, std::int64_t budget, Monomial& cur, std::uint64_t& idx, Fn& fn) const {
    if (i == n_) {
      fn(static_cast<const Monomial&>(cur), idx++);
      return;
    }
    const bool trimmed_coord = i < n_ - b_;
    for (std::uint32_t v = 0; v < q_; ++v) {
      if (trimmed_coord && static_cast<std::int64_t>(v) > budget) break;
      cur[i] = static_cast<std::uint16_t>(v);
      visit(i + 1, trimmed_coord ? budget - v : budget, cur, idx, fn);
    }
    cur[i] = 0;
  }

  std::uint32_t q_, n_, b_;
  std::int64_t delta_;
  std::int64_t delta_eff_;  // min(delta, (n-b)(q-1))
  std::uint64_t grid_ = 1;
  std::uint64_t size_ = 0;
  std::vector<std::vector<std::uint64_t>> counts_;  // counts_[m][d] = |T_{m,d}|
};

/// In place: coefficient vector -> evaluation vector over the layout.
void forward_transform(const Field& field, const TrimmedLayout& layout, std::span<Elem> data,
                       Exec exec = Exec::parallel, OpCounter* counter = nullptr);
/// In place: evaluation vector -> coefficient vector over the layout.
void inverse_transform(const Field& field, const TrimmedLayout& layout, std::span<Elem> data,
                       Exec exec = Exec::parallel, OpCounter* counter = nullptr);

/// Coefficients of p placed on the layout. Throws DegreeTooHigh when a
/// monomial of p is not in the layout.
std::vector<Elem> to_dense(const Polynomial& p, const TrimmedLayout& layout);
Polynomial from_dense(FieldPtr field, const TrimmedLayout& layout, std::span<const Elem> coeffs);

/// Values of the polynomial given by `coeffs` on `src` at every point of
/// `dst` (same arity). The polynomial may have monomials outside `dst`; the
/// transform then runs on an enlarged layout and the result is filtered.
std::vector<Elem> evaluate_dense_on(const Field& field, const TrimmedLayout& src,
                                    std::span<const Elem> coeffs, const TrimmedLayout& dst,
                                    Exec exec = Exec::parallel, OpCounter* counter = nullptr);

/// Values of p at every point of `dst`, with no degree restriction on p.
std::vector<Elem> evaluate_on(const Polynomial& p, const TrimmedLayout& dst, Exec exec = Exec::parallel,
                              OpCounter* counter = nullptr);

/// Evaluations of a degree-bounded polynomial over T_{n-b,delta} x F_q^b.
struct TrimmedEvaluation {
  FieldPtr field;
  TrimmedPointSet point_set;
  std::vector<Elem> values;
};

/// Throws DegreeTooHigh if deg(p) > delta.
TrimmedEvaluation evaluate_trimmed(const Polynomial& p, std::int64_t delta, std::uint32_t b,
                                   Exec exec = Exec::parallel, OpCounter* counter = nullptr);

/// The unique polynomial of total degree <= delta agreeing with ev. Throws
/// SizeMismatch when ev does not cover T_{n-b,delta} x F_q^b.
Polynomial interpolate_trimmed(const TrimmedEvaluation& ev, std::int64_t delta, std::uint32_t b,
                               Exec exec = Exec::parallel, OpCounter* counter = nullptr);

/// Reference interpolator: builds the |T| x |T| evaluation matrix and solves
/// it by Gaussian elimination. Only for small layouts.
Polynomial interpolate_trimmed_dense_solve(const TrimmedEvaluation& ev, std::int64_t delta,
                                           std::uint32_t b);

void write_evaluation(std::ostream& out, const TrimmedEvaluation& ev);

}  // namespace fqsolve
