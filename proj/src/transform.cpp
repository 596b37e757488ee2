#include "fqsolve/transform.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>

#include "fqsolve/errors.hpp"

namespace fqsolve {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 4;
constexpr std::uint64_t kMaxDenseElements = std::uint64_t{1} << 32;
constexpr std::uint64_t kParallelGrain = 1u << 12;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return std::min(kSaturated, a + b); }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Per-axis change-of-basis tables on the nodes sigma_l = l (element index).
// Newton basis N_l = prod_{r<l} (X - sigma_r).
struct NewtonTables {
  std::uint32_t q = 0;
  std::vector<Elem> mon_to_newton;  // [j*q + l]: X^j = sum_l A[j][l] N_l
  std::vector<Elem> newton_to_mon;  // [l*q + j]: N_l = sum_j B[l][j] X^j
  std::vector<Elem> newton_eval;    // [x*q + l]: N_l(sigma_x), zero for l > x
  std::vector<Elem> diag_inv;       // 1 / N_x(sigma_x)
};

std::shared_ptr<const NewtonTables> build_tables(const Field& f) {
  const std::uint32_t q = f.q();
  auto t = std::make_shared<NewtonTables>();
  t->q = q;
  const std::size_t qq = std::size_t{q} * q;
  t->mon_to_newton.assign(qq, 0);
  t->newton_to_mon.assign(qq, 0);
  t->newton_eval.assign(qq, 0);
  t->diag_inv.assign(q, 0);

  auto& A = t->mon_to_newton;
  A[0] = 1;
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    // X * N_l = N_{l+1} + sigma_l N_l
    for (std::uint32_t l = 0; l <= j + 1; ++l) {
      Elem v = 0;
      if (l >= 1) v = A[std::size_t{j} * q + l - 1];
      if (l <= j) v = f.add(v, f.mul(l, A[std::size_t{j} * q + l]));
      A[std::size_t{j + 1} * q + l] = v;
    }
  }
  auto& B = t->newton_to_mon;
  B[0] = 1;
  for (std::uint32_t l = 0; l + 1 < q; ++l) {
    for (std::uint32_t j = 0; j <= l + 1; ++j) {
      Elem v = 0;
      if (j >= 1) v = B[std::size_t{l} * q + j - 1];
      if (j <= l) v = f.sub(v, f.mul(l, B[std::size_t{l} * q + j]));
      B[std::size_t{l + 1} * q + j] = v;
    }
  }
  for (std::uint32_t x = 0; x < q; ++x) {
    Elem acc = 1;
    for (std::uint32_t l = 0; l <= x; ++l) {
      t->newton_eval[std::size_t{x} * q + l] = acc;
      acc = f.mul(acc, f.sub(x, l));
    }
    t->diag_inv[x] = f.inv(t->newton_eval[std::size_t{x} * q + x]);
  }
  return t;
}

std::shared_ptr<const NewtonTables> tables_for(const Field& f) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const NewtonTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[f.q()];
  if (!slot) slot = build_tables(f);
  return slot;
}

enum class Pass { U, L, Linv, Uinv };

// Applies one triangular pass in place to v[0..len).
void apply_pass(const Field& f, const NewtonTables& t, Pass pass, Elem* v, std::uint32_t len) {
  const std::uint32_t q = t.q;
  switch (pass) {
    case Pass::U:
      for (std::uint32_t l = 0; l < len; ++l) {
        Elem acc = 0;
        for (std::uint32_t j = l; j < len; ++j)
          acc = f.add(acc, f.mul(t.mon_to_newton[std::size_t{j} * q + l], v[j]));
        v[l] = acc;
      }
      break;
    case Pass::L:
      for (std::uint32_t x = len; x-- > 0;) {
        Elem acc = 0;
        const Elem* row = &t.newton_eval[std::size_t{x} * q];
        for (std::uint32_t l = 0; l <= x; ++l) acc = f.add(acc, f.mul(row[l], v[l]));
        v[x] = acc;
      }
      break;
    case Pass::Linv:
      for (std::uint32_t x = 0; x < len; ++x) {
        Elem acc = v[x];
        const Elem* row = &t.newton_eval[std::size_t{x} * q];
        for (std::uint32_t l = 0; l < x; ++l) acc = f.sub(acc, f.mul(row[l], v[l]));
        v[x] = f.mul(acc, t.diag_inv[x]);
      }
      break;
    case Pass::Uinv:
      for (std::uint32_t j = 0; j < len; ++j) {
        Elem acc = 0;
        for (std::uint32_t l = j; l < len; ++l)
          acc = f.add(acc, f.mul(t.newton_to_mon[std::size_t{l} * q + j], v[l]));
        v[j] = acc;
      }
      break;
  }
}

std::uint64_t pass_cost(std::uint32_t len) { return std::uint64_t{len} * (len + 1) / 2; }

class Kernel {
 public:
  Kernel(const Field& f, bool inverse, Exec exec, OpCounter* counter)
      : f_(f), t_(tables_for(f)), q_(f.q()), inverse_(inverse), exec_(exec), counter_(counter) {}

  // Full grid over `ncoords` axes; each grid cell holds `width` consecutive
  // values that are transformed independently.
  void grid(Elem* data, std::uint32_t ncoords, std::uint64_t width) {
    if (ncoords == 0) return;
    std::uint64_t outer_total = 1;
    for (std::uint32_t a = 0; a < ncoords; ++a) outer_total *= q_;
    const std::uint64_t total = outer_total * width;
    for (std::uint32_t a = 0; a < ncoords; ++a) {
      std::uint64_t stride = width;
      for (std::uint32_t r = a + 1; r < ncoords; ++r) stride *= q_;
      const std::uint64_t nfibers = total / q_;
      const bool par = use_openmp(exec_) && total >= kParallelGrain;
      auto one = [&](std::uint64_t fi) {
        return fiber(data + (fi / stride) * stride * q_ + fi % stride, stride, q_);
      };
      std::uint64_t ops = 0;
      if (par) {
#pragma omp parallel for schedule(static) reduction(+ : ops)
        for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(nfibers); ++fi)
          ops += one(static_cast<std::uint64_t>(fi));
      } else {
        for (std::uint64_t fi = 0; fi < nfibers; ++fi) ops += one(fi);
      }
      count(ops);
    }
  }

  // Layout T_{m,D} x (width values per trimmed point), canonical order.
  void trimmed(Elem* data, std::uint32_t m, std::int64_t D, std::uint64_t width) {
    if (m == 0) return;
    if (D >= static_cast<std::int64_t>(m) * (q_ - 1)) {
      grid(data, m, width);
      return;
    }
    const std::vector<std::uint32_t>& degs = degree_list(m - 1, D);
    const std::uint32_t nblocks = static_cast<std::uint32_t>(std::min<std::int64_t>(q_ - 1, D) + 1);
    std::vector<std::uint64_t> offsets(nblocks + 1, 0);
    for (std::uint32_t j = 0; j < nblocks; ++j)
      offsets[j + 1] = offsets[j] + size_of(m - 1, D - j) * width;

    axis_pass(data, offsets, degs, D, width, inverse_ ? Pass::Linv : Pass::U);
    for (std::uint32_t j = 0; j < nblocks; ++j) trimmed(data + offsets[j], m - 1, D - j, width);
    axis_pass(data, offsets, degs, D, width, inverse_ ? Pass::Uinv : Pass::L);
  }

 private:
  // Forward or inverse full transform on one strided fiber of length len.
  std::uint64_t fiber(Elem* base, std::uint64_t stride, std::uint32_t len) {
    thread_local std::vector<Elem> buf;
    if (buf.size() < q_) buf.resize(q_);
    for (std::uint32_t i = 0; i < len; ++i) buf[i] = base[i * stride];
    apply_pass(f_, *t_, inverse_ ? Pass::Linv : Pass::U, buf.data(), len);
    apply_pass(f_, *t_, inverse_ ? Pass::Uinv : Pass::L, buf.data(), len);
    for (std::uint32_t i = 0; i < len; ++i) base[i * stride] = buf[i];
    return 2 * pass_cost(len);
  }

  void axis_pass(Elem* data, const std::vector<std::uint64_t>& offsets,
                 const std::vector<std::uint32_t>& degs, std::int64_t D, std::uint64_t width,
                 Pass pass) {
    const std::uint32_t nblocks = static_cast<std::uint32_t>(offsets.size() - 1);
    const std::uint64_t nz = degs.size();
    const bool par = use_openmp(exec_) && nz * width >= kParallelGrain && nz > 1;
    std::uint64_t nchunks = 1;
#ifdef _OPENMP
    if (par) nchunks = std::min<std::uint64_t>(nz, 64);
#endif
    // Starting position inside each block for every chunk.
    std::vector<std::uint64_t> starts(nchunks * nblocks, 0);
    if (nchunks > 1) {
      std::vector<std::uint64_t> hist(static_cast<std::size_t>(D) + 1, 0);
      std::uint64_t next = 1;
      for (std::uint64_t i = 0; i < nz && next < nchunks; ++i) {
        if (i == next * nz / nchunks) {
          std::uint64_t running = 0;
          // pos_j = #{earlier z : s(z) <= D - j}
          std::vector<std::uint64_t> cum(static_cast<std::size_t>(D) + 1);
          for (std::int64_t s = 0; s <= D; ++s) cum[s] = (running += hist[s]);
          for (std::uint32_t j = 0; j < nblocks; ++j) starts[next * nblocks + j] = cum[D - j];
          ++next;
        }
        ++hist[degs[i]];
      }
    }
    auto chunk = [&](std::uint64_t c) {
      const std::uint64_t i0 = c * nz / nchunks;
      const std::uint64_t i1 = (c + 1) * nz / nchunks;
      thread_local std::vector<std::uint64_t> pos;
      thread_local std::vector<Elem> buf;
      pos.assign(starts.begin() + c * nblocks, starts.begin() + (c + 1) * nblocks);
      if (buf.size() < q_) buf.resize(q_);
      std::uint64_t ops = 0;
      for (std::uint64_t i = i0; i < i1; ++i) {
        const std::uint32_t len =
            static_cast<std::uint32_t>(std::min<std::int64_t>(q_ - 1, D - degs[i]) + 1);
        for (std::uint64_t w = 0; w < width; ++w) {
          for (std::uint32_t j = 0; j < len; ++j) buf[j] = data[offsets[j] + pos[j] * width + w];
          apply_pass(f_, *t_, pass, buf.data(), len);
          for (std::uint32_t j = 0; j < len; ++j) data[offsets[j] + pos[j] * width + w] = buf[j];
        }
        ops += pass_cost(len) * width;
        for (std::uint32_t j = 0; j < len; ++j) ++pos[j];
      }
      return ops;
    };
    std::uint64_t ops = 0;
    if (par) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : ops)
      for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) ops += chunk(static_cast<std::uint64_t>(c));
    } else {
      ops = chunk(0);
    }
    count(ops);
  }

  std::uint64_t size_of(std::uint32_t m, std::int64_t D) { return degree_list(m, D).size(); }

  // Total degrees of the elements of T_{m,D} in canonical order.
  const std::vector<std::uint32_t>& degree_list(std::uint32_t m, std::int64_t D) {
    D = std::min<std::int64_t>(D, static_cast<std::int64_t>(m) * (q_ - 1));
    auto key = std::make_pair(m, D);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<std::uint32_t> out;
    if (D >= 0) {
      if (m == 0) {
        out.push_back(0);
      } else {
        for (std::uint32_t v = 0; v < q_ && static_cast<std::int64_t>(v) <= D; ++v) {
          const auto& sub = degree_list(m - 1, D - v);
          for (auto s : sub) out.push_back(s + v);
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  void count(std::uint64_t ops) {
    if (counter_) counter_->ops.fetch_add(ops, std::memory_order_relaxed);
  }

  const Field& f_;
  std::shared_ptr<const NewtonTables> t_;
  std::uint32_t q_;
  bool inverse_;
  Exec exec_;
  OpCounter* counter_;
  std::map<std::pair<std::uint32_t, std::int64_t>, std::vector<std::uint32_t>> memo_;
};

void run_transform(const Field& field, const TrimmedLayout& layout, std::span<Elem> data, bool inverse,
                   Exec exec, OpCounter* counter) {
  if (field.q() != layout.q()) throw SizeMismatch("field order does not match layout");
  if (data.size() != layout.size()) throw SizeMismatch("data length does not match layout size");
  if (layout.size() == 0) return;
  Kernel k(field, inverse, exec, counter);
  const std::uint64_t G = layout.grid_size();
  // Grid axes and trimmed axes commute; transform every grid block, then
  // the trimmed part with G-wide entries.
  const std::uint64_t npts = layout.size() / G;
  if (layout.b() > 0) {
    const bool par = use_openmp(exec) && layout.size() >= kParallelGrain && npts > 1;
    if (par) {
      // Each block gets a serial kernel; the outer loop is the parallel one.
#pragma omp parallel
      {
        Kernel inner(field, inverse, Exec::serial, counter);
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(npts); ++t)
          inner.grid(data.data() + t * G, layout.b(), 1);
      }
    } else {
      for (std::uint64_t t = 0; t < npts; ++t) k.grid(data.data() + t * G, layout.b(), 1);
    }
  }
  k.trimmed(data.data(), layout.trimmed(), layout.delta(), G);
}

std::int64_t prefix_degree(const Monomial& e, std::uint32_t m) {
  std::int64_t s = 0;
  for (std::uint32_t i = 0; i < m; ++i) s += e[i];
  return s;
}

void check_dense_size(const TrimmedLayout& layout) {
  if (layout.size() > kMaxDenseElements) throw TooLarge("trimmed layout too large to materialize");
}

// Evaluates sum(c * X^e) on dst, enlarging the trimmed budget when needed.
template <typename Terms>
std::vector<Elem> eval_terms(const Field& field, const Terms& terms, const TrimmedLayout& dst, Exec exec,
                             OpCounter* counter) {
  const std::uint32_t m = dst.trimmed();
  std::int64_t need = dst.delta();
  for (const auto& [e, c] : terms)
    if (c != 0) need = std::max(need, prefix_degree(e, m));
  need = std::min<std::int64_t>(need, static_cast<std::int64_t>(m) * (dst.q() - 1));
  need = std::max(need, dst.delta());
  const TrimmedLayout big(dst.q(), dst.n(), need, dst.b());
  check_dense_size(big);
  std::vector<Elem> data(big.size(), 0);
  for (const auto& [e, c] : terms)
    if (c != 0) data[big.rank(e)] = field.add(data[big.rank(e)], c);
  forward_transform(field, big, data, exec, counter);
  if (big.delta() == dst.delta()) return data;
  std::vector<Elem> out;
  out.reserve(dst.size());
  big.for_each([&](const Monomial& e, std::uint64_t idx) {
    if (prefix_degree(e, m) <= dst.delta()) out.push_back(data[idx]);
  });
  return out;
}

}  // namespace

TrimmedLayout::TrimmedLayout(std::uint32_t q, std::uint32_t n, std::int64_t delta, std::uint32_t b)
    : q_(q), n_(n), b_(b), delta_(delta) {
  if (q < 2) throw InvalidParams("field order must be at least 2");
  if (b > n) throw InvalidParams("grid part larger than the number of variables");
  const std::uint32_t m = n - b;
  for (std::uint32_t i = 0; i < b; ++i) grid_ = sat_mul(grid_, q);
  delta_eff_ = std::min<std::int64_t>(delta, static_cast<std::int64_t>(m) * (q - 1));
  if (delta_eff_ < 0) {
    size_ = 0;
    counts_.assign(m + 1, {});
    return;
  }
  const std::size_t width = static_cast<std::size_t>(delta_eff_) + 1;
  if (static_cast<std::uint64_t>(m + 1) * width > (std::uint64_t{1} << 27))
    throw TooLarge("trimmed layout parameters too large");
  counts_.assign(m + 1, std::vector<std::uint64_t>(width, 0));
  std::fill(counts_[0].begin(), counts_[0].end(), 1);
  for (std::uint32_t r = 1; r <= m; ++r) {
    std::uint64_t window = 0;
    for (std::size_t d = 0; d < width; ++d) {
      window = sat_add(window, counts_[r - 1][d]);
      if (d >= q) window -= std::min(window, counts_[r - 1][d - q]);
      counts_[r][d] = window;
    }
  }
  size_ = sat_mul(counts_[m][width - 1], grid_);
}

std::uint64_t TrimmedLayout::trimmed_size(std::uint32_t m, std::int64_t d) const {
  if (d < 0 || delta_eff_ < 0) return 0;
  d = std::min<std::int64_t>(d, static_cast<std::int64_t>(m) * (q_ - 1));
  d = std::min(d, delta_eff_);
  return counts_.at(m)[static_cast<std::size_t>(d)];
}

bool TrimmedLayout::contains(std::span<const std::uint16_t> e) const {
  if (e.size() != n_) return false;
  std::int64_t s = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (e[i] >= q_) return false;
    if (i < n_ - b_) s += e[i];
  }
  return s <= delta_;
}

std::uint64_t TrimmedLayout::rank(std::span<const std::uint16_t> e) const {
  const std::uint32_t m = n_ - b_;
  std::uint64_t pos = 0;
  std::int64_t budget = delta_;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t v = 0; v < e[i]; ++v) pos += trimmed_size(m - 1 - i, budget - v);
    budget -= e[i];
  }
  std::uint64_t g = 0;
  for (std::uint32_t i = m; i < n_; ++i) g = g * q_ + e[i];
  return pos * grid_ + g;
}

void forward_transform(const Field& field, const TrimmedLayout& layout, std::span<Elem> data, Exec exec,
                       OpCounter* counter) {
  run_transform(field, layout, data, false, exec, counter);
}

void inverse_transform(const Field& field, const TrimmedLayout& layout, std::span<Elem> data, Exec exec,
                       OpCounter* counter) {
  run_transform(field, layout, data, true, exec, counter);
}

std::vector<Elem> to_dense(const Polynomial& p, const TrimmedLayout& layout) {
  if (p.n() != layout.n()) throw ArityMismatch("polynomial arity does not match layout");
  check_dense_size(layout);
  std::vector<Elem> out(layout.size(), 0);
  for (const auto& [e, c] : p.terms()) {
    if (!layout.contains(e)) throw DegreeTooHigh("monomial outside the trimmed layout");
    out[layout.rank(e)] = c;
  }
  return out;
}

Polynomial from_dense(FieldPtr field, const TrimmedLayout& layout, std::span<const Elem> coeffs) {
  if (coeffs.size() != layout.size()) throw SizeMismatch("coefficient vector does not match layout");
  Polynomial p(field, layout.n());
  layout.for_each([&](const Monomial& e, std::uint64_t idx) {
    if (coeffs[idx] != 0) p.add_term(e, coeffs[idx]);
  });
  return p;
}

std::vector<Elem> evaluate_dense_on(const Field& field, const TrimmedLayout& src, std::span<const Elem> coeffs,
                                    const TrimmedLayout& dst, Exec exec, OpCounter* counter) {
  if (src.n() != dst.n()) throw ArityMismatch("layouts with different arity");
  if (coeffs.size() != src.size()) throw SizeMismatch("coefficient vector does not match layout");
  std::vector<std::pair<Monomial, Elem>> terms;
  src.for_each([&](const Monomial& e, std::uint64_t idx) {
    if (coeffs[idx] != 0) terms.emplace_back(e, coeffs[idx]);
  });
  return eval_terms(field, terms, dst, exec, counter);
}

std::vector<Elem> evaluate_on(const Polynomial& p, const TrimmedLayout& dst, Exec exec, OpCounter* counter) {
  if (p.n() != dst.n()) throw ArityMismatch("polynomial arity does not match layout");
  return eval_terms(p.field(), p.terms(), dst, exec, counter);
}

TrimmedEvaluation evaluate_trimmed(const Polynomial& p, std::int64_t delta, std::uint32_t b, Exec exec,
                                   OpCounter* counter) {
  if (b > p.n()) throw InvalidParams("grid part larger than the number of variables");
  if (!p.is_zero() && static_cast<std::int64_t>(p.degree()) > delta)
    throw DegreeTooHigh("polynomial degree exceeds the trimming bound");
  const TrimmedLayout layout(p.field().q(), p.n(), delta, b);
  check_dense_size(layout);
  TrimmedEvaluation ev{p.field_ptr(), layout.point_set(), {}};
  if (p.is_zero()) {
    ev.values.assign(layout.size(), 0);
    return ev;
  }
  ev.values = to_dense(p, layout);
  forward_transform(p.field(), layout, ev.values, exec, counter);
  return ev;
}

Polynomial interpolate_trimmed(const TrimmedEvaluation& ev, std::int64_t delta, std::uint32_t b, Exec exec,
                               OpCounter* counter) {
  if (!ev.field) throw InvalidParams("evaluation without a field");
  if (b > ev.point_set.n) throw InvalidParams("grid part larger than the number of variables");
  const TrimmedLayout layout(ev.field->q(), ev.point_set.n, delta, b);
  if (ev.values.size() != layout.size())
    throw SizeMismatch("evaluation vector does not match the trimmed point set");
  std::vector<Elem> data = ev.values;
  inverse_transform(*ev.field, layout, data, exec, counter);
  return from_dense(ev.field, layout, data);
}

Polynomial interpolate_trimmed_dense_solve(const TrimmedEvaluation& ev, std::int64_t delta, std::uint32_t b) {
  if (!ev.field) throw InvalidParams("evaluation without a field");
  const Field& f = *ev.field;
  const TrimmedLayout layout(f.q(), ev.point_set.n, delta, b);
  if (ev.values.size() != layout.size())
    throw SizeMismatch("evaluation vector does not match the trimmed point set");
  const std::size_t N = layout.size();
  if (N > 4096) throw TooLarge("dense interpolation limited to 4096 points");
  std::vector<Monomial> elems;
  elems.reserve(N);
  layout.for_each([&](const Monomial& e, std::uint64_t) { elems.push_back(e); });

  // Augmented matrix [M | v], M[r][c] = prod_i x_r,i ^ e_c,i.
  const std::size_t W = N + 1;
  std::vector<Elem> a(N * W, 0);
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      Elem v = 1;
      for (std::size_t i = 0; i < elems[r].size(); ++i) v = f.mul(v, f.pow(elems[r][i], elems[c][i]));
      a[r * W + c] = v;
    }
    a[r * W + N] = ev.values[r];
  }
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (piv < N && a[piv * W + col] == 0) ++piv;
    if (piv == N) throw DomainError("trimmed point set is not unisolvent");
    if (piv != col)
      for (std::size_t k = 0; k < W; ++k) std::swap(a[piv * W + k], a[col * W + k]);
    const Elem s = f.inv(a[col * W + col]);
    for (std::size_t k = col; k < W; ++k) a[col * W + k] = f.mul(a[col * W + k], s);
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || a[r * W + col] == 0) continue;
      const Elem factor = a[r * W + col];
      for (std::size_t k = col; k < W; ++k)
        a[r * W + k] = f.sub(a[r * W + k], f.mul(factor, a[col * W + k]));
    }
  }
  Polynomial p(ev.field, layout.n());
  for (std::size_t c = 0; c < N; ++c)
    if (a[c * W + N] != 0) p.add_term(elems[c], a[c * W + N]);
  return p;
}

void write_evaluation(std::ostream& out, const TrimmedEvaluation& ev) {
  out << "evals " << ev.point_set.q << ' ' << ev.point_set.n << ' ' << ev.point_set.delta << ' '
      << ev.point_set.b << '\n';
  for (Elem v : ev.values) out << v << '\n';
}

}  // namespace fqsolve
