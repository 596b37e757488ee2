#include "fqsolve/oracle.hpp"

#include "fqsolve/errors.hpp"

namespace fqsolve {
namespace {

std::uint64_t grid_size_checked(std::uint32_t q, std::uint32_t n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    total *= q;
    if (total > limit) throw TooLarge("grid q^n exceeds the exhaustive-search limit");
  }
  return total;
}

void decode_point(std::uint64_t code, std::uint32_t q, Point& x) {
  for (std::size_t i = x.size(); i-- > 0;) {
    x[i] = static_cast<Elem>(code % q);
    code /= q;
  }
}

// V[x][j] = x^j.
std::vector<Elem> vandermonde(const Field& f) {
  const std::uint32_t q = f.q();
  std::vector<Elem> v(std::size_t{q} * q);
  for (Elem x = 0; x < q; ++x)
    for (std::uint32_t j = 0; j < q; ++j) v[std::size_t{x} * q + j] = f.pow(x, j);
  return v;
}

// Inverse of a q x q matrix by Gauss-Jordan elimination.
std::vector<Elem> invert(const Field& f, std::vector<Elem> a) {
  const std::uint32_t q = f.q();
  std::vector<Elem> inv(std::size_t{q} * q, 0);
  for (std::uint32_t i = 0; i < q; ++i) inv[std::size_t{i} * q + i] = 1;
  for (std::uint32_t c = 0; c < q; ++c) {
    std::uint32_t piv = c;
    while (a[std::size_t{piv} * q + c] == 0) ++piv;
    for (std::uint32_t k = 0; k < q; ++k) {
      std::swap(a[std::size_t{piv} * q + k], a[std::size_t{c} * q + k]);
      std::swap(inv[std::size_t{piv} * q + k], inv[std::size_t{c} * q + k]);
    }
    const Elem s = f.inv(a[std::size_t{c} * q + c]);
    for (std::uint32_t k = 0; k < q; ++k) {
      a[std::size_t{c} * q + k] = f.mul(a[std::size_t{c} * q + k], s);
      inv[std::size_t{c} * q + k] = f.mul(inv[std::size_t{c} * q + k], s);
    }
    for (std::uint32_t r = 0; r < q; ++r) {
      const Elem factor = a[std::size_t{r} * q + c];
      if (r == c || factor == 0) continue;
      for (std::uint32_t k = 0; k < q; ++k) {
        a[std::size_t{r} * q + k] = f.sub(a[std::size_t{r} * q + k], f.mul(factor, a[std::size_t{c} * q + k]));
        inv[std::size_t{r} * q + k] = f.sub(inv[std::size_t{r} * q + k], f.mul(factor, inv[std::size_t{c} * q + k]));
      }
    }
  }
  return inv;
}

// Applies matrix M (q x q) along every axis of a q^n tensor.
void apply_per_axis(const Field& f, const std::vector<Elem>& M, std::vector<Elem>& t, std::uint32_t n) {
  const std::uint32_t q = f.q();
  std::vector<Elem> in(q), out(q);
  std::uint64_t stride = t.size();
  for (std::uint32_t a = 0; a < n; ++a) {
    stride /= q;
    for (std::uint64_t base = 0; base < t.size(); base += stride * q) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t j = 0; j < q; ++j) in[j] = t[base + off + j * stride];
        for (std::uint32_t x = 0; x < q; ++x) {
          Elem acc = 0;
          for (std::uint32_t j = 0; j < q; ++j) acc = f.add(acc, f.mul(M[std::size_t{x} * q + j], in[j]));
          out[x] = acc;
        }
        for (std::uint32_t x = 0; x < q; ++x) t[base + off + x * stride] = out[x];
      }
    }
  }
}

// Per-point evaluation with a power table, for grids too big for tensors.
Elem eval_with_table(const Field& f, const Polynomial& p, const std::vector<Elem>& pw, const Point& x) {
  const std::uint32_t q = f.q();
  Elem acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Elem t = c;
    for (std::size_t i = 0; i < m.size() && t != 0; ++i) t = f.mul(t, pw[std::size_t{x[i]} * q + m[i]]);
    acc = f.add(acc, t);
  }
  return acc;
}

constexpr std::uint64_t kTensorLimit = std::uint64_t{1} << 24;

}  // namespace

std::vector<Elem> grid_values(const Polynomial& p) {
  const Field& f = p.field();
  const std::uint64_t total = grid_size_checked(f.q(), p.n(), kTensorLimit);
  std::vector<Elem> t(total, 0);
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t idx = 0;
    for (auto e : m) idx = idx * f.q() + e;
    t[idx] = c;
  }
  apply_per_axis(f, vandermonde(f), t, p.n());
  return t;
}

RootCount count_common_roots(const PolySystem& s, Exec exec) {
  s.validate();
  const Field& f = *s.field;
  const std::uint64_t total = grid_size_checked(f.q(), s.n, kMaxOracleGrid);
  std::uint64_t hits = 0;
  if (total <= kTensorLimit) {
    std::vector<std::uint8_t> alive(total, 1);
    for (const auto& p : s.polys) {
      const auto v = grid_values(p);
      for (std::uint64_t i = 0; i < total; ++i)
        if (v[i] != 0) alive[i] = 0;
    }
    for (auto a : alive) hits += a;
  } else {
    const std::uint32_t q = f.q();
    std::vector<Elem> pw(std::size_t{q} * q);
    for (Elem x = 0; x < q; ++x)
      for (std::uint32_t e = 0; e < q; ++e) pw[std::size_t{x} * q + e] = f.pow(x, e);
#pragma omp parallel for schedule(static) reduction(+ : hits) if (use_openmp(exec))
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
      thread_local Point x;
      x.assign(s.n, 0);
      decode_point(static_cast<std::uint64_t>(code), q, x);
      bool root = true;
      for (const auto& p : s.polys)
        if (eval_with_table(f, p, pw, x) != 0) {
          root = false;
          break;
        }
      hits += root ? 1 : 0;
    }
  }
  return {BigInt(hits), s.n, f.q()};
}

Elem brute_Z(const PolySystem& s, Exec exec) {
  s.validate();
  const Field& f = *s.field;
  const std::uint64_t total = grid_size_checked(f.q(), s.n, kMaxOracleGrid);
  // The indicator is 0/1, so count the ones and embed the count.
  std::uint64_t ones = 0;
#pragma omp parallel for schedule(static) reduction(+ : ones) if (use_openmp(exec))
  for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
    thread_local Point x;
    x.assign(s.n, 0);
    decode_point(static_cast<std::uint64_t>(code), f.q(), x);
    ones += eval_indicator(s, x) == 1 ? 1 : 0;
  }
  return f.from_integer(static_cast<std::int64_t>(ones % f.p()));
}

Polynomial brute_partial_sum(const PolySystem& s, std::uint32_t beta, Exec exec) {
  if (beta > s.n) throw InvalidParams("beta exceeds the number of variables");
  s.validate();
  const Field& f = *s.field;
  const std::uint32_t q = f.q();
  grid_size_checked(q, s.n, kMaxOracleInterpolationGrid);
  const std::uint32_t outer_vars = s.n - beta;
  const std::uint64_t outer = grid_size_checked(q, outer_vars, kMaxOracleInterpolationGrid);
  const std::uint64_t inner = grid_size_checked(q, beta, kMaxOracleInterpolationGrid);

  std::vector<Elem> sums(outer, 0);
#pragma omp parallel for schedule(static) if (use_openmp(exec))
  for (std::int64_t y = 0; y < static_cast<std::int64_t>(outer); ++y) {
    Point x(s.n, 0);
    std::uint64_t ones = 0;
    for (std::uint64_t z = 0; z < inner; ++z) {
      decode_point(static_cast<std::uint64_t>(y) * inner + z, q, x);
      ones += eval_indicator(s, x) == 1 ? 1 : 0;
    }
    sums[y] = f.from_integer(static_cast<std::int64_t>(ones % f.p()));
  }

  apply_per_axis(f, invert(f, vandermonde(f)), sums, outer_vars);
  Polynomial out(s.field, outer_vars);
  Monomial m(outer_vars, 0);
  for (std::uint64_t idx = 0; idx < outer; ++idx) {
    if (sums[idx] == 0) continue;
    std::uint64_t c = idx;
    for (std::size_t i = outer_vars; i-- > 0;) {
      m[i] = static_cast<std::uint16_t>(c % q);
      c /= q;
    }
    out.add_term(m, sums[idx]);
  }
  return out;
}

}  // namespace fqsolve
