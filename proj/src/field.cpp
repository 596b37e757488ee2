#include "fqsolve/field.hpp"

#include <string>

#include "fqsolve/errors.hpp"

namespace fqsolve {
namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of `a` modulo the monic polynomial `m` over F_p (both constant
// term first). The result has length deg(m).
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint32_t sub = static_cast<std::uint32_t>((std::uint64_t{c} * m[j]) % p);
      a[i - dm + j] = (a[i - dm + j] + p - sub) % p;
    }
  }
  a.resize(dm, 0);
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  // Every monic divisor candidate of degree 1..deg/2.
  for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dg; ++i) count *= p;
    Coeffs g(dg + 1, 0);
    g[dg] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < dg; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      const Coeffs r = poly_mod(poly, g, p);
      bool zero = true;
      for (auto v : r) zero = zero && v == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  Coeffs poly(k + 1, 0);
  poly[k] = 1;
  // Odometer over (c_0, ..., c_{k-1}) with c_0 the most significant digit,
  // so candidates are visited in lexicographic order from the constant term.
  while (true) {
    if (poly[0] != 0 && is_irreducible(poly, p)) return poly;
    std::size_t i = k;
    while (i-- > 0) {
      if (++poly[i] < p) break;
      poly[i] = 0;
      if (i == 0) throw Error("no irreducible polynomial found");
    }
  }
}

Field::Field(std::uint32_t q) {
  const auto [p, k] = prime_power_split(q);
  if (p == 0) throw NotPrimePower("not a prime power: " + std::to_string(q));
  if (q > kMaxOrder) throw FieldTooLarge("field order exceeds 2^16: " + std::to_string(q));
  p_ = p;
  k_ = k;
  q_ = q;
  irreducible_ = smallest_irreducible(p, k);
  pow_p_.resize(k + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  neg_table_.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Elem r = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint32_t digit = (a / pow_p_[i]) % p;
      r += ((p - digit) % p) * pow_p_[i];
    }
    neg_table_[a] = r;
  }

  if (q <= kMaxTabulatedOrder) {
    add_table_.resize(std::size_t{q} * q);
    mul_table_.resize(std::size_t{q} * q);
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        add_table_[a * q + b] = add_slow(a, b);
        mul_table_[a * q + b] = mul_slow(a, b);
      }
    }
  }

  // Inverses via a primitive element: inv(g^i) = g^(q-1-i).
  inv_table_.assign(q, 0);
  if (q == 2) {
    inv_table_[1] = 1;
    return;
  }
  const auto factors = prime_factors(q - 1);
  Elem generator = 0;
  for (Elem g = 2; g < q && generator == 0; ++g) {
    bool primitive = true;
    for (auto r : factors) primitive = primitive && pow(g, (q - 1) / r) != 1;
    if (primitive) generator = g;
  }
  std::vector<Elem> powers(q - 1);
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    powers[i] = x;
    x = mul(x, generator);
  }
  for (std::uint32_t i = 0; i + 1 < q; ++i) inv_table_[powers[i]] = powers[(q - 1 - i) % (q - 1)];
}

Elem Field::add_slow(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t da = (a / pow_p_[i]) % p_;
    const std::uint32_t db = (b / pow_p_[i]) % p_;
    r += ((da + db) % p_) * pow_p_[i];
  }
  return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  Coeffs da(k_), db(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    da[i] = (a / pow_p_[i]) % p_;
    db[i] = (b / pow_p_[i]) % p_;
  }
  Coeffs prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
  }
  const Coeffs r = poly_mod(std::move(prod), irreducible_, p_);
  Elem out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) out += r[i] * pow_p_[i];
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return inv_table_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::from_integer(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FieldPtr make_field(std::uint32_t q) { return std::make_shared<const Field>(q); }

Elem fermat_power_sum(const Field& field, std::uint32_t k) {
  Elem sum = 0;
  for (Elem x = 0; x < field.q(); ++x) sum = field.add(sum, field.pow(x, k));
  return sum;
}

}  // namespace fqsolve
