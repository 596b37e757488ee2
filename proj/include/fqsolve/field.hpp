#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace fqsolve {

// A field element is its canonical index 0..q-1: the base-p digits of the
// index (little-endian) are the coordinates in the polynomial basis.
// Index 0 is the additive identity, index 1 the multiplicative one.
using Elem = std::uint32_t;

/// Exact arithmetic in GF(p^k), q = p^k <= 2^16.
///
/// The defining polynomial is the lexicographically smallest monic
/// irreducible of degree k over F_p, with coefficients compared from the
/// constant term upward. For q <= 256 addition and multiplication are full
/// q x q lookup tables; above that they are computed by polynomial
/// arithmetic modulo the defining polynomial. Negation and inversion are
/// always tabulated. A Field is immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kMaxTabulatedOrder = 256;

  explicit Field(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients of the defining polynomial, constant term first, monic,
  /// length k+1. For k = 1 this is the degenerate X.
  const std::vector<std::uint32_t>& irreducible() const { return irreducible_; }
  bool tabulated() const { return !mul_table_.empty(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_table_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
  }
  /// Throws DivisionByZero on inv(0).
  Elem inv(Elem a) const;
  /// Throws DivisionByZero when b == 0.
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e with 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const;

  /// The element v * 1 (reduction of the integer v into the prime field).
  Elem from_integer(std::int64_t v) const;

  bool operator==(const Field& other) const { return q_ == other.q_; }

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> irreducible_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i = 0..k
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(q). Throws NotPrimePower if q is not a prime power and
/// FieldTooLarge if q exceeds Field::kMaxOrder.
FieldPtr make_field(std::uint32_t q);

/// Splits q = p^k. Returns {0, 0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q);

/// Sum over all x in F_q of x^k, by direct summation. 0 <= k <= q-1.
Elem fermat_power_sum(const Field& field, std::uint32_t k);

/// Lexicographically smallest monic irreducible of degree k over F_p
/// (constant term compared first). Exposed for tests.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k);

/// True iff the monic polynomial (constant term first) has no factor of
/// degree 1..deg/2 over F_p, by exhaustive trial division.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace fqsolve
