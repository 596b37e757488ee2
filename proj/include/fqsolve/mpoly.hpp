#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fqsolve/field.hpp"

namespace fqsolve {

/// Exponent vector of a monomial; every entry lies in 0..q-1.
using Monomial = std::vector<std::uint16_t>;
using Point = std::vector<Elem>;

/// Maps an exponent to the representative in 0..q-1 that defines the same
/// function on F_q (x^q = x).
std::uint32_t reduce_exponent(std::uint64_t e, std::uint32_t q);

std::uint32_t total_degree(const Monomial& m);

/// Sparse multivariate polynomial over F_q. Terms are kept in a map keyed by
/// exponent vector (lexicographic, X_1 most significant); zero coefficients
/// are never stored.
class Polynomial {
 public:
  Polynomial(FieldPtr field, std::uint32_t n);

  static Polynomial constant(FieldPtr field, std::uint32_t n, Elem c);
  /// X_i, 0-based.
  static Polynomial variable(FieldPtr field, std::uint32_t n, std::uint32_t i);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint32_t n() const { return n_; }
  const std::map<Monomial, Elem>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Max total degree over stored monomials; 0 for the zero polynomial.
  std::uint32_t degree() const;
  Elem coefficient(const Monomial& m) const;

  /// Adds c * X^m. Exponents above q-1 are reduced first.
  void add_term(const Monomial& m, Elem c);

  bool operator==(const Polynomial& other) const;

 private:
  FieldPtr field_;
  std::uint32_t n_ = 0;
  std::map<Monomial, Elem> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, Elem c);
Polynomial power(const Polynomial& a, std::uint64_t e);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }

/// P(x). Throws ArityMismatch when |x| != n.
Elem evaluate(const Polynomial& p, std::span<const Elem> x);

/// Keeps the terms whose last n2 exponents all equal q-1 and drops those
/// coordinates: the result P1 over the first n - n2 variables satisfies
/// P1(x) = (q-1)^{n2} * sum_y P(x, y).
Polynomial symbolic_coefficient(const Polynomial& p, std::uint32_t n2);

/// Points x in {0..q-1}^n whose first n-b coordinates sum (over the integers)
/// to at most delta; the last b coordinates range over the full grid.
struct TrimmedPointSet {
  std::uint32_t q = 2;
  std::uint32_t n = 0;
  std::int64_t delta = 0;
  std::uint32_t b = 0;

  bool contains(std::span<const Elem> x) const;
  std::uint64_t size() const;
};

/// Canonical order: lexicographic on index vectors, x_1 most significant.
std::vector<Point> enumerate_points(const TrimmedPointSet& ps);

/// A list of polynomials over one field and one set of n variables with a
/// declared degree bound d >= 1.
struct PolySystem {
  FieldPtr field;
  std::uint32_t n = 0;
  std::vector<Polynomial> polys;
  std::uint32_t d = 1;

  /// d = max(1, max degree of polys).
  PolySystem(FieldPtr field, std::uint32_t n, std::vector<Polynomial> polys);
  PolySystem(FieldPtr field, std::uint32_t n, std::vector<Polynomial> polys, std::uint32_t d);

  std::size_t m() const { return polys.size(); }
  /// Throws ArityMismatch / DegreeTooHigh when the invariants fail.
  void validate() const;
};

/// prod_i (1 - P_i(x)^{q-1}): 1 at common roots, 0 elsewhere.
Elem eval_indicator(const PolySystem& s, std::span<const Elem> x);

// PES text format:
//   pes <q> <n> <m>
//   poly <t>            (m times)
//   <coeff> <e1> ... <en>   (t times per poly)
// '#' starts a comment line, blank lines are ignored.
PolySystem read_pes(std::istream& in);
PolySystem parse_pes(const std::string& text);
void write_pes(std::ostream& out, const PolySystem& s);
void write_pes(std::ostream& out, const Polynomial& p);

}  // namespace fqsolve
