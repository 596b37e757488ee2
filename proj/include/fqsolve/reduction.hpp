#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fqsolve/mpoly.hpp"
#include "fqsolve/rational.hpp"

namespace fqsolve {

/// CNF formula; literals are nonzero signed 1-based variable indices.
struct Cnf {
  std::uint32_t n_vars = 0;
  std::vector<std::vector<std::int64_t>> clauses;

  std::size_t n_clauses() const { return clauses.size(); }
  /// Maximum clause length (0 for a formula without clauses).
  std::uint32_t width() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS CNF: `c` comment lines, header `p cnf <vars> <clauses>`, clauses
/// terminated by 0 (possibly spanning lines), optional trailing `%` line.
Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs(const std::string& text);

/// Block encoding parameters. Boolean variables are grouped into blocks of
/// vars1 bits; each block is represented by vars2 field variables.
struct ReductionPlan {
  std::uint32_t q = 2;
  Rational delta;
  std::uint32_t k = 1;  // clause width, at least 1
  std::uint32_t vars1 = 0;
  std::uint32_t vars2 = 0;
  std::uint32_t blocks = 0;
  std::uint32_t bool_vars = 0;
  bool parsimonious = false;

  /// vars1 = ceil((2/delta) log2 q); vars2 = least v with q^v >= 2^vars1;
  /// blocks = ceil(n / vars1).
  static ReductionPlan make(const Cnf& cnf, std::uint32_t q, Rational delta, bool parsimonious);

  std::uint32_t output_vars() const { return blocks * vars2; }
  std::uint32_t degree_bound() const { return k * vars2 * (q - 1); }
  /// Base-q value of a block assignment, first coordinate most significant.
  std::uint64_t block_value(std::span<const Elem> y) const;
  /// Bit v1 (1-based, least significant first) of the decoded block.
  bool dec_bit(std::span<const Elem> y, std::uint32_t v1) const;
};

/// DEC_1..DEC_vars1 as polynomials in vars2 variables, by interpolation on
/// the full block grid.
std::vector<Polynomial> decoder_polynomials(const FieldPtr& field, const ReductionPlan& plan);

/// The polynomial system of the reduction. Common roots correspond to
/// satisfying assignments; one-to-one when plan.parsimonious is set.
PolySystem reduce_cnf(const Cnf& cnf, std::uint32_t q, Rational delta, bool parsimonious);

}  // namespace fqsolve
