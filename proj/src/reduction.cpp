#include "fqsolve/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>

#include "fqsolve/errors.hpp"
#include "fqsolve/transform.hpp"

namespace fqsolve {
namespace {

std::uint32_t ceil_two_over_delta_log2q(std::uint32_t q, const Rational& delta) {
  // (2 den / num) * log2 q
  if ((q & (q - 1)) == 0) {
    const std::int64_t lg = std::countr_zero(q);
    const std::int64_t numer = 2 * delta.den * lg;
    return static_cast<std::uint32_t>((numer + delta.num - 1) / delta.num);
  }
  const long double v = 2.0L * delta.den / delta.num * std::log2(static_cast<long double>(q));
  return static_cast<std::uint32_t>(std::ceil(v));
}

// Values of a block polynomial on the vars2 grid -> the polynomial itself.
Polynomial interpolate_block(const FieldPtr& field, const ReductionPlan& plan, std::vector<Elem> values) {
  TrimmedEvaluation ev{field, {plan.q, plan.vars2, 0, plan.vars2}, std::move(values)};
  return interpolate_trimmed(ev, 0, plan.vars2, Exec::serial);
}

// Calls fn(y) for every y in F_q^{vars2}, lexicographic.
template <typename Fn>
void for_each_block_point(const ReductionPlan& plan, Fn&& fn) {
  Point y(plan.vars2, 0);
  while (true) {
    fn(static_cast<const Point&>(y));
    std::int64_t i = static_cast<std::int64_t>(plan.vars2) - 1;
    while (i >= 0 && y[i] == plan.q - 1) y[i--] = 0;
    if (i < 0) return;
    ++y[i];
  }
}

// Places a vars2-variate block polynomial at block b of the output.
Polynomial embed(const Polynomial& p, std::uint32_t block, const ReductionPlan& plan) {
  Polynomial out(p.field_ptr(), plan.output_vars());
  Monomial big(plan.output_vars(), 0);
  for (const auto& [m, c] : p.terms()) {
    std::copy(m.begin(), m.end(), big.begin() + block * plan.vars2);
    out.add_term(big, c);
  }
  return out;
}

}  // namespace

std::uint32_t Cnf::width() const {
  std::size_t w = 0;
  for (const auto& c : clauses) w = std::max(w, c.size());
  return static_cast<std::uint32_t>(w);
}

bool Cnf::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& c : clauses) {
    bool sat = false;
    for (auto lit : c) {
      const bool v = assignment.at(static_cast<std::size_t>(std::llabs(lit) - 1));
      if ((lit > 0) == v) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  bool header = false;
  std::int64_t declared = 0;
  std::vector<std::int64_t> current;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("dimacs line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;
    std::istringstream ls(line);
    if (line[first] == 'p') {
      if (header) fail("duplicate header");
      std::string p, fmt;
      std::int64_t nv = -1, nc = -1;
      std::string extra;
      if (!(ls >> p >> fmt >> nv >> nc) || p != "p" || fmt != "cnf" || nv < 0 || nc < 0 || (ls >> extra))
        fail("malformed header, expected 'p cnf <vars> <clauses>'");
      if (nv > 1'000'000) fail("too many variables");
      cnf.n_vars = static_cast<std::uint32_t>(nv);
      declared = nc;
      header = true;
      continue;
    }
    if (!header) fail("clause before header");
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      std::int64_t lit = 0;
      try {
        lit = std::stoll(tok, &used);
      } catch (const std::exception&) {
        fail("bad literal '" + tok + "'");
      }
      if (used != tok.size()) fail("bad literal '" + tok + "'");
      if (lit == 0) {
        if (current.empty()) fail("empty clause");
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::llabs(lit) > static_cast<std::int64_t>(cnf.n_vars)) fail("literal " + tok + " out of range");
      current.push_back(lit);
    }
  }
  if (!header) throw ParseError("dimacs: missing header");
  if (!current.empty()) throw ParseError("dimacs: last clause is missing its 0 terminator");
  if (static_cast<std::int64_t>(cnf.clauses.size()) != declared)
    throw ParseError("dimacs: header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(cnf.clauses.size()));
  return cnf;
}

Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

ReductionPlan ReductionPlan::make(const Cnf& cnf, std::uint32_t q, Rational delta, bool parsimonious) {
  if (delta.num <= 0) throw InvalidParams("delta must be positive");
  const FieldPtr f = make_field(q);  // validates q
  ReductionPlan plan;
  plan.q = q;
  plan.delta = delta;
  plan.k = std::max<std::uint32_t>(1, cnf.width());
  plan.vars1 = std::max<std::uint32_t>(1, ceil_two_over_delta_log2q(q, delta));
  if (plan.vars1 > 62) throw TooLarge("block size exceeds 62 bits");
  // Least v with q^v >= 2^vars1.
  long double reach = 1;
  const long double need = std::ldexp(1.0L, static_cast<int>(plan.vars1));
  while (reach < need) {
    reach *= q;
    ++plan.vars2;
  }
  plan.bool_vars = cnf.n_vars;
  plan.blocks = (cnf.n_vars + plan.vars1 - 1) / plan.vars1;
  plan.parsimonious = parsimonious;
  return plan;
}

std::uint64_t ReductionPlan::block_value(std::span<const Elem> y) const {
  std::uint64_t v = 0;
  for (Elem e : y) v = v * q + e;
  return v;
}

bool ReductionPlan::dec_bit(std::span<const Elem> y, std::uint32_t v1) const {
  const std::uint64_t value = block_value(y) & ((std::uint64_t{1} << vars1) - 1);
  return ((value >> (v1 - 1)) & 1u) != 0;
}

std::vector<Polynomial> decoder_polynomials(const FieldPtr& field, const ReductionPlan& plan) {
  std::vector<std::vector<Elem>> values(plan.vars1);
  for_each_block_point(plan, [&](const Point& y) {
    for (std::uint32_t v1 = 1; v1 <= plan.vars1; ++v1) values[v1 - 1].push_back(plan.dec_bit(y, v1) ? 1 : 0);
  });
  std::vector<Polynomial> out;
  for (auto& v : values) out.push_back(interpolate_block(field, plan, std::move(v)));
  return out;
}

PolySystem reduce_cnf(const Cnf& cnf, std::uint32_t q, Rational delta, bool parsimonious) {
  const ReductionPlan plan = ReductionPlan::make(cnf, q, delta, parsimonious);
  const FieldPtr field = make_field(q);
  const std::uint32_t n_out = plan.output_vars();
  std::vector<Polynomial> polys;

  // Literal polynomial composed with DEC: zero exactly when the literal holds.
  auto literal_holds = [&](std::int64_t lit, const Point& y) {
    const auto var = static_cast<std::uint32_t>(std::llabs(lit) - 1);
    return plan.dec_bit(y, var % plan.vars1 + 1) == (lit > 0);
  };

  for (const auto& clause : cnf.clauses) {
    // Group the factors Q_{i,j} by block; within a block their product is
    // interpolated directly, across blocks the variables are disjoint.
    std::map<std::uint32_t, std::vector<std::int64_t>> by_block;
    for (auto lit : clause) by_block[static_cast<std::uint32_t>(std::llabs(lit) - 1) / plan.vars1].push_back(lit);
    Polynomial p = Polynomial::constant(field, n_out, 1);
    for (const auto& [block, lits] : by_block) {
      std::vector<Elem> vals;
      for_each_block_point(plan, [&](const Point& y) {
        bool any = false;
        for (auto lit : lits) any = any || literal_holds(lit, y);
        vals.push_back(any ? 0 : 1);
      });
      p = p * embed(interpolate_block(field, plan, std::move(vals)), block, plan);
    }
    polys.push_back(std::move(p));
  }

  if (parsimonious) {
    const std::uint64_t limit = std::uint64_t{1} << plan.vars1;
    std::vector<Elem> bound;
    for_each_block_point(plan, [&](const Point& y) { bound.push_back(plan.block_value(y) >= limit ? 1 : 0); });
    const Polynomial bound_poly = interpolate_block(field, plan, bound);
    const auto dec = decoder_polynomials(field, plan);
    for (std::uint32_t b = 0; b < plan.blocks; ++b) {
      if (!bound_poly.is_zero()) polys.push_back(embed(bound_poly, b, plan));
    }
    // Padding bits of the last block are pinned to 0.
    for (std::uint32_t v = plan.bool_vars; v < plan.blocks * plan.vars1; ++v)
      polys.push_back(embed(dec[v % plan.vars1], v / plan.vars1, plan));
  }
  return PolySystem(field, n_out, std::move(polys), std::max<std::uint32_t>(1, plan.degree_bound()));
}

}  // namespace fqsolve
