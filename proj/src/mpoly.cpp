#include "fqsolve/mpoly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fqsolve/analysis.hpp"
#include "fqsolve/errors.hpp"

namespace fqsolve {
namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw ArityMismatch("polynomials over different fields");
  if (a.n() != b.n()) throw ArityMismatch("polynomials with different arity");
}

void enumerate_rec(const TrimmedPointSet& ps, std::uint32_t i, std::int64_t budget, Point& cur,
                   std::vector<Point>& out) {
  if (i == ps.n) {
    out.push_back(cur);
    return;
  }
  const bool trimmed = i < ps.n - ps.b;
  for (Elem v = 0; v < ps.q; ++v) {
    if (trimmed && static_cast<std::int64_t>(v) > budget) break;
    cur[i] = v;
    enumerate_rec(ps, i + 1, trimmed ? budget - v : budget, cur, out);
  }
}

}  // namespace

std::uint32_t reduce_exponent(std::uint64_t e, std::uint32_t q) {
  if (e <= q - 1) return static_cast<std::uint32_t>(e);
  return static_cast<std::uint32_t>((e - 1) % (q - 1) + 1);
}

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t s = 0;
  for (auto e : m) s += e;
  return s;
}

Polynomial::Polynomial(FieldPtr field, std::uint32_t n) : field_(std::move(field)), n_(n) {}

Polynomial Polynomial::constant(FieldPtr field, std::uint32_t n, Elem c) {
  Polynomial p(std::move(field), n);
  p.add_term(Monomial(n, 0), c);
  return p;
}

Polynomial Polynomial::variable(FieldPtr field, std::uint32_t n, std::uint32_t i) {
  if (i >= n) throw ArityMismatch("variable index out of range");
  Polynomial p(std::move(field), n);
  Monomial m(n, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

Elem Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Elem c) {
  if (m.size() != n_) throw ArityMismatch("monomial arity does not match polynomial");
  if (c == 0) return;
  Monomial key = m;
  for (auto& e : key) e = static_cast<std::uint16_t>(reduce_exponent(e, field_->q()));
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::operator==(const Polynomial& other) const {
  return *field_ == *other.field_ && n_ == other.n_ && terms_ == other.terms_;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, a.field().neg(c));
  return r;
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  const Field& f = a.field();
  const std::uint32_t q = f.q();
  Polynomial r(a.field_ptr(), a.n());
  Monomial m(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::uint32_t i = 0; i < a.n(); ++i) {
        m[i] = static_cast<std::uint16_t>(reduce_exponent(std::uint64_t{ma[i]} + mb[i], q));
      }
      r.add_term(m, f.mul(ca, cb));
    }
  }
  return r;
}

Polynomial scale(const Polynomial& a, Elem c) {
  Polynomial r(a.field_ptr(), a.n());
  if (c == 0) return r;
  for (const auto& [m, v] : a.terms()) r.add_term(m, a.field().mul(v, c));
  return r;
}

Polynomial power(const Polynomial& a, std::uint64_t e) {
  Polynomial result = Polynomial::constant(a.field_ptr(), a.n(), 1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Elem evaluate(const Polynomial& p, std::span<const Elem> x) {
  if (x.size() != p.n()) throw ArityMismatch("point arity does not match polynomial");
  const Field& f = p.field();
  Elem sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Elem term = c;
    for (std::uint32_t i = 0; i < p.n() && term != 0; ++i) {
      if (m[i] != 0) term = f.mul(term, f.pow(x[i], m[i]));
    }
    sum = f.add(sum, term);
  }
  return sum;
}

Polynomial symbolic_coefficient(const Polynomial& p, std::uint32_t n2) {
  if (n2 > p.n()) throw ArityMismatch("symbolic_coefficient: n2 exceeds arity");
  const std::uint32_t n1 = p.n() - n2;
  const auto top = static_cast<std::uint16_t>(p.field().q() - 1);
  Polynomial r(p.field_ptr(), n1);
  for (const auto& [m, c] : p.terms()) {
    if (std::all_of(m.begin() + n1, m.end(), [&](auto e) { return e == top; })) {
      r.add_term(Monomial(m.begin(), m.begin() + n1), c);
    }
  }
  return r;
}

bool TrimmedPointSet::contains(std::span<const Elem> x) const {
  if (x.size() != n) return false;
  std::int64_t s = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (x[i] >= q) return false;
    if (i < n - b) s += x[i];
  }
  return s <= delta;
}

std::uint64_t TrimmedPointSet::size() const {
  std::uint64_t grid = 1;
  for (std::uint32_t i = 0; i < b; ++i) grid *= q;
  return trimmed_count(n - b, delta, q) * grid;
}

std::vector<Point> enumerate_points(const TrimmedPointSet& ps) {
  std::vector<Point> out;
  if (ps.b > ps.n) throw InvalidParams("trimmed point set: b exceeds n");
  if (ps.delta < 0) return out;
  out.reserve(ps.size());
  Point cur(ps.n, 0);
  enumerate_rec(ps, 0, ps.delta, cur, out);
  return out;
}

PolySystem::PolySystem(FieldPtr f, std::uint32_t nvars, std::vector<Polynomial> ps)
    : field(std::move(f)), n(nvars), polys(std::move(ps)) {
  d = 1;
  for (const auto& p : polys) d = std::max(d, p.degree());
  validate();
}

PolySystem::PolySystem(FieldPtr f, std::uint32_t nvars, std::vector<Polynomial> ps, std::uint32_t deg)
    : field(std::move(f)), n(nvars), polys(std::move(ps)), d(deg) {
  validate();
}

void PolySystem::validate() const {
  if (d < 1) throw InvalidParams("degree bound must be at least 1");
  for (const auto& p : polys) {
    if (p.n() != n || !(p.field() == *field)) throw ArityMismatch("polynomial does not match system");
    if (p.degree() > d) throw DegreeTooHigh("polynomial exceeds the declared degree bound");
  }
}

Elem eval_indicator(const PolySystem& s, std::span<const Elem> x) {
  const Field& f = *s.field;
  Elem prod = f.one();
  for (const auto& p : s.polys) {
    prod = f.mul(prod, f.sub(f.one(), f.pow(evaluate(p, x), f.q() - 1)));
    if (prod == 0) break;
  }
  return prod;
}

namespace {

// Reads the next non-blank, non-comment line split into tokens.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    tokens.clear();
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    return true;
  }
  return false;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     tok + "'");
  }
  return std::stoull(tok);
}

}  // namespace

PolySystem read_pes(std::istream& in) {
  std::vector<std::string> tok;
  std::size_t line_no = 0;
  if (!next_tokens(in, tok, line_no) || tok.size() != 4 || tok[0] != "pes") {
    throw ParseError("line " + std::to_string(line_no) + ": expected header 'pes <q> <n> <m>'");
  }
  const std::uint64_t q = parse_uint(tok[1], line_no);
  const std::uint64_t n = parse_uint(tok[2], line_no);
  const std::uint64_t m = parse_uint(tok[3], line_no);
  if (q > Field::kMaxOrder) throw ParseError("field order too large: " + tok[1]);
  if (n > 4096) throw ParseError("too many variables: " + tok[2]);
  FieldPtr field = make_field(static_cast<std::uint32_t>(q));
  std::vector<Polynomial> polys;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_tokens(in, tok, line_no) || tok.size() != 2 || tok[0] != "poly") {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'poly <t>'");
    }
    const std::uint64_t t = parse_uint(tok[1], line_no);
    Polynomial p(field, static_cast<std::uint32_t>(n));
    for (std::uint64_t j = 0; j < t; ++j) {
      if (!next_tokens(in, tok, line_no) || tok.size() != n + 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected '<coeff> <e1> ... <en>'");
      }
      const std::uint64_t c = parse_uint(tok[0], line_no);
      if (c == 0 || c >= q) {
        throw ParseError("line " + std::to_string(line_no) + ": coefficient must lie in 1..q-1");
      }
      Monomial mono(n);
      for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint64_t e = parse_uint(tok[k + 1], line_no);
        if (e >= q) throw ParseError("line " + std::to_string(line_no) + ": exponent must lie in 0..q-1");
        mono[k] = static_cast<std::uint16_t>(e);
      }
      if (p.coefficient(mono) != 0) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate monomial");
      }
      p.add_term(mono, static_cast<Elem>(c));
    }
    polys.push_back(std::move(p));
  }
  if (next_tokens(in, tok, line_no)) {
    throw ParseError("line " + std::to_string(line_no) + ": trailing content after last polynomial");
  }
  return PolySystem(field, static_cast<std::uint32_t>(n), std::move(polys));
}

PolySystem parse_pes(const std::string& text) {
  std::istringstream in(text);
  return read_pes(in);
}

void write_pes(std::ostream& out, const PolySystem& s) {
  out << "pes " << s.field->q() << ' ' << s.n << ' ' << s.polys.size() << '\n';
  for (const auto& p : s.polys) {
    out << "poly " << p.size() << '\n';
    for (const auto& [m, c] : p.terms()) {
      out << c;
      for (auto e : m) out << ' ' << e;
      out << '\n';
    }
  }
}

void write_pes(std::ostream& out, const Polynomial& p) {
  write_pes(out, PolySystem(p.field_ptr(), p.n(), {p}));
}

}  // namespace fqsolve
