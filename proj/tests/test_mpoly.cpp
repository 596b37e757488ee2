#include <random>
#include <sstream>

#include "doctest.h"
#include "fqsolve/errors.hpp"
#include "fqsolve/mpoly.hpp"

using namespace fqsolve;

namespace {

Polynomial random_poly(const FieldPtr& f, std::uint32_t n, std::uint32_t terms, std::mt19937_64& g) {
  Polynomial p(f, n);
  std::uniform_int_distribution<std::uint32_t> e(0, f->q() - 1), c(0, f->q() - 1);
  for (std::uint32_t t = 0; t < terms; ++t) {
    Monomial m(n);
    for (auto& x : m) x = static_cast<std::uint16_t>(e(g));
    p.add_term(m, c(g));
  }
  return p;
}

// All points of F_q^n, lexicographic.
std::vector<Point> grid(std::uint32_t q, std::uint32_t n) {
  std::vector<Point> out;
  Point x(n, 0);
  while (true) {
    out.push_back(x);
    std::int64_t i = static_cast<std::int64_t>(n) - 1;
    while (i >= 0 && x[i] == q - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

Elem raw_pow_eval(const Field& f, const Monomial& m, const Point& x, std::uint32_t scale) {
  Elem v = 1;
  for (std::size_t i = 0; i < m.size(); ++i) v = f.mul(v, f.pow(x[i], std::uint64_t{m[i]} * scale));
  return v;
}

}  // namespace

TEST_CASE("exponent reduction") {
  CHECK(reduce_exponent(0, 3) == 0);
  CHECK(reduce_exponent(2, 3) == 2);
  CHECK(reduce_exponent(3, 3) == 1);
  CHECK(reduce_exponent(4, 3) == 2);
  CHECK(reduce_exponent(5, 2) == 1);
  auto f2 = make_field(2);
  auto x = Polynomial::variable(f2, 1, 0);
  CHECK(x * x == x);
  auto f3 = make_field(3);
  Polynomial x2(f3, 1);
  x2.add_term({2}, 1);
  CHECK(x2 * x2 == x2);
}

TEST_CASE("reduction preserves the function") {
  std::mt19937_64 g(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = make_field(q);
    for (std::uint32_t n = 1; n <= 4; ++n) {
      // Unreduced monomials with exponents up to 3q, summed term by term.
      std::uniform_int_distribution<std::uint32_t> e(0, 3 * q), c(1, q - 1);
      std::vector<std::pair<std::vector<std::uint32_t>, Elem>> raw;
      Polynomial p(f, n);
      for (int t = 0; t < 6; ++t) {
        std::vector<std::uint32_t> m(n);
        Monomial red(n);
        for (std::uint32_t i = 0; i < n; ++i) {
          m[i] = e(g);
          red[i] = static_cast<std::uint16_t>(reduce_exponent(m[i], q));
        }
        const Elem cc = c(g);
        raw.emplace_back(m, cc);
        p.add_term(red, cc);
      }
      for (const auto& x : grid(q, n)) {
        Elem v = 0;
        for (const auto& [m, cc] : raw) {
          Elem t = cc;
          for (std::uint32_t i = 0; i < n; ++i) t = f->mul(t, f->pow(x[i], m[i]));
          v = f->add(v, t);
        }
        CHECK(evaluate(p, x) == v);
      }
    }
  }
}

TEST_CASE("arithmetic is pointwise") {
  std::mt19937_64 g(5);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u}) {
    auto f = make_field(q);
    const std::uint32_t n = 3;
    for (int rep = 0; rep < 10; ++rep) {
      auto a = random_poly(f, n, 5, g), b = random_poly(f, n, 5, g);
      const Elem s = static_cast<Elem>(g() % q);
      auto sum = a + b, prod = a * b, diff = a - b, sc = scale(a, s), pw = power(a, 5);
      for (const auto& x : grid(q, n)) {
        const Elem va = evaluate(a, x), vb = evaluate(b, x);
        CHECK(evaluate(sum, x) == f->add(va, vb));
        CHECK(evaluate(diff, x) == f->sub(va, vb));
        CHECK(evaluate(prod, x) == f->mul(va, vb));
        CHECK(evaluate(sc, x) == f->mul(s, va));
        CHECK(evaluate(pw, x) == f->pow(va, 5));
      }
      CHECK(a + Polynomial(f, n) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("evaluation examples and errors") {
  auto f3 = make_field(3);
  auto p = Polynomial::constant(f3, 1, 1) + Polynomial::variable(f3, 1, 0);
  CHECK(evaluate(p, Point{2}) == 0);
  auto f5 = make_field(5);
  auto xy = Polynomial::variable(f5, 2, 0) * Polynomial::variable(f5, 2, 1);
  CHECK(evaluate(xy, Point{3, 4}) == 2);
  CHECK(evaluate(Polynomial(f5, 2), Point{1, 2}) == 0);
  CHECK_THROWS_AS(evaluate(xy, Point{1}), ArityMismatch);
  CHECK_THROWS_AS(xy + Polynomial(f5, 3), ArityMismatch);
  CHECK_THROWS_AS(xy + Polynomial(f3, 2), ArityMismatch);
  CHECK(xy.degree() == 2);
  CHECK(Polynomial(f5, 2).degree() == 0);
  Polynomial z(f5, 1);
  z.add_term({1}, 0);
  CHECK(z.is_zero());
}

TEST_CASE("monomial sums over the grid") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = make_field(q);
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const auto pts = grid(q, n);
      const Elem expect_full = f->pow(f->from_integer(q - 1), n);
      for (const auto& mp : pts) {
        Monomial m(mp.begin(), mp.end());
        Elem s = 0;
        for (const auto& x : pts) s = f->add(s, raw_pow_eval(*f, m, x, 1));
        bool full = true;
        for (auto e : m) full = full && e == q - 1;
        CHECK(s == (full ? expect_full : 0));
      }
    }
  }
}

TEST_CASE("symbolic coefficient identity") {
  auto f2 = make_field(2);
  auto xy = Polynomial::variable(f2, 2, 0) * Polynomial::variable(f2, 2, 1);
  CHECK(symbolic_coefficient(xy, 1) == Polynomial::variable(f2, 1, 0));
  auto f3 = make_field(3);
  CHECK(symbolic_coefficient(Polynomial::variable(f3, 2, 0), 1).is_zero());

  std::mt19937_64 g(3);
  for (int rep = 0; rep < 100; ++rep) {
    auto p = random_poly(f3, 3, 12, g);
    for (std::uint32_t n2 = 0; n2 <= 3; ++n2) {
      auto p1 = symbolic_coefficient(p, n2);
      CHECK(p1.n() == 3 - n2);
      const Elem factor = f3->pow(f3->from_integer(2), n2);
      for (const auto& x : grid(3, 3 - n2)) {
        Elem s = 0;
        for (const auto& y : grid(3, n2)) {
          Point xy2 = x;
          xy2.insert(xy2.end(), y.begin(), y.end());
          s = f3->add(s, evaluate(p, xy2));
        }
        CHECK(evaluate(p1, x) == f3->mul(factor, s));
      }
    }
  }
}

TEST_CASE("trimmed point sets") {
  CHECK(enumerate_points({3, 2, 1, 0}) == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(enumerate_points({2, 1, 0, 1}) == std::vector<Point>{{0}, {1}});
  CHECK(enumerate_points({5, 1, 4, 0}).size() == 5);
  CHECK(enumerate_points({3, 2, -1, 0}).empty());
  CHECK(enumerate_points({3, 0, 0, 0}).size() == 1);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t n = 0; n <= 4; ++n) {
      for (std::uint32_t b = 0; b <= n; ++b) {
        for (std::int64_t d = -1; d <= static_cast<std::int64_t>(n * (q - 1)) + 1; ++d) {
          const TrimmedPointSet ps{q, n, d, b};
          const auto pts = enumerate_points(ps);
          std::vector<Point> filtered;
          for (const auto& x : grid(q, n))
            if (ps.contains(x)) filtered.push_back(x);
          CHECK(pts == filtered);
          CHECK(pts.size() == ps.size());
          for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);
        }
      }
    }
  }
}

TEST_CASE("indicator") {
  auto f2 = make_field(2);
  PolySystem s(f2, 1, {Polynomial::variable(f2, 1, 0)});
  CHECK(eval_indicator(s, Point{0}) == 1);
  CHECK(eval_indicator(s, Point{1}) == 0);
  auto f3 = make_field(3);
  auto x = Polynomial::variable(f3, 1, 0);
  PolySystem u(f3, 1, {x, x + Polynomial::constant(f3, 1, 1)});
  for (Elem v = 0; v < 3; ++v) CHECK(eval_indicator(u, Point{v}) == 0);
  PolySystem empty(f3, 2, {});
  CHECK(eval_indicator(empty, Point{1, 2}) == 1);
  CHECK(empty.d == 1);
}

TEST_CASE("system validation") {
  auto f3 = make_field(3);
  auto x = Polynomial::variable(f3, 2, 0);
  CHECK_THROWS_AS(PolySystem(f3, 2, {x * x}, 1), DegreeTooHigh);
  CHECK_THROWS_AS(PolySystem(f3, 3, {x}), ArityMismatch);
  CHECK(PolySystem(f3, 2, {x * x}).d == 2);
}

TEST_CASE("PES round trip and parse errors") {
  const std::string text =
      "# comment\n"
      "pes 3 2 2\n"
      "\n"
      "poly 2\n"
      "1 1 0\n"
      "2 0 0\n"
      "poly 1\n"
      "1 1 1\n";
  auto s = parse_pes(text);
  CHECK(s.field->q() == 3);
  CHECK(s.n == 2);
  CHECK(s.m() == 2);
  CHECK(s.d == 2);
  std::ostringstream out;
  write_pes(out, s);
  auto s2 = parse_pes(out.str());
  REQUIRE(s2.m() == 2);
  CHECK(s2.polys[0] == s.polys[0]);
  CHECK(s2.polys[1] == s.polys[1]);
  std::ostringstream out2;
  write_pes(out2, s2);
  CHECK(out.str() == out2.str());

  CHECK_THROWS_AS(parse_pes("pes 6 1 0\n"), NotPrimePower);
  CHECK_THROWS_AS(parse_pes("pes 3 1 1\npoly 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_pes("pes 3 1 1\npoly 1\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_pes("pes 3 1 1\npoly 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_pes("pes 3 1 1\npoly 2\n1 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_pes("pes 3 1 0\nextra\n"), ParseError);
  CHECK_THROWS_AS(parse_pes("pez 3 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_pes("pes 3 2 1\npoly 1\n1 1\n"), ParseError);
}
