#include <random>
#include <sstream>

#include "doctest.h"
#include "fqsolve/errors.hpp"
#include "fqsolve/transform.hpp"

using namespace fqsolve;

namespace {

Polynomial random_trimmed_poly(const FieldPtr& f, std::uint32_t n, std::int64_t delta, std::uint32_t b,
                               std::mt19937_64& g) {
  // Total degree <= delta, so every monomial also lies in the layout.
  Polynomial p(f, n);
  const std::uint32_t q = f->q();
  const int terms = 1 + static_cast<int>(g() % 12);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n, 0);
    std::int64_t budget = delta;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::int64_t hi = std::min<std::int64_t>(q - 1, budget);
      if (hi <= 0) break;
      m[i] = static_cast<std::uint16_t>(g() % (hi + 1));
      budget -= m[i];
    }
    std::shuffle(m.begin(), m.end(), g);
    p.add_term(m, static_cast<Elem>(g() % q));
  }
  (void)b;
  return p;
}

std::vector<Elem> naive_values(const Polynomial& p, const TrimmedPointSet& ps) {
  std::vector<Elem> out;
  for (const auto& x : enumerate_points(ps)) out.push_back(evaluate(p, x));
  return out;
}

}  // namespace

TEST_CASE("evaluation examples") {
  auto f2 = make_field(2);
  auto ev = evaluate_trimmed(Polynomial::variable(f2, 1, 0), 1, 0);
  CHECK(ev.values == std::vector<Elem>{0, 1});

  auto f3 = make_field(3);
  auto p = Polynomial::constant(f3, 2, 1) + Polynomial::variable(f3, 2, 0);
  auto ev3 = evaluate_trimmed(p, 1, 0);
  CHECK(ev3.values == std::vector<Elem>{1, 1, 2});
  CHECK(interpolate_trimmed(ev3, 1, 0) == p);

  auto zero = evaluate_trimmed(Polynomial(f3, 3), 2, 1);
  CHECK(zero.values.size() == TrimmedPointSet{3, 3, 2, 1}.size());
  for (auto v : zero.values) CHECK(v == 0);
  CHECK(interpolate_trimmed(zero, 2, 1).is_zero());

  TrimmedEvaluation c{f3, {3, 2, 2, 0}, std::vector<Elem>(6, 2)};
  CHECK(interpolate_trimmed(c, 2, 0) == Polynomial::constant(f3, 2, 2));
}

TEST_CASE("errors") {
  auto f3 = make_field(3);
  auto x = Polynomial::variable(f3, 2, 0);
  CHECK_THROWS_AS(evaluate_trimmed(x * x, 1, 0), DegreeTooHigh);
  auto ev = evaluate_trimmed(x, 1, 0);
  CHECK_THROWS_AS(interpolate_trimmed(ev, 2, 0), SizeMismatch);
  CHECK_THROWS_AS(interpolate_trimmed(ev, 1, 1), SizeMismatch);
  CHECK_THROWS_AS(evaluate_trimmed(x, 1, 3), InvalidParams);
}

TEST_CASE("layout rank matches enumeration") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t n = 0; n <= 4; ++n) {
      for (std::uint32_t b = 0; b <= n; ++b) {
        for (std::int64_t d = -1; d <= static_cast<std::int64_t>(n * (q - 1)) + 1; ++d) {
          const TrimmedLayout L(q, n, d, b);
          const auto pts = enumerate_points(L.point_set());
          CHECK(L.size() == pts.size());
          std::uint64_t seen = 0;
          L.for_each([&](const Monomial& e, std::uint64_t idx) {
            CHECK(idx == seen++);
            CHECK(L.rank(e) == idx);
            CHECK(Point(e.begin(), e.end()) == pts[idx]);
          });
          CHECK(seen == pts.size());
        }
      }
    }
  }
}

TEST_CASE("roundtrip and naive agreement") {
  std::mt19937_64 g(2024);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto f = make_field(q);
    for (int rep = 0; rep < 40; ++rep) {
      const std::uint32_t n = 1 + static_cast<std::uint32_t>(g() % 5);
      const std::int64_t dmax = std::min<std::int64_t>(8, n * (q - 1));
      const std::int64_t delta = static_cast<std::int64_t>(g() % (dmax + 1));
      const std::uint32_t b = static_cast<std::uint32_t>(g() % (n + 1));
      if (TrimmedPointSet{q, n, delta, b}.size() > 20000) continue;
      auto p = random_trimmed_poly(f, n, delta, b, g);
      for (Exec ex : {Exec::serial, Exec::parallel}) {
        auto ev = evaluate_trimmed(p, delta, b, ex);
        CHECK(ev.values == naive_values(p, ev.point_set));
        CHECK(interpolate_trimmed(ev, delta, b, ex) == p);
      }
    }
  }
}

TEST_CASE("dense solver agrees") {
  std::mt19937_64 g(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = make_field(q);
    for (int rep = 0; rep < 10; ++rep) {
      const std::uint32_t n = 1 + static_cast<std::uint32_t>(g() % 3);
      const std::int64_t delta = static_cast<std::int64_t>(g() % (n * (q - 1) + 1));
      const std::uint32_t b = static_cast<std::uint32_t>(g() % (n + 1));
      auto p = random_trimmed_poly(f, n, delta, b, g);
      auto ev = evaluate_trimmed(p, delta, b);
      CHECK(interpolate_trimmed_dense_solve(ev, delta, b) == p);
    }
  }
}

TEST_CASE("uniqueness under perturbation") {
  std::mt19937_64 g(9);
  auto f = make_field(5);
  for (int rep = 0; rep < 30; ++rep) {
    auto p = random_trimmed_poly(f, 3, 5, 0, g);
    const TrimmedLayout L(5, 3, 5, 0);
    std::vector<Monomial> mons;
    L.for_each([&](const Monomial& e, std::uint64_t) { mons.push_back(e); });
    Polynomial bump(f, 3);
    bump.add_term(mons[g() % mons.size()], 1 + static_cast<Elem>(g() % 4));
    CHECK(evaluate_trimmed(p, 5, 0).values != evaluate_trimmed(p + bump, 5, 0).values);
  }
}

TEST_CASE("evaluation beyond the trimming bound") {
  std::mt19937_64 g(1);
  auto f = make_field(3);
  for (int rep = 0; rep < 20; ++rep) {
    auto p = random_trimmed_poly(f, 4, 8, 0, g);
    for (std::int64_t delta : {0, 1, 3}) {
      for (std::uint32_t b : {0u, 2u}) {
        const TrimmedLayout dst(3, 4, delta, b);
        CHECK(evaluate_on(p, dst) == naive_values(p, dst.point_set()));
        const TrimmedLayout src(3, 4, 8, 0);
        auto coeffs = to_dense(p, src);
        CHECK(evaluate_dense_on(*f, src, coeffs, dst) == naive_values(p, dst.point_set()));
      }
    }
  }
}

TEST_CASE("serial and parallel kernels are bit-identical on large layouts") {
  std::mt19937_64 g(4);
  auto f = make_field(3);
  const TrimmedLayout L(3, 9, 7, 2);
  std::vector<Elem> data(L.size());
  for (auto& v : data) v = static_cast<Elem>(g() % 3);
  auto a = data, b = data;
  OpCounter ca, cb;
  forward_transform(*f, L, a, Exec::serial, &ca);
  forward_transform(*f, L, b, Exec::parallel, &cb);
  CHECK(a == b);
  CHECK(ca.ops.load() == cb.ops.load());
  inverse_transform(*f, L, a, Exec::parallel);
  CHECK(a == data);
}

TEST_CASE("op count grows linearly with the layout size") {
  auto f = make_field(3);
  const std::uint32_t n = 8;
  std::vector<double> xs, ys;
  for (std::int64_t delta = 2; delta <= 16; ++delta) {
    const TrimmedLayout L(3, n, delta, 0);
    std::vector<Elem> data(L.size(), 1);
    OpCounter c;
    forward_transform(*f, L, data, Exec::serial, &c);
    xs.push_back(static_cast<double>(L.size()));
    ys.push_back(static_cast<double>(c.ops.load()));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double ratio = ys[i] / xs[i];
    CHECK(ratio <= 2.0 * n * 3 * 3);
  }
}

TEST_CASE("serialization") {
  auto f2 = make_field(2);
  auto ev = evaluate_trimmed(Polynomial::variable(f2, 1, 0), 1, 0);
  std::ostringstream out;
  write_evaluation(out, ev);
  CHECK(out.str() == "evals 2 1 1 0\n0\n1\n");
}
