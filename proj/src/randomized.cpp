#include "fqsolve/randomized.hpp"

#include <limits>

#include "fqsolve/errors.hpp"

namespace fqsolve {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, const std::vector<std::uint64_t>& path) {
  std::vector<std::uint32_t> words;
  words.reserve(2 + 2 * path.size() + 1);
  words.push_back(static_cast<std::uint32_t>(seed));
  words.push_back(static_cast<std::uint32_t>(seed >> 32));
  for (auto p : path) {
    words.push_back(static_cast<std::uint32_t>(p));
    words.push_back(static_cast<std::uint32_t>(p >> 32));
  }
  // Path length disambiguates e.g. (s, [0]) from (s, [0, 0]).
  words.push_back(static_cast<std::uint32_t>(path.size()));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::vector<std::uint64_t> path)
    : seed_(seed), path_(std::move(path)) {}

std::mt19937_64& RngStream::engine() {
  if (!gen_) gen_.emplace(make_engine(seed_, path_));
  return *gen_;
}

RngStream RngStream::child(std::uint64_t i) const {
  auto p = path_;
  p.push_back(i);
  return RngStream(seed_, std::move(p));
}

std::uint64_t RngStream::uniform(std::uint64_t bound) {
  if (bound == 0) throw InvalidParams("uniform: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine()();
  } while (x >= limit);
  return x % bound;
}

std::vector<Polynomial> razborov_smolensky(const PolySystem& s, std::uint32_t mu, RngStream& rng) {
  if (mu == 0) throw InvalidParams("razborov_smolensky: mu must be positive");
  const Field& f = *s.field;
  std::vector<Polynomial> out;
  out.reserve(mu);
  for (std::uint32_t i = 0; i < mu; ++i) {
    std::map<Monomial, Elem> acc;
    for (const auto& p : s.polys) {
      const Elem rho = rng.element(f);
      if (rho == 0) continue;
      for (const auto& [m, c] : p.terms()) {
        Elem& slot = acc[m];
        slot = f.add(slot, f.mul(rho, c));
      }
    }
    Polynomial r(s.field, s.n);
    for (const auto& [m, c] : acc)
      if (c != 0) r.add_term(m, c);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Polynomial> valiant_vazirani(const FieldPtr& field, std::uint32_t n, RngStream& rng) {
  const auto ell = static_cast<std::uint32_t>(rng.uniform(std::uint64_t{n} + 1));
  std::vector<Polynomial> out;
  out.reserve(ell);
  for (std::uint32_t k = 0; k < ell; ++k) {
    Polynomial p(field, n);
    Monomial m(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      const Elem a = rng.element(*field);
      m[i] = 1;
      p.add_term(m, a);
      m[i] = 0;
    }
    p.add_term(m, rng.element(*field));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace fqsolve
