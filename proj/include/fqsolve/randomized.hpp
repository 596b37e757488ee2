#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fqsolve/mpoly.hpp"

namespace fqsolve {

/// Reproducible random stream identified by (seed, path). The generator is
/// std::mt19937_64 seeded through std::seed_seq from the seed and the path,
/// so child(i) is a pure function of (seed, path, i). Not thread-safe; give
/// each thread its own child.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::vector<std::uint64_t> path = {});

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }

  RngStream child(std::uint64_t i) const;

  std::uint64_t next_u64() { return engine()(); }
  /// Uniform on [0, bound), bound >= 1, by rejection.
  std::uint64_t uniform(std::uint64_t bound);
  Elem element(const Field& field) { return static_cast<Elem>(uniform(field.q())); }

 private:
  std::mt19937_64& engine();

  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
  // Seeded on first draw; streams used only to derive children never pay for it.
  std::optional<std::mt19937_64> gen_;
};

/// mu random linear combinations sum_j rho_{i,j} P_j with i.i.d. uniform
/// coefficients, drawn row by row.
std::vector<Polynomial> razborov_smolensky(const PolySystem& s, std::uint32_t mu, RngStream& rng);

/// l uniform in {0..n}, then l affine forms a.X + b with a, b uniform.
std::vector<Polynomial> valiant_vazirani(const FieldPtr& field, std::uint32_t n, RngStream& rng);

}  // namespace fqsolve
