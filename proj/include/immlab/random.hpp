#pragma once

#include <cstdint>
#include <random>

#include "immlab/matrix.hpp"
#include "immlab/rational.hpp"

namespace immlab {

/// Deterministic source of small rational samples. Numerators lie in
/// [-9, 9] and denominators in [1, 6].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    const int p = num(engine_);
    return Rational(p, den(engine_));
  }

  Rational next_nonzero() {
    Rational x = next();
    while (x == 0) x = next();
    return x;
  }

  Matrix<Rational> matrix(std::size_t n) {
    Matrix<Rational> m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = next();
    return m;
  }

  /// u·vᵀ with nonzero u, v, then row 0 rescaled so Π_i M_ii = 1/n!.
  Matrix<Rational> rank_one_unit_diagonal(std::size_t n) {
    std::vector<Rational> u, v;
    for (std::size_t i = 0; i < n; ++i) {
      u.push_back(next_nonzero());
      v.push_back(next_nonzero());
    }
    Rational diag = 1, nfact = 1;
    for (std::size_t i = 0; i < n; ++i) {
      diag *= u[i] * v[i];
      nfact *= static_cast<int>(i + 1);
    }
    if (n > 0) u[0] /= diag * nfact;
    Matrix<Rational> m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = u[r] * v[c];
    return m;
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace immlab
