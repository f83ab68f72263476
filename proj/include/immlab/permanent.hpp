#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "immlab/config.hpp"
#include "immlab/matrix.hpp"
#include "immlab/permutation.hpp"
#include "immlab/rational.hpp"

namespace immlab {

/// The n!-term sum Σ_π Π M_{i,π(i)}. Reference implementation; the
/// permutation stream cap applies.
template <RingElement D>
D permanent_direct(const Matrix<D>& m, const Caps& caps = Caps{}) {
  const int n = static_cast<int>(m.size());
  check_cap(n, caps.stream_n, "permanent_direct");
  D total(0);
  for (const auto& pi : PermutationStream(n, caps)) total = total + diagonal_product(m, pi);
  return total;
}

/// Arithmetic performed by permanent_ryser, informational only.
struct RyserStats {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
};

/// Ryser's inclusion–exclusion per(M) = (−1)^n Σ_S (−1)^{|S|} Π_i Σ_{j∈S} M_ij,
/// walking the subsets S in Gray-code order so each step updates the row sums
/// by one column. Rows are first cleared of denominators so the inner loop
/// runs over integers.
inline Rational permanent_ryser(const Matrix<Rational>& m, const Caps& caps = Caps{}, RyserStats* stats = nullptr) {
  const std::size_t n = m.size();
  check_cap(static_cast<int>(n), caps.ryser_n, "permanent_ryser");
  if (n == 0) return Rational(1);

  std::vector<Integer> b(n * n);
  Integer row_scale_product = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) l = lcm(l, Integer(denominator(m(r, c))));
    for (std::size_t c = 0; c < n; ++c) b[r * n + c] = numerator(m(r, c)) * (l / denominator(m(r, c)));
    row_scale_product *= l;
  }

  RyserStats local;
  std::vector<Integer> row_sums(n, Integer(0));
  Integer total = 0, prod;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const unsigned col = static_cast<unsigned>(std::countr_zero(step));
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const bool added = gray & bit;
    for (std::size_t r = 0; r < n; ++r) {
      if (added)
        row_sums[r] += b[r * n + col];
      else
        row_sums[r] -= b[r * n + col];
    }
    local.additions += n;
    prod = row_sums[0];
    for (std::size_t r = 1; r < n && prod != 0; ++r) prod *= row_sums[r];
    local.multiplications += n - 1;
    if (std::popcount(gray) % 2 == 0)
      total += prod;
    else
      total -= prod;
    ++local.additions;
  }
  if (n % 2 == 1) total = -total;
  if (stats) *stats = local;
  return Rational(total, row_scale_product);
}

/// Fraction-free (Bareiss) elimination. A zero pivot is replaced by a lower
/// row with a sign flip; a column with no nonzero pivot candidate means 0.
inline Rational determinant(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Matrix<Rational> a = m;
  Rational prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev_pivot;
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Rational(-a(n - 1, n - 1));
}

}  // namespace immlab
