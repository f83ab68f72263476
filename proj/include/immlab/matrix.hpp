#pragma once

#include <concepts>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "immlab/error.hpp"
#include "immlab/permutation.hpp"
#include "immlab/rational.hpp"
#include "immlab/sparse_poly.hpp"

namespace immlab {

/// The commutative-ring contract shared by every entry domain.
template <class D>
concept RingElement = std::regular<D> && std::constructible_from<D, int> && requires(D a, D b) {
  { a + b } -> std::convertible_to<D>;
  { a - b } -> std::convertible_to<D>;
  { a * b } -> std::convertible_to<D>;
  { -a } -> std::convertible_to<D>;
};

template <RingElement D>
bool is_zero(const D& x) {
  if constexpr (requires { x.is_zero(); })
    return x.is_zero();
  else
    return x == D(0);
}

/// Dense square matrix, row-major, 0-based indexing. Dimension 0 is allowed
/// and behaves as the empty matrix (permanent, determinant and the immanant
/// of the empty partition are all 1).
template <RingElement D>
class Matrix {
 public:
  using value_type = D;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, D(0)) {}

  Matrix(std::initializer_list<std::initializer_list<D>> rows) : Matrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw Error(Errc::dimension_mismatch, "matrix rows must have length n");
      std::size_t c = 0;
      for (const auto& x : row) (*this)(r, c++) = x;
      ++r;
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = D(1);
    return m;
  }

  static Matrix ones(std::size_t n) {
    Matrix m(n);
    for (auto& x : m.data_) x = D(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  D& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const D& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Left-multiplies by diag(scale): row r is scaled by scale[r].
  Matrix scale_rows(std::span<const D> scale) const {
    if (scale.size() != n_) throw Error(Errc::dimension_mismatch, "row scale has wrong length");
    Matrix out = *this;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(r, c) = scale[r] * out(r, c);
    return out;
  }

  /// Entry-wise image under f, possibly into another domain.
  template <class F>
  auto map(F&& f) const -> Matrix<std::invoke_result_t<F, const D&>> {
    Matrix<std::invoke_result_t<F, const D&>> out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<D> data_;
};

/// f_π(M) = Π_i M_{i, π(i)}
template <RingElement D>
D diagonal_product(const Matrix<D>& m, const Permutation& pi) {
  if (static_cast<std::size_t>(pi.degree()) != m.size())
    throw Error(Errc::dimension_mismatch, "permutation degree " + std::to_string(pi.degree()) +
                                              " vs matrix size " + std::to_string(m.size()));
  D prod(1);
  for (int i = 1; i <= pi.degree(); ++i) {
    prod = prod * m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(pi(i) - 1));
    if (is_zero(prod)) break;
  }
  return prod;
}

template <RingElement D>
Matrix<D> block_diag(std::span<const Matrix<D>> blocks) {
  if (blocks.empty()) throw Error(Errc::empty_block_list, "block_diag needs at least one block");
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  Matrix<D> out(n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t c = 0; c < b.size(); ++c) out(offset + r, offset + c) = b(r, c);
    offset += b.size();
  }
  return out;
}

template <RingElement D>
Matrix<D> block_diag(std::initializer_list<Matrix<D>> blocks) {
  return block_diag(std::span<const Matrix<D>>(blocks.begin(), blocks.size()));
}

template <RingElement D>
Matrix<D> block_diag(const std::vector<Matrix<D>>& blocks) {
  return block_diag(std::span<const Matrix<D>>(blocks));
}

}  // namespace immlab
