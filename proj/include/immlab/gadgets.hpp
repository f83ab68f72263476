#pragma once

#include <optional>
#include <string>
#include <vector>

#include "immlab/config.hpp"
#include "immlab/immanant.hpp"
#include "immlab/matrix.hpp"
#include "immlab/partition.hpp"
#include "immlab/permanent.hpp"
#include "immlab/rational.hpp"

namespace immlab {

/// diag(1, 1/2, ..., 1/q)
inline Matrix<Rational> matrix_D(int q) {
  Matrix<Rational> d(static_cast<std::size_t>(q));
  for (int j = 1; j <= q; ++j) d(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) = Rational(1, j);
  return d;
}

namespace detail {

inline std::vector<Rational> row_scale(int q) {
  std::vector<Rational> s;
  for (int j = 1; j <= q; ++j) s.emplace_back(1, j);
  return s;
}

// T_q with superdiagonal entries super_sign · j and (−1)^{j−m} on and below the diagonal.
inline Matrix<Rational> alternating_hessenberg(int q, int super_sign) {
  Matrix<Rational> t(static_cast<std::size_t>(q));
  for (int j = 1; j <= q; ++j) {
    for (int m = 1; m <= j; ++m)
      t(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(m - 1)) = (j - m) % 2 == 0 ? 1 : -1;
    if (j < q) t(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j)) = super_sign * j;
  }
  return t;
}

}  // namespace detail

/// D_q · (all ones): row j is constant 1/j. per = 1, every other immanant 0.
inline Matrix<Rational> matrix_H(int q) {
  return Matrix<Rational>::ones(static_cast<std::size_t>(q)).scale_rows(detail::row_scale(q));
}

/// D_q · T_q with T_{j,j+1} = j and T_{jm} = (−1)^{j−m} for m ≤ j.
/// det = 1, every other immanant 0.
inline Matrix<Rational> matrix_E(int q) {
  return detail::alternating_hessenberg(q, +1).scale_rows(detail::row_scale(q));
}

/// The H_q variant with superdiagonal −1, −2, ..., 1−q.
inline Matrix<Rational> matrix_H_alt(int q) {
  return detail::alternating_hessenberg(q, -1).scale_rows(detail::row_scale(q));
}

/// Permutation matrix of the cycle 1 → 2 → ... → q → 1, with a 1 at
/// (i, i+1 mod q) in 1-based indexing.
inline Matrix<Rational> matrix_P(int q) {
  Matrix<Rational> p(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) p(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % q)) = 1;
  return p;
}

inline Matrix<Rational> gadget(const BlockDescriptor& block) {
  return block.kind == BlockKind::H ? matrix_H(block.size) : matrix_E(block.size);
}

struct ProjectionPlan {
  Partition lambda;
  int row_index = 0;  // 1-based i
  int k = 0;          // λ_i − λ_{i+1}
  std::vector<BlockDescriptor> blocks;
};

inline ProjectionPlan plan_projection(const Partition& lambda, int i) {
  ProjectionPlan plan{lambda, i, 0, reduction_chain(lambda, i)};
  plan.k = lambda.part(i) - lambda.part(i + 1);
  if (plan.k == 0)
    throw Error(Errc::zero_gap, "λ_" + std::to_string(i) + " = λ_" + std::to_string(i + 1) + " for λ = " +
                                    lambda.to_string());
  return plan;
}

/// G = diag(A, H_{λ_1}, ..., H_{λ_{i−1}}, E_{π_1}, ..., E_{π_{λ_{i+1}}}), for
/// which im_λ(G) = per(A).
template <RingElement D>
Matrix<D> build_projection(const ProjectionPlan& plan, const Matrix<D>& a) {
  if (a.size() != static_cast<std::size_t>(plan.k))
    throw Error(Errc::dimension_mismatch, "A must be " + std::to_string(plan.k) + "×" + std::to_string(plan.k) +
                                              ", got " + std::to_string(a.size()));
  std::vector<Matrix<D>> blocks{a};
  for (const auto& b : plan.blocks)
    blocks.push_back(gadget(b).map([](const Rational& x) { return D(x); }));
  return block_diag(blocks);
}

template <RingElement D>
Matrix<D> build_projection(const Partition& lambda, int i, const Matrix<D>& a) {
  return build_projection(plan_projection(lambda, i), a);
}

/// The smallest row index achieving the separation.
inline int default_row_index(const Partition& lambda) { return separation(lambda).indices.front(); }

struct ProjectionReport {
  Partition lambda;
  int row_index = 0;
  int k = 0;
  Rational per;
  Rational imm;
  bool equal = false;
};

inline ProjectionReport verify_projection(const Partition& lambda, std::optional<int> i, const Matrix<Rational>& a,
                                          const Caps& caps = Caps{}) {
  check_cap(lambda.size(), caps.immanant_n, "verify_projection");
  const int row = i ? *i : default_row_index(lambda);
  const auto plan = plan_projection(lambda, row);
  const auto g = build_projection(plan, a);
  ProjectionReport report{lambda, row, plan.k, permanent_ryser(a, caps), immanant_direct(lambda, g, caps), false};
  report.equal = report.per == report.imm;
  return report;
}

}  // namespace immlab
