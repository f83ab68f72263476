#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "immlab/characters.hpp"
#include "immlab/config.hpp"
#include "immlab/gadgets.hpp"
#include "immlab/immanant.hpp"
#include "immlab/matrix.hpp"
#include "immlab/partition.hpp"
#include "immlab/permanent.hpp"
#include "immlab/random.hpp"
#include "immlab/sparse_poly.hpp"

namespace immlab {

struct IdentityReport {
  std::string name;
  std::string parameters;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

inline std::string to_string(long long v) { return std::to_string(v); }

template <class T>
IdentityReport make_report(std::string name, std::string parameters, const T& lhs, const T& rhs) {
  using immlab::to_string;
  return {std::move(name), std::move(parameters), to_string(lhs), to_string(rhs), lhs == rhs};
}

// ---------------------------------------------------------------------------
// Block-diagonal immanants

/// im_λ(diag(A, B)) against Σ_{α,β} c^λ_{α,β} im_α(A) im_β(B).
inline IdentityReport check_block_formula(const Partition& lambda, const Matrix<Rational>& a,
                                          const Matrix<Rational>& b, const Caps& caps = Caps{}) {
  const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  if (p + q != lambda.size()) throw Error(Errc::size_mismatch, "dim A + dim B must equal |λ|");
  check_cap(lambda.size(), std::min(caps.immanant_n, 8), "block formula");

  const Rational lhs = immanant_direct(lambda, block_diag({a, b}), caps);
  Rational rhs = 0;
  for (const auto& alpha : partitions_of(p))
    for (const auto& beta : partitions_of(q)) {
      const long long c = lr_coefficient(lambda, alpha, beta);
      if (c != 0) rhs += Rational(c) * immanant_direct(alpha, a, caps) * immanant_direct(beta, b, caps);
    }
  return make_report("block-formula",
                     "lambda=" + lambda.to_string() + " p=" + std::to_string(p) + " q=" + std::to_string(q), lhs, rhs);
}

enum class StripProjection { row, column, skew };

inline const char* to_string(StripProjection kind) {
  switch (kind) {
    case StripProjection::row: return "row";
    case StripProjection::column: return "column";
    case StripProjection::skew: return "skew";
  }
  return "?";
}

/// Σ_μ im_μ(A) = im_λ(diag(A, H_q))         (horizontal strips)
/// Σ_ν im_ν(A) = im_λ(diag(A, E_q))         (vertical strips)
/// Σ_η (−1)^{r(λ,η)} im_η(A) = im_λ(diag(A, P_q))   (skew hooks)
inline IdentityReport check_strip_projection(const Partition& lambda, int q, const Matrix<Rational>& a,
                                             StripProjection kind, const Caps& caps = Caps{}) {
  if (q < 1) throw Error(Errc::size_out_of_range, "strip size must be positive");
  if (static_cast<int>(a.size()) + q != lambda.size()) throw Error(Errc::size_mismatch, "dim A + q must equal |λ|");
  check_cap(lambda.size(), std::min(caps.immanant_n, 8), "strip projection");

  Rational lhs = 0;
  Matrix<Rational> gadget_block;
  switch (kind) {
    case StripProjection::row:
      for (const auto& mu : horizontal_strip_removals(lambda, q)) lhs += immanant_direct(mu, a, caps);
      gadget_block = matrix_H(q);
      break;
    case StripProjection::column:
      for (const auto& nu : vertical_strip_removals(lambda, q)) lhs += immanant_direct(nu, a, caps);
      gadget_block = matrix_E(q);
      break;
    case StripProjection::skew:
      for (const auto& hook : skew_hook_removals(lambda, q)) {
        const Rational v = immanant_direct(hook.remainder, a, caps);
        lhs += hook.sign_exponent % 2 == 0 ? v : Rational(-v);
      }
      gadget_block = matrix_P(q);
      break;
  }
  const Rational rhs = immanant_direct(lambda, block_diag({a, gadget_block}), caps);
  return make_report(std::string("strip-") + to_string(kind), "lambda=" + lambda.to_string() + " q=" + std::to_string(q),
                     lhs, rhs);
}

// ---------------------------------------------------------------------------
// Littlewood's matrix

/// Z_{jm} = ζ_{j−m+1} for m ≤ j, Z_{j,j+1} = j, zero above the superdiagonal.
/// `zeta(s)` supplies the value placed for ζ_s.
template <RingElement D, class ZetaFn>
Matrix<D> littlewood_Z(int q, ZetaFn&& zeta) {
  Matrix<D> z(static_cast<std::size_t>(q));
  for (int j = 1; j <= q; ++j) {
    for (int m = 1; m <= j; ++m) z(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(m - 1)) = zeta(j - m + 1);
    if (j < q) z(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j)) = D(j);
  }
  return z;
}

/// Z with free indeterminates ζ_1, ..., ζ_q.
inline Matrix<SparsePoly> littlewood_Z(int q) {
  return littlewood_Z<SparsePoly>(q, [](int s) { return SparsePoly::variable(static_cast<unsigned>(s)); });
}

/// ζ^γ = ζ_{γ_1} ⋯ ζ_{γ_r}, times `coeff`.
inline SparsePoly zeta_power(const Partition& gamma, const Rational& coeff = Rational(1)) {
  return SparsePoly::monomial(std::span<const int>(gamma.parts()), coeff);
}

/// CF_γ(Z) = Σ_{π of type γ} f_π(Z), by direct enumeration of S_q.
inline SparsePoly cycle_format_polynomial(int q, const Partition& gamma, const Caps& caps = Caps{}) {
  if (gamma.size() != q) throw Error(Errc::size_mismatch, "|γ| must equal q");
  check_cap(q, std::min(caps.stream_n, 8), "cycle format polynomial");
  const auto z = littlewood_Z(q);
  SparsePoly total;
  for (const auto& pi : PermutationStream(q, caps))
    if (pi.cycle_type() == gamma) total += diagonal_product(z, pi);
  return total;
}

/// im_β(Z) against Σ_γ d_γ χ^γ_β ζ^γ.
inline IdentityReport check_imZ(const Partition& beta, const Caps& caps = Caps{}) {
  const int q = beta.size();
  check_cap(q, 7, "imZ identity");
  const SparsePoly lhs = immanant_direct(beta, littlewood_Z(q), caps);
  SparsePoly rhs;
  for (const auto& gamma : partitions_of(q))
    rhs += zeta_power(gamma, Rational(class_size(gamma) * Integer(character(beta, gamma))));
  return make_report("imz", "beta=" + beta.to_string(), lhs, rhs);
}

struct OrbitCount {
  Integer enumerated;
  Integer formula;
};

/// φ(j) = j_1 (j_1 + j_2) ⋯ (j_1 + ⋯ + j_r)
inline Integer phi(std::span<const int> j) {
  Integer prod = 1;
  int running = 0;
  for (int part : j) {
    running += part;
    prod *= running;
  }
  return prod;
}

/// Cycle lengths of π with the cycles ordered by increasing maximum element.
inline std::vector<int> max_ordered_cycle_lengths(const Permutation& pi) {
  std::vector<std::pair<int, int>> by_max;
  for (const auto& c : pi.cycles()) by_max.emplace_back(*std::max_element(c.begin(), c.end()), static_cast<int>(c.size()));
  std::sort(by_max.begin(), by_max.end());
  std::vector<int> lengths;
  for (auto [mx, len] : by_max) lengths.push_back(len);
  return lengths;
}

/// |O_γ(j)| by enumeration of S_q, alongside q!/φ(j).
inline OrbitCount orbit_count(const Partition& gamma, std::span<const int> j, const Caps& caps = Caps{}) {
  std::vector<int> sorted(j.begin(), j.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (sorted != gamma.parts())
    throw Error(Errc::invalid_composition, "j is not a rearrangement of γ = " + gamma.to_string());
  const int q = gamma.size();
  check_cap(q, 7, "orbit count");
  const std::vector<int> target(j.begin(), j.end());
  OrbitCount out{0, factorial(q) / phi(j)};
  for (const auto& pi : PermutationStream(q, caps))
    if (max_ordered_cycle_lengths(pi) == target) ++out.enumerated;
  return out;
}

/// Every distinct ordering of γ's parts.
inline std::vector<std::vector<int>> rearrangements(const Partition& gamma) {
  std::vector<int> cur(gamma.parts().rbegin(), gamma.parts().rend());
  std::vector<std::vector<int>> out;
  do out.push_back(cur);
  while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

/// Power sum p_i(x) = Σ_a x_a^i.
inline Rational power_sum(std::span<const Rational> x, int i) {
  Rational s = 0;
  for (const auto& v : x) {
    Rational t = 1;
    for (int e = 0; e < i; ++e) t *= v;
    s += t;
  }
  return s;
}

/// s_β(x_1..x_m) as det(x_a^{β_b + m − b}) / det(x_a^{m − b}); zero when ℓ(β) > m.
inline Rational schur_bialternant(const Partition& beta, std::span<const Rational> x) {
  const int m = static_cast<int>(x.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (x[static_cast<std::size_t>(a)] == x[static_cast<std::size_t>(b)])
        throw Error(Errc::degenerate_sample, "sample values must be distinct");
  if (beta.length() > m) return Rational(0);
  auto alternant = [&](auto exponent) {
    Matrix<Rational> v(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 1; b <= m; ++b) {
        Rational t = 1;
        for (int e = 0; e < exponent(b); ++e) t *= x[static_cast<std::size_t>(a)];
        v(static_cast<std::size_t>(a), static_cast<std::size_t>(b - 1)) = t;
      }
    return determinant(v);
  };
  return alternant([&](int b) { return beta.part(b) + m - b; }) / alternant([&](int b) { return m - b; });
}

/// im_β(Z) with ζ_i := p_i(sample) against q!·s_β(sample).
inline IdentityReport check_schur(const Partition& beta, std::span<const Rational> sample, const Caps& caps = Caps{}) {
  const int q = beta.size();
  std::vector<Rational> zetas;
  for (int i = 1; i <= q; ++i) zetas.push_back(power_sum(sample, i));
  const auto z = littlewood_Z<Rational>(q, [&](int s) { return zetas[static_cast<std::size_t>(s - 1)]; });
  const Rational rhs = Rational(factorial(q)) * schur_bialternant(beta, sample);
  const Rational lhs = immanant_direct(beta, z, caps);
  return make_report("schur", "beta=" + beta.to_string() + " m=" + std::to_string(sample.size()), lhs, rhs);
}

/// check_schur with the variable count stated explicitly; `sample` must hold m values.
inline IdentityReport schur_check(const Partition& beta, int m, std::span<const Rational> sample, const Caps& caps = Caps{}) {
  if (m < 1 || static_cast<std::size_t>(m) != sample.size())
    throw Error(Errc::size_mismatch, "expected " + std::to_string(m) + " sample values, got " + std::to_string(sample.size()));
  return check_schur(beta, sample, caps);
}

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions {
  int max_size = 6;
  std::uint64_t seed = 1;
  Caps caps{};
};

namespace detail {

inline std::vector<Partition> partitions_up_to(int max_size, int min_size = 1) {
  std::vector<Partition> out;
  for (int n = min_size; n <= max_size; ++n)
    for (auto& p : partitions_of(n)) out.push_back(std::move(p));
  return out;
}

inline std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
  return seed ^ (std::hash<std::string_view>{}(name) * 0x9E3779B97F4A7C15ull);
}

inline IdentityReport value_report(std::string name, std::string parameters, const Rational& lhs, const Rational& rhs) {
  return make_report(std::move(name), std::move(parameters), lhs, rhs);
}

inline void suite_projection(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  RationalSampler rng(suite_seed(o.seed, "projection"));
  for (const auto& lambda : partitions_up_to(o.max_size))
    for (int i = 1; i <= lambda.length(); ++i) {
      const int k = lambda.part(i) - lambda.part(i + 1);
      if (k == 0) continue;
      for (int sample = 0; sample < 5; ++sample) {
        const auto r = verify_projection(lambda, i, rng.matrix(static_cast<std::size_t>(k)), o.caps);
        out.push_back(value_report("projection",
                                   "lambda=" + lambda.to_string() + " i=" + std::to_string(i) + " sample=" + std::to_string(sample),
                                   r.imm, r.per));
      }
    }
}

inline void suite_gadget_lemma(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  for (int q = 1; q <= std::min(o.max_size, 7); ++q) {
    const auto h = matrix_H(q), e = matrix_E(q);
    for (const auto& beta : partitions_of(q)) {
      const std::string params = "q=" + std::to_string(q) + " beta=" + beta.to_string();
      out.push_back(value_report("gadget-H", params, immanant_direct(beta, h, o.caps), Rational(beta.is_row() ? 1 : 0)));
      out.push_back(value_report("gadget-E", params, immanant_direct(beta, e, o.caps), Rational(beta.is_column() ? 1 : 0)));
    }
    out.push_back(value_report("gadget-per-H", "q=" + std::to_string(q), permanent_ryser(h, o.caps), Rational(1)));
    out.push_back(value_report("gadget-det-E", "q=" + std::to_string(q), determinant(e), Rational(1)));
  }
}

inline void suite_gadget_variants(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  RationalSampler rng(suite_seed(o.seed, "gadget-variants"));
  for (int q = 1; q <= std::min(o.max_size, 7); ++q) {
    const auto h_alt = matrix_H_alt(q);
    for (const auto& beta : partitions_of(q))
      out.push_back(value_report("gadget-H-alt", "q=" + std::to_string(q) + " beta=" + beta.to_string(),
                                 immanant_direct(beta, h_alt, o.caps), Rational(beta.is_row() ? 1 : 0)));
  }
  for (int q = 1; q <= std::min(o.max_size, 6); ++q)
    for (int sample = 0; sample < 20; ++sample) {
      const auto m = rng.rank_one_unit_diagonal(static_cast<std::size_t>(q));
      for (const auto& beta : partitions_of(q))
        out.push_back(value_report("gadget-rank-one",
                                   "q=" + std::to_string(q) + " beta=" + beta.to_string() + " sample=" + std::to_string(sample),
                                   immanant_direct(beta, m, o.caps), Rational(beta.is_row() ? 1 : 0)));
    }
}

inline void suite_block_formula(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  RationalSampler rng(suite_seed(o.seed, "block-formula"));
  for (const auto& lambda : partitions_up_to(o.max_size))
    for (int p = 0; p <= lambda.size(); ++p)
      for (int sample = 0; sample < 3; ++sample) {
        auto a = rng.matrix(static_cast<std::size_t>(p));
        auto b = rng.matrix(static_cast<std::size_t>(lambda.size() - p));
        out.push_back(check_block_formula(lambda, a, b, o.caps));
      }
}

inline void suite_strip(const SuiteOptions& o, StripProjection kind, std::vector<IdentityReport>& out) {
  RationalSampler rng(suite_seed(o.seed, std::string("strip-") + to_string(kind)));
  for (const auto& lambda : partitions_up_to(o.max_size))
    for (int q = 1; q <= lambda.size(); ++q)
      out.push_back(check_strip_projection(lambda, q, rng.matrix(static_cast<std::size_t>(lambda.size() - q)), kind, o.caps));
}

inline void suite_cycle_format(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  for (const auto& gamma : partitions_up_to(std::min(o.max_size, 8)))
    out.push_back(make_report("cycle-format", "gamma=" + gamma.to_string(),
                              cycle_format_polynomial(gamma.size(), gamma, o.caps),
                              zeta_power(gamma, Rational(class_size(gamma)))));
}

inline void suite_imz(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  for (const auto& beta : partitions_up_to(std::min(o.max_size, 7))) out.push_back(check_imZ(beta, o.caps));
}

inline void suite_orbit_count(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  for (const auto& gamma : partitions_up_to(std::min(o.max_size, 7))) {
    Integer formula_sum = 0;
    for (const auto& j : rearrangements(gamma)) {
      const auto c = orbit_count(gamma, j, o.caps);
      std::string js;
      for (int x : j) js += (js.empty() ? "" : ",") + std::to_string(x);
      out.push_back(make_report("orbit-count", "gamma=" + gamma.to_string() + " j=" + js, c.enumerated, c.formula));
      formula_sum += c.formula;
    }
    out.push_back(make_report("orbit-sum", "gamma=" + gamma.to_string(), formula_sum, class_size(gamma)));
  }
}

inline void suite_schur(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  for (const auto& beta : partitions_up_to(o.max_size))
    for (int m = beta.length(); m <= std::max(4, beta.length()); ++m) {
      std::vector<Rational> sample;
      for (int a = 1; a <= m; ++a) sample.emplace_back(a);
      out.push_back(check_schur(beta, sample, o.caps));
    }
}

inline void suite_pieri(const SuiteOptions& o, std::vector<IdentityReport>& out) {
  for (const auto& lambda : partitions_up_to(o.max_size))
    for (int q = 1; q <= lambda.size(); ++q)
      for (const auto& alpha : partitions_of(lambda.size() - q)) {
        const std::string params = "lambda=" + lambda.to_string() + " alpha=" + alpha.to_string() + " q=" + std::to_string(q);
        out.push_back(make_report("pieri-row", params, lr_coefficient(lambda, alpha, Partition::row(q)),
                                  static_cast<long long>(pieri_coefficient(lambda, alpha, q, StripKind::row))));
        out.push_back(make_report("pieri-column", params, lr_coefficient(lambda, alpha, Partition::column(q)),
                                  static_cast<long long>(pieri_coefficient(lambda, alpha, q, StripKind::column))));
      }
}

}  // namespace detail

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "projection", "gadget-lemma", "gadget-variants", "block-formula", "strip-row", "strip-column",
      "strip-skew", "cycle-format", "imz",            "orbit-count",   "schur",     "pieri"};
  return names;
}

/// Runs one named identity family over every case up to `max_size`, or
/// every family for "all". Cases are enumerated in a fixed order.
inline std::vector<IdentityReport> run_identity(std::string_view name, const SuiteOptions& o) {
  std::vector<IdentityReport> out;
  if (name == "all") {
    for (const auto& n : identity_names()) {
      auto part = run_identity(n, o);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "projection") detail::suite_projection(o, out);
  else if (name == "gadget-lemma") detail::suite_gadget_lemma(o, out);
  else if (name == "gadget-variants") detail::suite_gadget_variants(o, out);
  else if (name == "block-formula") detail::suite_block_formula(o, out);
  else if (name == "strip-row") detail::suite_strip(o, StripProjection::row, out);
  else if (name == "strip-column") detail::suite_strip(o, StripProjection::column, out);
  else if (name == "strip-skew") detail::suite_strip(o, StripProjection::skew, out);
  else if (name == "cycle-format") detail::suite_cycle_format(o, out);
  else if (name == "imz") detail::suite_imz(o, out);
  else if (name == "orbit-count") detail::suite_orbit_count(o, out);
  else if (name == "schur") detail::suite_schur(o, out);
  else if (name == "pieri") detail::suite_pieri(o, out);
  else throw Error(Errc::unknown_identity, "unknown identity \"" + std::string(name) + "\"");
  return out;
}

}  // namespace immlab
