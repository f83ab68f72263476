#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "immlab/config.hpp"
#include "immlab/error.hpp"
#include "immlab/partition.hpp"
#include "immlab/permutation.hpp"
#include "immlab/rational.hpp"

namespace immlab {

inline Integer factorial(int n) {
  Integer f = 1;
  for (int m = 2; m <= n; ++m) f *= m;
  return f;
}

/// d_γ = |γ|! / Π_j j^{m_j} m_j!
inline Integer class_size(const Partition& gamma) {
  std::map<int, int> mult;
  for (int p : gamma.parts()) ++mult[p];
  Integer denom = 1;
  for (auto [len, m] : mult) {
    for (int t = 0; t < m; ++t) denom *= len;
    denom *= factorial(m);
  }
  return factorial(gamma.size()) / denom;
}

/// (−1)^{|γ| − ℓ(γ)}
inline int class_sign(const Partition& gamma) { return (gamma.size() - gamma.length()) % 2 == 0 ? 1 : -1; }

namespace detail {

class CharacterMemo {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  static CharacterMemo& instance() {
    static CharacterMemo memo;
    return memo;
  }

  bool find(const Key& key, long long& value) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    value = it->second;
    return true;
  }

  void store(Key key, long long value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, long long> table_;
};

// Murnaghan–Nakayama on the suffix gamma[from..]: strip a rim hook of the
// largest remaining cycle length and recurse.
inline long long character_rec(const Partition& lambda, const std::vector<int>& gamma, std::size_t from) {
  if (from == gamma.size()) return lambda.empty() ? 1 : 0;
  CharacterMemo::Key key{lambda.parts(), std::vector<int>(gamma.begin() + static_cast<std::ptrdiff_t>(from), gamma.end())};
  long long cached = 0;
  auto& memo = CharacterMemo::instance();
  if (memo.find(key, cached)) return cached;

  long long value = 0;
  for (const auto& removal : skew_hook_removals(lambda, gamma[from])) {
    long long sub = character_rec(removal.remainder, gamma, from + 1);
    value += removal.sign_exponent % 2 == 0 ? sub : -sub;
  }
  memo.store(std::move(key), value);
  return value;
}

}  // namespace detail

/// χ_λ evaluated on the class of cycle type γ.
inline long long character(const Partition& lambda, const Partition& gamma) {
  if (lambda.size() != gamma.size())
    throw Error(Errc::size_mismatch, "|λ| = " + std::to_string(lambda.size()) + " but |γ| = " +
                                         std::to_string(gamma.size()));
  return detail::character_rec(lambda, gamma.parts(), 0);
}

/// Rows are irreducibles λ ⊢ n, columns are cycle types γ ⊢ n, both in
/// decreasing lexicographic order.
class CharacterTable {
 public:
  explicit CharacterTable(int n) : n_(n), shapes_(partitions_of(n)) {
    for (const auto& gamma : shapes_) class_sizes_.push_back(class_size(gamma));
    values_.reserve(shapes_.size() * shapes_.size());
    for (const auto& lambda : shapes_)
      for (const auto& gamma : shapes_) values_.push_back(character(lambda, gamma));
  }

  int degree() const noexcept { return n_; }
  const std::vector<Partition>& irreducibles() const noexcept { return shapes_; }
  const std::vector<Partition>& classes() const noexcept { return shapes_; }
  const std::vector<Integer>& class_sizes() const noexcept { return class_sizes_; }

  long long value(std::size_t row, std::size_t col) const { return values_[row * shapes_.size() + col]; }

  /// Σ_γ d_γ χ^γ_α χ^γ_β
  Integer inner_product(std::size_t row_a, std::size_t row_b) const {
    Integer s = 0;
    for (std::size_t c = 0; c < shapes_.size(); ++c)
      s += class_sizes_[c] * Integer(value(row_a, c)) * Integer(value(row_b, c));
    return s;
  }

 private:
  int n_;
  std::vector<Partition> shapes_;
  std::vector<Integer> class_sizes_;
  std::vector<long long> values_;
};

inline CharacterTable character_table(int n, const Caps& caps = Caps{}) {
  if (n < 1) throw Error(Errc::size_out_of_range, "character table needs n ≥ 1");
  check_cap(n, caps.table_n, "character table");
  return CharacterTable(n);
}

inline Partition merge_cycle_types(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

/// c^λ_{α,β} by Frobenius reciprocity: the multiplicity of χ_α ⊗ χ_β in the
/// restriction of χ_λ to S_p × S_q, summed class by class.
inline long long lr_coefficient(const Partition& lambda, const Partition& alpha, const Partition& beta) {
  if (alpha.size() + beta.size() != lambda.size())
    throw Error(Errc::size_mismatch, "|α| + |β| must equal |λ|");
  const int p = alpha.size(), q = beta.size();
  Integer total = 0;
  for (const auto& ga : partitions_of(p)) {
    const Integer wa = class_size(ga) * Integer(character(alpha, ga));
    if (wa == 0) continue;
    for (const auto& gb : partitions_of(q)) {
      const long long chi_b = character(beta, gb);
      if (chi_b == 0) continue;
      total += wa * class_size(gb) * Integer(chi_b) * Integer(character(lambda, merge_cycle_types(ga, gb)));
    }
  }
  const Integer order = factorial(p) * factorial(q);
  if (total % order != 0 || total < 0)
    throw Error(Errc::internal, "non-integral LR coefficient for λ=" + lambda.to_string() + ", α=" +
                                    alpha.to_string() + ", β=" + beta.to_string());
  return static_cast<long long>(total / order);
}

enum class StripKind { row, column };

/// Pieri rule from the diagram alone: c^λ_{α,(q)} (row) or c^λ_{α,(1^q)} (column).
inline int pieri_coefficient(const Partition& lambda, const Partition& alpha, int q, StripKind kind) {
  if (alpha.size() + q != lambda.size()) throw Error(Errc::size_mismatch, "|α| + q must equal |λ|");
  if (q < 1) throw Error(Errc::size_out_of_range, "q must be positive");
  const auto removals = kind == StripKind::row ? horizontal_strip_removals(lambda, q) : vertical_strip_removals(lambda, q);
  return std::find(removals.begin(), removals.end(), alpha) != removals.end() ? 1 : 0;
}

}  // namespace immlab
