#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "immlab/error.hpp"

namespace immlab {

/// A Young diagram λ_1 ≥ λ_2 ≥ ... ≥ λ_ℓ > 0, stored densely without
/// trailing zeros. Also used for cycle types.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw Error(Errc::malformed_partition, "parts must be positive in " + to_string());
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw Error(Errc::malformed_partition, "parts must be weakly decreasing in " + to_string());
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Sorts and drops zeros; use for cycle lengths and other unordered data.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based row access with the convention λ_{ℓ+1} = λ_{ℓ+2} = ... = 0.
  int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  bool is_row() const noexcept { return parts_.size() == 1; }
  bool is_column() const noexcept { return !parts_.empty() && parts_.front() == 1; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Accepts "4,2,1", "[4,2,1]", "" and "[]". Never re-sorts.
inline Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']')
      throw Error(Errc::malformed_partition, "unbalanced bracket in \"" + std::string(text) + "\"");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<int> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(Errc::malformed_partition, "bad token \"" + std::string(token) + "\" in \"" + std::string(text) + "\"");
    parts.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty())
      throw Error(Errc::malformed_partition, "trailing comma in \"" + std::string(text) + "\"");
  }
  return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.width()), 0);
  for (int p : lambda.parts())
    for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

struct Separation {
  int k = 0;
  std::vector<int> indices;  // 1-based rows i with λ_i − λ_{i+1} = k, ascending
};

/// The largest overhang max_i (λ_i − λ_{i+1}) and every row achieving it.
inline Separation separation(const Partition& lambda) {
  if (lambda.empty()) throw Error(Errc::empty_partition, "separation of the empty partition");
  Separation s;
  for (int i = 1; i <= lambda.length(); ++i) {
    int gap = lambda.part(i) - lambda.part(i + 1);
    if (gap > s.k) {
      s.k = gap;
      s.indices.clear();
    }
    if (gap == s.k) s.indices.push_back(i);
  }
  return s;
}

namespace detail {

inline void check_removal_size(const Partition& lambda, int q) {
  if (q < 0 || q > lambda.size())
    throw Error(Errc::size_out_of_range, "removal size " + std::to_string(q) + " outside [0, " +
                                             std::to_string(lambda.size()) + "]");
}

inline void sort_unique(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// All μ such that λ/μ is a horizontal strip of q boxes, via the interleaving
/// λ_{i+1} ≤ μ_i ≤ λ_i. Sorted in decreasing lexicographic order.
inline std::vector<Partition> horizontal_strip_removals(const Partition& lambda, int q) {
  detail::check_removal_size(lambda, q);
  std::vector<Partition> out;
  const int len = lambda.length();
  std::vector<int> mu(static_cast<std::size_t>(len), 0);

  // Fill rows from the bottom up so the remaining budget is easy to bound.
  auto rec = [&](auto&& self, int i, int removed) -> void {
    if (i == 0) {
      if (removed == q) out.push_back(Partition::from_unsorted(mu));
      return;
    }
    const int hi = lambda.part(i), lo = lambda.part(i + 1);
    for (int m = lo; m <= hi; ++m) {
      int r = removed + (hi - m);
      if (r > q) continue;
      mu[static_cast<std::size_t>(i - 1)] = m;
      self(self, i - 1, r);
    }
  };
  rec(rec, len, 0);
  detail::sort_unique(out);
  return out;
}

inline std::vector<Partition> vertical_strip_removals(const Partition& lambda, int q) {
  detail::check_removal_size(lambda, q);
  std::vector<Partition> out;
  for (const auto& mu : horizontal_strip_removals(conjugate(lambda), q)) out.push_back(conjugate(mu));
  detail::sort_unique(out);
  return out;
}

struct SkewHookRemoval {
  Partition remainder;
  int row_span = 0;
  int sign_exponent = 0;  // row_span − 1

  friend bool operator==(const SkewHookRemoval&, const SkewHookRemoval&) = default;
};

/// Removals of a connected border strip (rim hook) of q boxes. Works on the
/// beta-set {λ_j + ℓ − j}: a q-hook removal moves one bead from b to b − q
/// onto a free position, and the beads jumped over count the extra rows.
inline std::vector<SkewHookRemoval> skew_hook_removals(const Partition& lambda, int q) {
  if (q < 1 || q > lambda.size())
    throw Error(Errc::size_out_of_range, "skew-hook size " + std::to_string(q) + " outside [1, " +
                                             std::to_string(lambda.size()) + "]");
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) beta[static_cast<std::size_t>(j)] = lambda.part(j + 1) + (len - 1 - j);

  std::vector<SkewHookRemoval> out;
  for (int j = 0; j < len; ++j) {
    const int b = beta[static_cast<std::size_t>(j)];
    const int target = b - q;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int x : beta)
      if (x > target && x < b) ++jumped;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(j)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) parts[static_cast<std::size_t>(t)] = moved[static_cast<std::size_t>(t)] - (len - 1 - t);
    out.push_back({Partition::from_unsorted(std::move(parts)), jumped + 1, jumped});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.remainder > b.remainder; });
  return out;
}

enum class BlockKind { H, E };

struct BlockDescriptor {
  BlockKind kind;
  int size;

  friend bool operator==(const BlockDescriptor&, const BlockDescriptor&) = default;
};

inline std::string to_string(const BlockDescriptor& b) {
  return (b.kind == BlockKind::H ? "H_" : "E_") + std::to_string(b.size);
}

/// Peel rows 1..i−1 (one H block each, sized by the row), then the first
/// λ_{i+1} columns of λ♯ = (λ_i, ..., λ_ℓ) (one E block each, sized by the
/// column). What is left is the single row (λ_i − λ_{i+1}).
inline std::vector<BlockDescriptor> reduction_chain(const Partition& lambda, int i) {
  if (i < 1 || i > lambda.length())
    throw Error(Errc::index_out_of_range, "row index " + std::to_string(i) + " outside [1, " +
                                              std::to_string(lambda.length()) + "]");
  std::vector<BlockDescriptor> blocks;
  for (int r = 1; r < i; ++r) blocks.push_back({BlockKind::H, lambda.part(r)});
  Partition sharp(std::vector<int>(lambda.parts().begin() + (i - 1), lambda.parts().end()));
  Partition pi = conjugate(sharp);
  for (int c = 1; c <= lambda.part(i + 1); ++c) blocks.push_back({BlockKind::E, pi.part(c)});
  return blocks;
}

/// Number of standard Young tableaux, by the hook-length formula.
inline std::uint64_t syt_count(const Partition& lambda) {
  if (lambda.size() > 20) throw Error(Errc::cap_exceeded, "syt_count limited to |λ| ≤ 20");
  Partition conj = conjugate(lambda);
  // Both n! and Π hooks fit in 128 bits for n ≤ 20.
  unsigned __int128 hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c)
      hooks *= static_cast<unsigned>(lambda.part(r) - c + conj.part(c) - r + 1);
  unsigned __int128 num = 1;
  for (int m = 2; m <= lambda.size(); ++m) num *= static_cast<unsigned>(m);
  return static_cast<std::uint64_t>(num / hooks);
}

/// All partitions of n in decreasing lexicographic order: (n), (n−1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace immlab
