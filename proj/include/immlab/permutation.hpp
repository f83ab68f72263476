#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "immlab/config.hpp"
#include "immlab/error.hpp"
#include "immlab/partition.hpp"

namespace immlab {

/// A bijection of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
      if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x)])
        throw Error(Errc::invalid_permutation, "not a bijection of {1.." + std::to_string(degree()) + "}");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// π(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  /// Disjoint cycles, each listed from its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<int> cyc;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  Partition cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    return Partition::from_unsorted(std::move(lengths));
  }

  /// (−1)^{n − #cycles}
  int sign() const { return (degree() - static_cast<int>(cycles().size())) % 2 == 0 ? 1 : -1; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Every permutation of {1..n} exactly once, in lexicographic order of the
/// one-line form.
class PermutationStream {
 public:
  explicit PermutationStream(int n, const Caps& caps = Caps{}) : n_(n) {
    if (n < 0) throw Error(Errc::size_out_of_range, "negative degree");
    check_cap(n, caps.stream_n, "permutation stream");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    explicit iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      auto v = current_.images();
      if (std::next_permutation(v.begin(), v.end()))
        current_ = Permutation(std::move(v));
      else
        done_ = true;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

inline PermutationStream permutations(int n, const Caps& caps = Caps{}) { return PermutationStream(n, caps); }

namespace detail {

/// Packs a cycle type of degree ≤ 15 into a 64-bit key: four bits per
/// multiplicity m_1, m_2, .... Used on hot paths instead of a Partition.
inline std::uint64_t cycle_type_key(const int* images, int n, std::uint32_t& scratch_seen) {
  std::uint64_t key = 0;
  scratch_seen = 0;
  for (int s = 0; s < n; ++s) {
    if (scratch_seen & (1u << s)) continue;
    int len = 0;
    for (int x = s; !(scratch_seen & (1u << x)); x = images[x]) {
      scratch_seen |= 1u << x;
      ++len;
    }
    key += std::uint64_t{1} << (4 * (len - 1));
  }
  return key;
}

inline std::uint64_t cycle_type_key(const Partition& gamma) {
  std::uint64_t key = 0;
  for (int p : gamma.parts()) key += std::uint64_t{1} << (4 * (p - 1));
  return key;
}

}  // namespace detail

}  // namespace immlab
