#pragma once

#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <unordered_map>
#include <vector>

#include "immlab/characters.hpp"
#include "immlab/config.hpp"
#include "immlab/matrix.hpp"
#include "immlab/partition.hpp"

namespace immlab {

struct ImmanantOptions {
  int threads = 1;  // worker count for the chunked sum; 1 runs inline
};

namespace detail {

template <RingElement D>
using ClassSums = std::unordered_map<std::uint64_t, D>;

// Depth-first walk over partial permutations that only follows nonzero
// entries. Rows [0, row) are assigned; products accumulate per cycle type.
template <RingElement D>
void accumulate_class_sums(const Matrix<D>& m, const std::vector<std::uint32_t>& support, int row,
                           std::uint32_t used, std::vector<int>& images, std::vector<D>& prefix, ClassSums<D>& out) {
  const int n = static_cast<int>(m.size());
  if (row == n) {
    std::uint32_t seen = 0;
    const std::uint64_t key = cycle_type_key(images.data(), n, seen);
    auto [it, inserted] = out.try_emplace(key, prefix[static_cast<std::size_t>(n)]);
    if (!inserted) it->second = it->second + prefix[static_cast<std::size_t>(n)];
    return;
  }
  std::uint32_t free_cols = support[static_cast<std::size_t>(row)] & ~used;
  while (free_cols) {
    const int col = std::countr_zero(free_cols);
    free_cols &= free_cols - 1;
    images[static_cast<std::size_t>(row)] = col;
    prefix[static_cast<std::size_t>(row + 1)] =
        prefix[static_cast<std::size_t>(row)] * m(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
    accumulate_class_sums(m, support, row + 1, used | (1u << col), images, prefix, out);
  }
}

}  // namespace detail

/// Σ_{π ∈ O_γ} f_π(M) for every cycle type γ with a nonzero sum, keyed by the
/// packed cycle type. The iteration space is split by the image of the first
/// row; chunks may run concurrently and are merged in a fixed order.
template <RingElement D>
detail::ClassSums<D> class_sums(const Matrix<D>& m, const ImmanantOptions& opts = {}) {
  const int n = static_cast<int>(m.size());
  detail::ClassSums<D> merged;
  if (n == 0) {
    merged.emplace(0, D(1));
    return merged;
  }
  std::vector<std::uint32_t> support(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!is_zero(m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))) support[static_cast<std::size_t>(r)] |= 1u << c;

  auto run_chunk = [&](int first_col) {
    detail::ClassSums<D> part;
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::vector<D> prefix(static_cast<std::size_t>(n + 1), D(1));
    images[0] = first_col;
    prefix[1] = m(0, static_cast<std::size_t>(first_col));
    detail::accumulate_class_sums(m, support, 1, 1u << first_col, images, prefix, part);
    return part;
  };

  std::vector<int> chunks;
  for (int c = 0; c < n; ++c)
    if (support[0] & (1u << c)) chunks.push_back(c);

  std::vector<detail::ClassSums<D>> parts(chunks.size());
  if (opts.threads <= 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) parts[i] = run_chunk(chunks[i]);
  } else {
    const std::size_t workers = static_cast<std::size_t>(opts.threads);
    for (std::size_t base = 0; base < chunks.size(); base += workers) {
      std::vector<std::future<detail::ClassSums<D>>> futs;
      for (std::size_t i = base; i < std::min(chunks.size(), base + workers); ++i)
        futs.push_back(std::async(std::launch::async, run_chunk, chunks[i]));
      for (std::size_t i = 0; i < futs.size(); ++i) parts[base + i] = futs[i].get();
    }
  }
  for (auto& part : parts)
    for (auto& [key, value] : part) {
      auto [it, inserted] = merged.try_emplace(key, value);
      if (!inserted) it->second = it->second + value;
    }
  return merged;
}

/// im_λ(M) = Σ_π χ_λ(π) f_π(M). Products are formed per permutation (only
/// along nonzero entries); χ_λ is evaluated once per cycle type.
template <RingElement D>
D immanant_direct(const Partition& lambda, const Matrix<D>& m, const Caps& caps = Caps{},
                  const ImmanantOptions& opts = {}) {
  if (static_cast<std::size_t>(lambda.size()) != m.size())
    throw Error(Errc::size_mismatch, "|λ| = " + std::to_string(lambda.size()) + " but matrix is " +
                                         std::to_string(m.size()) + "×" + std::to_string(m.size()));
  caps.validate();
  check_cap(lambda.size(), caps.immanant_n, "immanant");

  std::unordered_map<std::uint64_t, Partition> types;
  for (const auto& gamma : partitions_of(lambda.size())) types.emplace(detail::cycle_type_key(gamma), gamma);

  D total(0);
  const auto sums = class_sums(m, opts);
  // Sum in a fixed class order so the result never depends on hashing.
  std::map<Partition, const D*> ordered;
  for (const auto& [key, value] : sums) ordered.emplace(types.at(key), &value);
  for (const auto& [gamma, value] : ordered) {
    const long long chi = character(lambda, gamma);
    if (chi != 0) total = total + D(static_cast<int>(chi)) * *value;
  }
  return total;
}

}  // namespace immlab
