#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "transorder/unrank.hpp"

namespace transorder {

// Exhaustive state-space oracles stop here: 8! = 40320 states.
inline constexpr int kOracleWidthLimit = 8;

namespace detail {

inline void require_same_width(const Permutation& p, const Permutation& q) {
  if (p.width() != q.width()) {
    throw error(errc::incompatible_permutations,
                "widths differ: " + std::to_string(p.width()) + " vs " +
                    std::to_string(q.width()));
  }
}

// Lehmer index within S_n, for dense table addressing (n <= kNativeWidth).
inline std::uint64_t perm_index(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::uint64_t index = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) {
      if (entries[j] < entries[i]) ++smaller_after;
    }
    index += static_cast<std::uint64_t>(smaller_after) * kFactorial64[n - 1 - i];
  }
  return index;
}

}  // namespace detail

// Minimum number of transpositions carrying p to q: width minus the number of
// cycles of the relative permutation.
inline int cayley_distance(const Permutation& p, const Permutation& q) {
  detail::require_same_width(p, q);
  const int n = p.width();
  std::vector<int> position_in_q(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    position_in_q[static_cast<std::size_t>(q.entries()[i])] = i;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = position_in_q[static_cast<std::size_t>(p.entries()[j])];
    }
  }
  return n - cycles;
}

// Literal reading of the definition: breadth-first search over the graph
// whose vertices are the n! permutations and whose edges swap two positions.
// Exists to validate cayley_distance, so it stays deliberately plain.
inline int bfs_distance(const Permutation& p, const Permutation& q) {
  detail::require_same_width(p, q);
  const int n = p.width();
  if (n > kOracleWidthLimit) {
    throw error(errc::oracle_size_exceeded,
                "bfs_distance is limited to width <= " +
                    std::to_string(kOracleWidthLimit) + ", got " +
                    std::to_string(n));
  }
  if (p == q) return 0;

  const std::uint64_t target = detail::perm_index(q.entries());
  std::vector<std::int8_t> depth(detail::kFactorial64[n], -1);
  depth[detail::perm_index(p.entries())] = 0;

  std::deque<std::pair<std::vector<int>, int>> frontier;
  frontier.emplace_back(p.entries(), 0);
  while (!frontier.empty()) {
    auto [entries, d] = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::swap(entries[i], entries[j]);
        const std::uint64_t index = detail::perm_index(entries);
        if (depth[index] < 0) {
          if (index == target) return d + 1;
          depth[index] = static_cast<std::int8_t>(d + 1);
          frontier.emplace_back(entries, d + 1);
        }
        std::swap(entries[i], entries[j]);
      }
    }
  }
  throw error(errc::invalid_argument, "bfs_distance: target unreachable");
}

struct DistanceQuery {
  Seed left;
  Seed right;
  std::optional<int> width;  // default: max of the minimal widths
};

// Distance between the permutations the two seeds unrank to. Seeds of
// different natural widths are embedded at the common width, which padding
// stability makes canonical.
inline int seed_distance(const DistanceQuery& query) {
  const int n = query.width ? *query.width
                            : std::max(minimal_width(query.left),
                                       minimal_width(query.right));
  return cayley_distance(unrank_permutation(query.left, n),
                         unrank_permutation(query.right, n));
}

inline int seed_distance(const Seed& left, const Seed& right,
                         std::optional<int> width = std::nullopt) {
  return seed_distance(DistanceQuery{left, right, width});
}

}  // namespace transorder
