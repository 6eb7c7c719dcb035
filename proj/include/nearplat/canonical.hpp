#pragma once

// Canonical codes for maps up to relabelling, rotation shift and reflection.
//
// For every starting dart and both orientations the map is relabelled in
// breadth-first order: the root vertex becomes 1, and each vertex lists its
// neighbours starting from the dart it was discovered through (the root from
// the starting dart), turning in the chosen orientation; fresh neighbours get
// the next label. The code is the vertex count followed by all neighbour
// lists, each terminated by 0. The lexicographically smallest code wins.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nearplat/planar_map.hpp"

namespace nearplat {

struct CanonicalCode {
  std::vector<std::uint16_t> words;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const bool wide = !words.empty() && words.front() > 255;
    std::string out;
    out.reserve(words.size() * (wide ? 4 : 2));
    for (auto w : words) {
      if (wide) {
        out.push_back(kDigits[(w >> 12) & 15]);
        out.push_back(kDigits[(w >> 8) & 15]);
      }
      out.push_back(kDigits[(w >> 4) & 15]);
      out.push_back(kDigits[w & 15]);
    }
    return out;
  }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// Writes the BFS code rooted at `root` with orientation `dir` into `code`,
// aborting as soon as it exceeds `best` (when `best` is non-empty). Returns
// true when the produced code is strictly smaller than `best`.
inline bool bfs_code(const PlanarMap& map, DartId root, int dir, const std::vector<std::uint16_t>& best,
                     std::vector<std::uint16_t>& code, std::vector<int>& label,
                     std::vector<int>& first, std::vector<int>& order) {
  const int n = map.vertex_count();
  code.clear();
  std::fill(label.begin(), label.end(), 0);
  order.clear();

  bool undecided = !best.empty();
  auto emit = [&](std::uint16_t w) -> int {
    // -1: worse than best (abort), 0: still equal, 1: strictly better
    const std::size_t pos = code.size();
    code.push_back(w);
    if (!undecided) return 1;
    if (w < best[pos]) {
      undecided = false;
      return 1;
    }
    if (w > best[pos]) return -1;
    return 0;
  };

  if (emit(static_cast<std::uint16_t>(n)) < 0) return false;
  const int r = map.source(root);
  label[r] = 1;
  first[r] = map.index_in_rotation(root);
  order.push_back(r);
  int next_label = 2;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int u = order[head];
    const int deg = map.degree(u);
    for (int j = 0; j < deg; ++j) {
      const int idx = ((first[u] + dir * j) % deg + deg) % deg;
      const DartId d = map.dart(u, idx);
      const int w = map.target(d);
      if (label[w] == 0) {
        label[w] = next_label++;
        first[w] = map.index_in_rotation(map.reverse(d));
        order.push_back(w);
      }
      if (emit(static_cast<std::uint16_t>(label[w])) < 0) return false;
    }
    if (emit(0) < 0) return false;
  }
  return best.empty() || !undecided;
}

}  // namespace detail

inline CanonicalCode canonical_code(const PlanarMap& map) {
  const int n = map.vertex_count();
  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> code;
  std::vector<int> label(n), first(n), order;
  order.reserve(n);
  for (DartId root = 0; root < map.dart_count(); ++root) {
    for (int dir : {1, -1}) {
      if (detail::bfs_code(map, root, dir, best, code, label, first, order)) best.swap(code);
    }
  }
  if (map.dart_count() == 0) best.push_back(static_cast<std::uint16_t>(n));
  return CanonicalCode{std::move(best)};
}

/// The relabelled map a code describes (isomorphic to the source or its mirror).
inline PlanarMap map_from_code(const CanonicalCode& code) {
  const auto& w = code.words;
  if (w.empty()) throw MapError(MapErrc::kEmpty, "empty canonical code");
  std::vector<std::vector<int>> rot(w[0]);
  std::size_t pos = 1;
  for (auto& r : rot) {
    while (pos < w.size() && w[pos] != 0) r.push_back(w[pos++] - 1);
    ++pos;
  }
  return PlanarMap(std::move(rot));
}

inline bool isomorphic(const PlanarMap& a, const PlanarMap& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

}  // namespace nearplat
