#pragma once

// Combinatorial maps: a connected simple graph together with a rotation
// system (cyclic neighbour order at every vertex).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nearplat {

enum class MapErrc {
  kEmpty,
  kBadVertex,
  kLoop,
  kParallelEdge,
  kInconsistentInvolution,
  kDisconnected,
  kBoundaryNotACycle,
};

inline const char* to_string(MapErrc code) {
  switch (code) {
    case MapErrc::kEmpty: return "Empty";
    case MapErrc::kBadVertex: return "BadVertex";
    case MapErrc::kLoop: return "NonSimple(loop)";
    case MapErrc::kParallelEdge: return "NonSimple(parallel edge)";
    case MapErrc::kInconsistentInvolution: return "InconsistentInvolution";
    case MapErrc::kDisconnected: return "Disconnected";
    case MapErrc::kBoundaryNotACycle: return "BoundaryNotACycle";
  }
  return "Unknown";
}

class MapError : public std::runtime_error {
 public:
  MapError(MapErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  MapErrc code() const noexcept { return code_; }

 private:
  MapErrc code_;
};

/// Darts are numbered consecutively: vertex u owns ids
/// [offset(u), offset(u) + degree(u)), in counterclockwise rotation order.
using DartId = int;

class PlanarMap {
 public:
  PlanarMap() = default;

  /// Validates simplicity, involution consistency and connectivity.
  explicit PlanarMap(std::vector<std::vector<int>> rotations) : rot_(std::move(rotations)) {
    const int n = static_cast<int>(rot_.size());
    if (n == 0) throw MapError(MapErrc::kEmpty, "map has no vertices");
    offset_.assign(n + 1, 0);
    for (int u = 0; u < n; ++u) offset_[u + 1] = offset_[u] + static_cast<int>(rot_[u].size());
    const int darts = offset_[n];
    target_.resize(darts);
    source_.resize(darts);
    reverse_.assign(darts, -1);

    for (int u = 0; u < n; ++u) {
      const auto& nbrs = rot_[u];
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const int w = nbrs[i];
        if (w < 0 || w >= n) {
          throw MapError(MapErrc::kBadVertex, "vertex " + std::to_string(u) + " lists neighbour " +
                                                  std::to_string(w));
        }
        if (w == u) throw MapError(MapErrc::kLoop, "loop at vertex " + std::to_string(u));
        for (std::size_t j = 0; j < i; ++j) {
          if (nbrs[j] == w) {
            throw MapError(MapErrc::kParallelEdge,
                           "edge " + std::to_string(u) + "-" + std::to_string(w) + " repeated");
          }
        }
        const int d = offset_[u] + static_cast<int>(i);
        target_[d] = w;
        source_[d] = u;
      }
    }
    for (int d = 0; d < darts; ++d) {
      const int u = source_[d];
      const int w = target_[d];
      const auto& back = rot_[w];
      const auto it = std::find(back.begin(), back.end(), u);
      if (it == back.end()) {
        throw MapError(MapErrc::kInconsistentInvolution, "dart " + std::to_string(u) + "->" +
                                                             std::to_string(w) + " has no reverse");
      }
      reverse_[d] = offset_[w] + static_cast<int>(it - back.begin());
    }

    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : rot_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) {
      throw MapError(MapErrc::kDisconnected,
                     std::to_string(n - reached) + " vertices unreachable from vertex 0");
    }
  }

  int vertex_count() const noexcept { return static_cast<int>(rot_.size()); }
  int dart_count() const noexcept { return offset_.empty() ? 0 : offset_.back(); }
  int edge_count() const noexcept { return dart_count() / 2; }
  int degree(int u) const { return offset_[u + 1] - offset_[u]; }

  std::span<const int> neighbors(int u) const { return rot_[u]; }
  const std::vector<std::vector<int>>& rotations() const noexcept { return rot_; }

  DartId dart(int u, int index) const { return offset_[u] + index; }
  int source(DartId d) const { return source_[d]; }
  int target(DartId d) const { return target_[d]; }
  int index_in_rotation(DartId d) const { return d - offset_[source_[d]]; }
  DartId reverse(DartId d) const { return reverse_[d]; }

  DartId rotation_next(DartId d) const {
    const int u = source_[d];
    const int i = d - offset_[u] + 1;
    return offset_[u] + (i == degree(u) ? 0 : i);
  }

  /// Face-tracing successor: after u->v comes the rotation successor of v->u.
  DartId face_next(DartId d) const { return rotation_next(reverse_[d]); }

  bool has_edge(int u, int w) const {
    const auto& nbrs = rot_[u];
    return std::find(nbrs.begin(), nbrs.end(), w) != nbrs.end();
  }

  /// The same graph with every rotation reversed.
  PlanarMap mirrored() const {
    auto rot = rot_;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    return PlanarMap(std::move(rot));
  }

  friend bool operator==(const PlanarMap& a, const PlanarMap& b) { return a.rot_ == b.rot_; }

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<int> offset_;
  std::vector<int> target_;
  std::vector<int> source_;
  std::vector<int> reverse_;
};

struct FaceWalk {
  std::vector<DartId> darts;
  std::vector<int> vertices;  // source of each dart, x0 x1 ... x_{deg-1}

  int degree() const noexcept { return static_cast<int>(darts.size()); }
};

inline std::vector<FaceWalk> trace_faces(const PlanarMap& map) {
  std::vector<FaceWalk> faces;
  std::vector<char> used(map.dart_count(), 0);
  for (DartId start = 0; start < map.dart_count(); ++start) {
    if (used[start]) continue;
    FaceWalk face;
    DartId d = start;
    do {
      used[d] = 1;
      face.darts.push_back(d);
      face.vertices.push_back(map.source(d));
      d = map.face_next(d);
    } while (d != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

inline int face_count(const PlanarMap& map) {
  int count = 0;
  std::vector<char> used(map.dart_count(), 0);
  for (DartId start = 0; start < map.dart_count(); ++start) {
    if (used[start]) continue;
    ++count;
    for (DartId d = start; !used[d]; d = map.face_next(d)) used[d] = 1;
  }
  return count;
}

/// Orientable genus (2 - v + e - f) / 2; zero exactly for spherical embeddings.
inline int genus(const PlanarMap& map) {
  return (2 - map.vertex_count() + map.edge_count() - face_count(map)) / 2;
}

inline std::vector<int> degree_sequence(const PlanarMap& map) {
  std::vector<int> degrees(map.vertex_count());
  for (int u = 0; u < map.vertex_count(); ++u) degrees[u] = map.degree(u);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

inline bool is_regular(const PlanarMap& map, int k) {
  for (int u = 0; u < map.vertex_count(); ++u) {
    if (map.degree(u) != k) return false;
  }
  return true;
}

/// Face degree -> number of faces with that degree.
using FaceVector = std::map<int, int>;

inline FaceVector face_vector(const PlanarMap& map) {
  FaceVector hist;
  for (const auto& face : trace_faces(map)) ++hist[face.degree()];
  return hist;
}

/// Edges joining two vertices of a face boundary that are not boundary edges.
inline std::vector<std::pair<int, int>> chords_of(const PlanarMap& map, const FaceWalk& face) {
  const int n = map.vertex_count();
  std::vector<int> position(n, -1);
  for (int i = 0; i < face.degree(); ++i) {
    const int x = face.vertices[i];
    if (position[x] != -1) {
      throw MapError(MapErrc::kBoundaryNotACycle,
                     "vertex " + std::to_string(x) + " repeats on the face boundary");
    }
    position[x] = i;
  }
  const int deg = face.degree();
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < deg; ++i) {
    const int x = face.vertices[i];
    for (int w : map.neighbors(x)) {
      const int j = position[w];
      if (j <= i) continue;
      const bool walk_edge = (j == i + 1) || (i == 0 && j == deg - 1);
      if (!walk_edge) chords.emplace_back(x, w);
    }
  }
  return chords;
}

/// Length of the shorter arc between positions i and j of a closed walk.
inline int boundary_distance(const FaceWalk& face, int i, int j) {
  const int deg = face.degree();
  const int forward = ((j - i) % deg + deg) % deg;
  return std::min(forward, deg - forward);
}

}  // namespace nearplat
