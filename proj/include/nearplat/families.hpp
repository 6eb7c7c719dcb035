#pragma once

// Platonic maps and the fifteen two-disparate-face families.
//
// Every family except the cycle is a d-fold cyclic gluing of a fundamental
// unit drawn in a periodic strip (see strip.hpp). The two disparate faces are
// the regions above and below the strip.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nearplat/counting.hpp"
#include "nearplat/planar_map.hpp"
#include "nearplat/strip.hpp"

namespace nearplat {

// ---------------------------------------------------------------------------
// Platonic maps

enum class PlatonicId { kTetrahedron, kCube, kOctahedron, kDodecahedron, kIcosahedron };

inline constexpr std::array<PlatonicId, 5> kAllPlatonic = {
    PlatonicId::kTetrahedron, PlatonicId::kCube, PlatonicId::kOctahedron, PlatonicId::kDodecahedron,
    PlatonicId::kIcosahedron};

struct PlatonicInfo {
  PlatonicId id;
  const char* name;
  int k;
  int d2;
};

inline const PlatonicInfo& platonic_info(PlatonicId id) {
  static const std::array<PlatonicInfo, 5> table = {{
      {PlatonicId::kTetrahedron, "tetrahedron", 3, 3},
      {PlatonicId::kCube, "cube", 3, 4},
      {PlatonicId::kOctahedron, "octahedron", 4, 3},
      {PlatonicId::kDodecahedron, "dodecahedron", 3, 5},
      {PlatonicId::kIcosahedron, "icosahedron", 5, 3},
  }};
  return table[static_cast<std::size_t>(id)];
}

namespace detail {

struct Vec3 {
  double x, y, z;
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

inline std::vector<Vec3> platonic_coordinates(PlatonicId id) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec3> pts;
  switch (id) {
    case PlatonicId::kTetrahedron:
      pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case PlatonicId::kCube:
      for (int s = 0; s < 8; ++s) pts.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0});
      break;
    case PlatonicId::kOctahedron:
      pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case PlatonicId::kDodecahedron:
      for (int s = 0; s < 8; ++s) pts.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0});
      for (int s = 0; s < 4; ++s) {
        const double a = (s & 1 ? 1 : -1) / phi;
        const double b = (s & 2 ? 1 : -1) * phi;
        pts.push_back({0, a, b});
        pts.push_back({a, b, 0});
        pts.push_back({b, 0, a});
      }
      break;
    case PlatonicId::kIcosahedron:
      for (int s = 0; s < 4; ++s) {
        const double a = s & 1 ? 1 : -1;
        const double b = (s & 2 ? 1 : -1) * phi;
        pts.push_back({0, a, b});
        pts.push_back({a, b, 0});
        pts.push_back({b, 0, a});
      }
      break;
  }
  return pts;
}

}  // namespace detail

/// Skeleton of the convex solid: edges join nearest vertex pairs, rotations
/// are counterclockwise as seen from outside.
inline PlanarMap generate_platonic(PlatonicId id) {
  using detail::Vec3;
  const auto pts = detail::platonic_coordinates(id);
  const int n = static_cast<int>(pts.size());
  double shortest = 1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) shortest = std::min(shortest, (pts[i] - pts[j]).norm());
  }
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 normal = pts[i];
    std::vector<std::pair<double, int>> around;
    Vec3 ref{0, 0, 0};
    for (int j = 0; j < n; ++j) {
      if (j == i || (pts[i] - pts[j]).norm() > shortest * (1 + 1e-9)) continue;
      Vec3 t = pts[j] - pts[i];
      const double h = t.dot(normal) / normal.dot(normal);
      t = {t.x - h * normal.x, t.y - h * normal.y, t.z - h * normal.z};
      if (around.empty()) ref = t;
      const Vec3 c = ref.cross(t);
      around.emplace_back(std::atan2(c.dot(normal) / normal.norm(), ref.dot(t)), j);
    }
    std::sort(around.begin(), around.end());
    for (const auto& [angle, j] : around) rot[i].push_back(j);
  }
  return PlanarMap(std::move(rot));
}

// ---------------------------------------------------------------------------
// Families

enum class FamilyId {
  kCycle,
  kTetraThinCycle,
  kPrism,
  kCubeThinCycle,
  kAntiprism,
  kOctaThinCycle,
  kOctaVertexCycle,
  kTruncatedTrapezohedron,
  kDodecaThinCycle,
  kDodecaThickCycle,
  kIcosaThinCycle,
  kIcosaVertexCycle,
  kIcosaThickCycle,
  kIcosaFarVertexCycle,
  kIcosaOppositeCycle,
};

inline constexpr std::array<FamilyId, 15> kAllFamilies = {
    FamilyId::kCycle,           FamilyId::kTetraThinCycle,   FamilyId::kPrism,
    FamilyId::kCubeThinCycle,   FamilyId::kAntiprism,        FamilyId::kOctaThinCycle,
    FamilyId::kOctaVertexCycle, FamilyId::kTruncatedTrapezohedron, FamilyId::kDodecaThinCycle,
    FamilyId::kDodecaThickCycle, FamilyId::kIcosaThinCycle,  FamilyId::kIcosaVertexCycle,
    FamilyId::kIcosaThickCycle, FamilyId::kIcosaFarVertexCycle, FamilyId::kIcosaOppositeCycle};

struct FamilyInfo {
  FamilyId id;
  const char* name;
  int k;
  int d2;         // common face degree (0 for the cycle, which has no others)
  int d_min;
  int multiplier; // disparate degree = multiplier * d
  bool printed;   // face vector printed with the family; otherwise fitted from tracing
  std::optional<PlatonicId> platonic;  // solid the family collapses to when degree == d2
  bool faces_share_edge;    // the two disparate faces border a common edge
  bool faces_share_vertex;  // ... or at least a common vertex
};

inline const FamilyInfo& family_info(FamilyId id) {
  using P = PlatonicId;
  static const std::array<FamilyInfo, 15> table = {{
      {FamilyId::kCycle, "cycle", 2, 0, 3, 1, true, std::nullopt, true, true},
      {FamilyId::kTetraThinCycle, "tetra-thin-cycle", 3, 3, 2, 3, true, P::kTetrahedron, true, true},
      {FamilyId::kPrism, "prism", 3, 4, 3, 1, true, P::kCube, false, false},
      {FamilyId::kCubeThinCycle, "cube-thin-cycle", 3, 4, 2, 4, false, P::kCube, true, true},
      {FamilyId::kAntiprism, "antiprism", 4, 3, 3, 1, true, P::kOctahedron, false, false},
      {FamilyId::kOctaThinCycle, "octa-thin-cycle", 4, 3, 2, 3, false, P::kOctahedron, true, true},
      {FamilyId::kOctaVertexCycle, "octa-vertex-cycle", 4, 3, 2, 3, true, P::kOctahedron, false, true},
      {FamilyId::kTruncatedTrapezohedron, "truncated-trapezohedron", 3, 5, 3, 1, true, P::kDodecahedron,
       false, false},
      {FamilyId::kDodecaThinCycle, "dodeca-thin-cycle", 3, 5, 2, 5, false, P::kDodecahedron, true, true},
      {FamilyId::kDodecaThickCycle, "dodeca-thick-cycle", 3, 5, 2, 5, false, P::kDodecahedron, false,
       false},
      {FamilyId::kIcosaThinCycle, "icosa-thin-cycle", 5, 3, 2, 3, false, P::kIcosahedron, true, true},
      {FamilyId::kIcosaVertexCycle, "icosa-vertex-cycle", 5, 3, 2, 3, false, P::kIcosahedron, false, true},
      {FamilyId::kIcosaThickCycle, "icosa-thick-cycle", 5, 3, 2, 3, true, P::kIcosahedron, false, false},
      {FamilyId::kIcosaFarVertexCycle, "icosa-far-vertex-cycle", 5, 3, 2, 3, false, P::kIcosahedron,
       false, false},
      {FamilyId::kIcosaOppositeCycle, "icosa-opposite-cycle", 5, 3, 3, 1, false, P::kIcosahedron, false,
       false},
  }};
  return table[static_cast<std::size_t>(id)];
}

namespace detail {

inline std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '_' || c == ' ') c = '-';
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace detail

inline std::optional<FamilyId> family_from_name(std::string_view name) {
  const auto key = detail::normalize_name(name);
  for (auto id : kAllFamilies) {
    if (key == family_info(id).name) return id;
  }
  return std::nullopt;
}

inline std::optional<PlatonicId> platonic_from_name(std::string_view name) {
  const auto key = detail::normalize_name(name);
  for (auto id : kAllPlatonic) {
    if (key == platonic_info(id).name) return id;
  }
  return std::nullopt;
}

inline int disparate_degree(FamilyId id, int d) { return family_info(id).multiplier * d; }

namespace detail {

// Unit drawings. Edge lists name vertices by index into the vertex list.
inline StripUnit family_unit(FamilyId id) {
  StripUnit u;
  switch (id) {
    case FamilyId::kCycle:
      break;

    case FamilyId::kTetraThinCycle:
      // K4 minus one edge; the missing edge becomes the link to the next unit.
      u.width = 1.5;
      u.vertices = {{0, 0}, {0.5, 0.5}, {1, 0}, {0.5, -0.5}};
      u.edges = {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}, {3, 1, 0}, {2, 0, 1}};
      break;

    case FamilyId::kPrism:
      u.width = 1;
      u.vertices = {{0, 0}, {0, 1}};
      u.edges = {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
      break;

    case FamilyId::kCubeThinCycle:
      u.width = 3;
      u.vertices = {{0, 0},    {0.5, 0.5}, {2, 0.5}, {2.5, 0},
                    {2, -0.5}, {0.5, -0.5}, {1, 0},   {1.5, 0}};
      u.edges = {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 0, 0},
                 {5, 6, 0}, {6, 1, 0}, {6, 7, 0}, {4, 7, 0}, {7, 2, 0}, {3, 0, 1}};
      break;

    case FamilyId::kAntiprism:
      u.width = 1;
      u.vertices = {{0, 0}, {0.5, 1}};
      u.edges = {{0, 1, 0}, {1, 0, 1}, {0, 0, 1}, {1, 1, 1}};
      break;

    case FamilyId::kOctaThinCycle:
      // a p q r on the axis, t above, b below.
      u.width = 2;
      u.vertices = {{0, 0}, {0.5, 0}, {1, 0}, {1.5, 0}, {0.75, 0.5}, {0.75, -0.5}};
      u.edges = {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 1, 0}, {1, 5, 0},
                 {5, 2, 0}, {2, 4, 0}, {4, 0, 0}, {0, 5, 0}, {5, 3, 0}, {3, 0, 1}};
      break;

    case FamilyId::kOctaVertexCycle:
      // Vertex 0 is shared by both disparate faces.
      u.width = 4;
      u.vertices = {{0, 0}, {1, 1}, {1, -1}, {2, 0}, {3, -1}, {3, 1}};
      u.edges = {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}, {1, 3, 0}, {3, 2, 0}, {2, 4, 0},
                 {4, 3, 0}, {3, 5, 0}, {5, 1, 0}, {4, 5, 0}, {5, 0, 1}, {4, 0, 1}};
      break;

    case FamilyId::kTruncatedTrapezohedron:
      u.width = 1;
      u.vertices = {{0.5, -1}, {0.5, -0.25}, {1, 0.25}, {1, 1}};
      u.edges = {{0, 0, 1}, {3, 3, 1}, {0, 1, 0}, {1, 2, 0}, {2, 1, 1}, {2, 3, 0}};
      break;

    case FamilyId::kDodecaThinCycle:
      // Dodecahedron minus one edge. 0..7 outer octagon, 8..19 inside.
      u.width = 7;
      u.vertices = {{0, 0},      {0.5, 1},   {3, 1.5},    {5.5, 1},    {6, 0},     {5.5, -1},
                    {3, -1.5},   {0.5, -1},  {1, 0.5},    {1, -0.5},   {2.5, 0.5}, {2.75, 0},
                    {2.5, -0.5}, {3.25, 0},  {3, 1},      {3, -1},     {3.5, -0.5}, {3.5, 0.5},
                    {5, -0.5},   {5, 0.5}};
      u.edges = {{0, 1, 0},   {1, 2, 0},   {2, 3, 0},   {3, 4, 0},   {4, 5, 0},   {5, 6, 0},
                 {6, 7, 0},   {7, 0, 0},   {1, 8, 0},   {8, 9, 0},   {9, 7, 0},   {8, 10, 0},
                 {10, 11, 0}, {11, 12, 0}, {12, 9, 0},  {11, 13, 0}, {10, 14, 0}, {14, 2, 0},
                 {12, 15, 0}, {15, 6, 0},  {15, 16, 0}, {16, 13, 0}, {13, 17, 0}, {17, 14, 0},
                 {16, 18, 0}, {18, 19, 0}, {19, 17, 0}, {18, 5, 0},  {19, 3, 0},  {4, 0, 1}};
      break;

    case FamilyId::kDodecaThickCycle:
      // 0..4 top row, 5..9 bottom row, 10..19 between.
      u.width = 5;
      u.vertices = {{0, 2},   {0.5, 2},   {1.5, 2},   {3.5, 2}, {4.5, 2},   {0, 0},   {0.5, 0},
                    {1.5, 0}, {3.5, 0},   {4.5, 0},   {1, 1},   {2, 0.5},   {1.5, 1}, {2, 1.5},
                    {2.5, 0.5}, {2.5, 1.5}, {3, 0.5}, {3.5, 1}, {3, 1.5},   {4, 1}};
      u.edges = {{0, 1, 0},   {1, 2, 0},   {2, 3, 0},   {3, 4, 0},   {4, 0, 1},   {5, 6, 0},
                 {6, 7, 0},   {7, 8, 0},   {8, 9, 0},   {9, 5, 1},   {5, 0, 0},   {6, 10, 0},
                 {10, 1, 0},  {7, 11, 0},  {11, 12, 0}, {12, 13, 0}, {13, 2, 0},  {14, 15, 0},
                 {8, 16, 0},  {16, 17, 0}, {17, 18, 0}, {18, 3, 0},  {9, 19, 0},  {19, 4, 0},
                 {10, 12, 0}, {11, 14, 0}, {14, 16, 0}, {13, 15, 0}, {15, 18, 0}, {17, 19, 0}};
      break;

    case FamilyId::kIcosaThinCycle:
      // Icosahedron minus one edge.
      u.width = 9;
      u.vertices = {{0, 0},     {4, 2},  {8, 0},    {4, -2}, {2, 0.5}, {6, 0.5},
                    {6, -0.5},  {2, -0.5}, {4, 1},  {4, -1}, {3.5, 0}, {4.5, 0}};
      u.edges = {{0, 1, 0},  {1, 2, 0},  {2, 3, 0},   {3, 0, 0},   {0, 4, 0},  {4, 1, 0},
                 {1, 5, 0},  {5, 2, 0},  {2, 6, 0},   {6, 3, 0},   {3, 7, 0},  {7, 0, 0},
                 {7, 4, 0},  {4, 8, 0},  {8, 5, 0},   {5, 6, 0},   {6, 9, 0},  {9, 7, 0},
                 {7, 10, 0}, {10, 8, 0}, {8, 11, 0},  {11, 9, 0},  {9, 10, 0}, {10, 11, 0},
                 {11, 6, 0}, {4, 10, 0}, {11, 5, 0},  {8, 1, 0},   {9, 3, 0},  {2, 0, 1}};
      break;

    case FamilyId::kIcosaVertexCycle:
      // Vertex 0 is shared by both disparate faces.
      u.width = 3;
      u.vertices = {{0, 0},   {1, 1},   {2.5, 1},   {2.5, -1}, {1, -1}, {0.5, 0},
                    {1, 0.5}, {1, -0.5}, {1.5, 0.5}, {2, 0},    {1.5, 0}, {1.5, -0.5}};
      u.edges = {{0, 1, 0},  {1, 2, 0},   {2, 3, 0},  {3, 4, 0},   {4, 0, 0},  {0, 5, 0},
                 {5, 1, 0},  {1, 6, 0},   {6, 5, 0},  {5, 7, 0},   {7, 6, 0},  {6, 8, 0},
                 {8, 2, 0},  {2, 9, 0},   {9, 8, 0},  {8, 10, 0},  {10, 9, 0}, {9, 11, 0},
                 {11, 4, 0}, {4, 7, 0},   {7, 11, 0}, {11, 10, 0}, {10, 7, 0}, {5, 4, 0},
                 {6, 10, 0}, {11, 3, 0},  {9, 3, 0},  {1, 8, 0},   {2, 0, 1},  {3, 0, 1}};
      break;

    case FamilyId::kIcosaThickCycle:
      // 0 bottom-left, 1 top-left; the right column is the next unit's 0 and 1.
      u.width = 7;
      u.vertices = {{0, 0},   {0, 4},   {1, 2},   {2, 0}, {2, 4}, {2, 2},
                    {3.5, 1}, {3.5, 3}, {5, 4},   {5, 2}, {5, 0}, {6, 2}};
      u.edges = {{0, 1, 0},   {1, 2, 0},  {2, 0, 0},  {0, 3, 0},  {3, 2, 0},  {2, 4, 0},
                 {4, 5, 0},   {5, 3, 0},  {3, 6, 0},  {6, 5, 0},  {5, 7, 0},  {7, 4, 0},
                 {4, 8, 0},   {8, 7, 0},  {7, 9, 0},  {9, 6, 0},  {6, 10, 0}, {10, 9, 0},
                 {9, 8, 0},   {8, 1, 1},  {10, 0, 1}, {3, 10, 0}, {1, 4, 0},  {2, 5, 0},
                 {6, 7, 0},   {11, 0, 1}, {11, 1, 1}, {10, 11, 0}, {11, 8, 0}, {9, 11, 0}};
      break;

    case FamilyId::kIcosaFarVertexCycle:
      // 0..3 left column bottom to top; the right column is the next unit's.
      u.width = 8;
      u.vertices = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {2, 1}, {2, 2},
                    {3, 0}, {3, 3}, {5, 0}, {5, 3}, {6, 1}, {6, 2}};
      u.edges = {{0, 1, 0},  {1, 2, 0},   {2, 3, 0},  {3, 7, 0},  {7, 9, 0},  {9, 3, 1},
                 {0, 6, 0},  {6, 8, 0},   {8, 0, 1},  {0, 4, 0},  {4, 6, 0},  {6, 5, 0},
                 {5, 4, 0},  {4, 2, 0},   {2, 5, 0},  {5, 7, 0},  {7, 8, 0},  {8, 9, 0},
                 {9, 10, 0}, {10, 11, 0}, {11, 1, 1}, {10, 1, 1}, {10, 0, 1}, {1, 4, 0},
                 {3, 5, 0},  {6, 7, 0},   {8, 10, 0}, {9, 11, 0}, {11, 2, 1}, {11, 3, 1}};
      break;

    case FamilyId::kIcosaOppositeCycle:
      // One third of the icosahedron band between opposite faces:
      // 0 bottom, 1 and 2 middle row, 3 top.
      u.width = 2;
      u.vertices = {{0, 0}, {1, 1}, {2, 1}, {1, 2}};
      u.edges = {{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {2, 0, 1}, {1, 2, 0},
                 {2, 1, 1}, {3, 1, 0}, {3, 3, 1}, {2, 3, 0}, {2, 3, 1}};
      break;
  }
  return u;
}

}  // namespace detail

inline const StripUnit& family_unit(FamilyId id) {
  static const auto units = [] {
    std::array<StripUnit, 15> all;
    for (auto f : kAllFamilies) all[static_cast<std::size_t>(f)] = detail::family_unit(f);
    return all;
  }();
  return units[static_cast<std::size_t>(id)];
}

inline PlanarMap generate_family(FamilyId id, int d) {
  const auto& info = family_info(id);
  if (d < info.d_min) {
    throw ParameterTooSmall(std::string(info.name) + " requires d >= " + std::to_string(info.d_min) +
                            ", got " + std::to_string(d));
  }
  if (id == FamilyId::kCycle) {
    std::vector<std::vector<int>> rot(d);
    for (int i = 0; i < d; ++i) rot[i] = {(i + d - 1) % d, (i + 1) % d};
    return PlanarMap(std::move(rot));
  }
  return glue_strip(family_unit(id), d);
}

/// Face vector of generate_family(id, d); merges into a single degree when the
/// disparate degree coincides with the common one.
inline FaceVector declared_face_vector(FamilyId id, int d) {
  const auto& info = family_info(id);
  if (d < info.d_min) {
    throw ParameterTooSmall(std::string(info.name) + " requires d >= " + std::to_string(info.d_min));
  }
  const int disparate = disparate_degree(id, d);
  FaceVector fv;
  fv[disparate] += 2;
  if (id == FamilyId::kCycle) return fv;
  // Unit sizes: faces of degree d2 per unit.
  int per_unit = 0;
  switch (id) {
    case FamilyId::kTetraThinCycle: per_unit = 2; break;
    case FamilyId::kPrism: per_unit = 1; break;
    case FamilyId::kCubeThinCycle: per_unit = 4; break;
    case FamilyId::kAntiprism: per_unit = 2; break;
    case FamilyId::kOctaThinCycle: per_unit = 6; break;
    case FamilyId::kOctaVertexCycle: per_unit = 6; break;
    case FamilyId::kTruncatedTrapezohedron: per_unit = 2; break;
    case FamilyId::kDodecaThinCycle: per_unit = 10; break;
    case FamilyId::kDodecaThickCycle: per_unit = 10; break;
    case FamilyId::kIcosaThinCycle:
    case FamilyId::kIcosaVertexCycle:
    case FamilyId::kIcosaThickCycle:
    case FamilyId::kIcosaFarVertexCycle: per_unit = 18; break;
    case FamilyId::kIcosaOppositeCycle: per_unit = 6; break;
    case FamilyId::kCycle: break;
  }
  fv[info.d2] += per_unit * d;
  return fv;
}

/// The disparate degree equals the common degree: the member is a Platonic map.
inline bool collapses_to_platonic(FamilyId id, int d) {
  return id != FamilyId::kCycle && disparate_degree(id, d) == family_info(id).d2;
}

// ---------------------------------------------------------------------------
// Fixtures with three disparate faces.

struct Fixture {
  std::string name;
  std::string provenance;
  PlanarMap map;
};

namespace detail {

// Diamond (K4 minus an edge) between x0 and x0 + 0.5 on the axis, returned as
// indices appended to `pts`: left, top, right, bottom.
inline std::array<int, 4> add_diamond(std::vector<Point2>& pts, std::vector<std::pair<int, int>>& edges,
                                      double x0) {
  const int base = static_cast<int>(pts.size());
  pts.push_back({x0, 0});
  pts.push_back({x0 + 0.25, 0.25});
  pts.push_back({x0 + 0.5, 0});
  pts.push_back({x0 + 0.25, -0.25});
  edges.insert(edges.end(), {{base, base + 1},
                             {base + 1, base + 2},
                             {base + 2, base + 3},
                             {base + 3, base},
                             {base + 1, base + 3}});
  return {base, base + 1, base + 2, base + 3};
}

inline PlanarMap distinct_degree_fixture() {
  std::vector<Point2> pts;
  std::vector<std::pair<int, int>> edges;
  // Chain of diamonds along the axis from -3 to 3, hub at the origin.
  const int hub = 0;
  pts.push_back({0, 0});
  std::vector<double> right_starts = {0.5, 1.5, 2.5};
  std::vector<double> left_starts = {-1.0, -3.0};
  int prev = hub;
  int right_end = -1;
  for (double x : right_starts) {
    const auto dia = add_diamond(pts, edges, x);
    edges.emplace_back(prev, dia[0]);
    prev = dia[2];
  }
  right_end = prev;
  prev = hub;
  int left_end = -1;
  for (double x : left_starts) {
    const auto dia = add_diamond(pts, edges, x);
    edges.emplace_back(prev, dia[2]);
    prev = dia[0];
  }
  left_end = prev;
  // Vertical spoke with its own diamond, up to the apex of the arc.
  const int low = static_cast<int>(pts.size());
  pts.push_back({0, 1});
  pts.push_back({-0.5, 1.5});
  pts.push_back({0, 2});
  pts.push_back({0.5, 1.5});
  edges.insert(edges.end(), {{low, low + 1}, {low + 1, low + 2}, {low + 2, low + 3}, {low + 3, low},
                             {low + 1, low + 3}, {hub, low}});
  const int apex = static_cast<int>(pts.size());
  pts.push_back({0, 6});
  edges.insert(edges.end(), {{low + 2, apex}, {apex, left_end}, {apex, right_end}});
  return map_from_drawing(pts, edges);
}

inline PlanarMap hexagonal_symmetric_fixture() {
  // 26 vertices: outer hexagon, a ring of 12, an inner ring of 8.
  const std::vector<Point2> pts = {
      {3, 0}, {-1, 3}, {-1, 5}, {3, 8}, {7, 5}, {7, 3},                              // 0..5
      {3, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {3, 7}, {5, 6}, {5, 5}, {5, 4},  // 6..15
      {5, 3}, {5, 2},                                                                 // 16..17
      {3, 2}, {2, 2}, {2, 4}, {2, 6}, {3, 6}, {4, 6}, {4, 4}, {4, 2}};                // 18..25
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  for (int i = 0; i < 12; ++i) edges.emplace_back(6 + i, 6 + (i + 1) % 12);
  for (int i = 0; i < 8; ++i) edges.emplace_back(18 + i, 18 + (i + 1) % 8);
  edges.insert(edges.end(), {{11, 21}, {23, 13}, {9, 20}, {24, 15}, {7, 19}, {25, 17}, {18, 22},
                             {2, 10}, {14, 4}, {1, 8}, {16, 5}, {0, 6}, {12, 3}});
  return map_from_drawing(pts, edges);
}

// 14-vertex 4-regular map with faces (4; 9 4^2 3^13); a reflection swaps the
// two quadrilaterals.
inline PlanarMap quad_pair_fixture() {
  return PlanarMap({{1, 2, 3, 4},    {0, 4, 5, 2},     {0, 1, 5, 3},     {0, 2, 5, 4},
                    {0, 3, 6, 1},    {1, 6, 3, 2},     {4, 5, 7, 8},     {6, 9, 10, 8},
                    {6, 7, 11, 12},  {7, 12, 13, 10},  {7, 9, 13, 11},   {8, 10, 13, 12},
                    {8, 11, 13, 9},  {9, 12, 11, 10}});
}

}  // namespace detail

inline std::vector<Fixture> f3_fixtures() {
  return {
      {"distinct-degrees", "diamond chain with spoke, three disparate faces of pairwise distinct degree",
       detail::distinct_degree_fixture()},
      {"symmetric-14", "best-effort: 4-regular 14-vertex witness found by exhaustive search",
       detail::quad_pair_fixture()},
      {"symmetric-26", "best-effort transcription of the 26-vertex symmetric drawing",
       detail::hexagonal_symmetric_fixture()},
  };
}

}  // namespace nearplat
