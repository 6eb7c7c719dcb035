#pragma once

// Periodic strip drawings glued into annuli.
//
// A unit is a straight-line drawing inside a vertical strip of width `width`.
// An edge (a, b, shift) joins vertex a of copy c to vertex b of copy
// c + shift (mod d), drawn towards b's position translated by shift * width.
// Rotations are read off the drawing by sorting edge directions by angle;
// the annulus is a conformal image of the strip, so that cyclic order is the
// embedding of the glued map.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nearplat/planar_map.hpp"

namespace nearplat {

struct Point2 {
  double x = 0;
  double y = 0;
};

struct UnitEdge {
  int a = 0;
  int b = 0;
  int shift = 0;
};

struct StripUnit {
  double width = 1;
  std::vector<Point2> vertices;
  std::vector<UnitEdge> edges;
};

class ParameterTooSmall : public std::invalid_argument {
 public:
  explicit ParameterTooSmall(const std::string& what)
      : std::invalid_argument("ParameterTooSmall: " + what) {}
};

namespace detail {

inline std::vector<std::vector<int>> rotations_by_angle(
    std::vector<std::vector<std::pair<double, int>>> incident) {
  std::vector<std::vector<int>> rot(incident.size());
  for (std::size_t u = 0; u < incident.size(); ++u) {
    auto& list = incident[u];
    std::sort(list.begin(), list.end());
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (std::abs(list[i].first - list[i - 1].first) < 1e-12) {
        throw std::logic_error("overlapping edges at drawing vertex " + std::to_string(u));
      }
    }
    for (const auto& [angle, w] : list) rot[u].push_back(w);
  }
  return rot;
}

}  // namespace detail

/// Glues d copies of the unit cyclically.
inline PlanarMap glue_strip(const StripUnit& unit, int d) {
  if (d < 1) throw ParameterTooSmall("at least one copy is required");
  const int nu = static_cast<int>(unit.vertices.size());
  const int n = nu * d;
  std::vector<std::vector<std::pair<double, int>>> incident(n);
  for (int c = 0; c < d; ++c) {
    for (const auto& e : unit.edges) {
      const int u = c * nu + e.a;
      const int w = (((c + e.shift) % d) + d) % d * nu + e.b;
      const Point2 pa = unit.vertices[e.a];
      const Point2 pb = unit.vertices[e.b];
      const double dx = pb.x + e.shift * unit.width - pa.x;
      const double dy = pb.y - pa.y;
      incident[u].emplace_back(std::atan2(dy, dx), w);
      incident[w].emplace_back(std::atan2(-dy, -dx), u);
    }
  }
  auto rot = detail::rotations_by_angle(std::move(incident));
  try {
    return PlanarMap(std::move(rot));
  } catch (const MapError& err) {
    if (err.code() == MapErrc::kLoop || err.code() == MapErrc::kParallelEdge) {
      throw ParameterTooSmall("d=" + std::to_string(d) + " gives a non-simple graph (" + err.what() +
                              ")");
    }
    throw;
  }
}

/// A plain (non-periodic) straight-line drawing.
inline PlanarMap map_from_drawing(const std::vector<Point2>& vertices,
                                  const std::vector<std::pair<int, int>>& edges) {
  StripUnit unit;
  unit.vertices = vertices;
  for (const auto& [a, b] : edges) unit.edges.push_back({a, b, 0});
  return glue_strip(unit, 1);
}

}  // namespace nearplat
