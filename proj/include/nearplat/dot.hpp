#pragma once

// Graphviz DOT export. Face annotations are plain comments.

#include <sstream>
#include <string>

#include "nearplat/planar_map.hpp"

namespace nearplat {

inline std::string face_vector_text(const FaceVector& fv) {
  std::string s = "{";
  bool first = true;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return s + "}";
}

inline std::string export_dot(const PlanarMap& map, bool face_annotations = true,
                              const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (face_annotations) {
    const auto faces = trace_faces(map);
    out << "  // faces: " << face_vector_text(face_vector(map)) << "\n";
    for (std::size_t i = 0; i < faces.size(); ++i) {
      out << "  // face " << i << " degree " << faces[i].degree() << ":";
      for (int u : faces[i].vertices) out << " " << u;
      out << "\n";
    }
  }
  for (int u = 0; u < map.vertex_count(); ++u) out << "  " << u << ";\n";
  for (int u = 0; u < map.vertex_count(); ++u) {
    for (int w : map.neighbors(u)) {
      if (u < w) out << "  " << u << " -- " << w << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace nearplat
