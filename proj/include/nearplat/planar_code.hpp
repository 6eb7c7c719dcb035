#pragma once

// planar_code binary format: the 15-byte header ">>planar_code<<", then per
// map one byte n followed by, for each vertex 1..n, its neighbours in
// rotation order (1-based bytes) and a terminating 0.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearplat/planar_map.hpp"

namespace nearplat {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

enum class FormatErrc {
  kBadHeader,
  kTruncatedRecord,
  kNonSimple,
  kInconsistentInvolution,
  kBadVertex,
  kDisconnected,
  kTooLarge,
};

inline const char* to_string(FormatErrc code) {
  switch (code) {
    case FormatErrc::kBadHeader: return "BadHeader";
    case FormatErrc::kTruncatedRecord: return "TruncatedRecord";
    case FormatErrc::kNonSimple: return "NonSimple";
    case FormatErrc::kInconsistentInvolution: return "InconsistentInvolution";
    case FormatErrc::kBadVertex: return "BadVertex";
    case FormatErrc::kDisconnected: return "Disconnected";
    case FormatErrc::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

class FormatError : public std::runtime_error {
 public:
  FormatError(FormatErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  FormatErrc code() const noexcept { return code_; }

 private:
  FormatErrc code_;
};

using Bytes = std::vector<std::uint8_t>;

inline std::vector<PlanarMap> read_planar_code(const Bytes& bytes) {
  if (bytes.size() < kPlanarCodeHeader.size() ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()), kPlanarCodeHeader.size()) !=
          kPlanarCodeHeader) {
    throw FormatError(FormatErrc::kBadHeader, "missing >>planar_code<< header");
  }
  std::vector<PlanarMap> maps;
  std::size_t pos = kPlanarCodeHeader.size();
  while (pos < bytes.size()) {
    const std::size_t record = maps.size();
    const int n = bytes[pos++];
    if (n == 0) throw FormatError(FormatErrc::kBadVertex, "record " + std::to_string(record) + " has 0 vertices");
    std::vector<std::vector<int>> rot(n);
    for (int u = 0; u < n; ++u) {
      while (true) {
        if (pos >= bytes.size()) {
          throw FormatError(FormatErrc::kTruncatedRecord,
                            "record " + std::to_string(record) + " ends inside vertex " + std::to_string(u + 1));
        }
        const int w = bytes[pos++];
        if (w == 0) break;
        if (w > n) {
          throw FormatError(FormatErrc::kBadVertex, "record " + std::to_string(record) + " names vertex " +
                                                        std::to_string(w) + " of " + std::to_string(n));
        }
        rot[u].push_back(w - 1);
      }
    }
    try {
      maps.emplace_back(std::move(rot));
    } catch (const MapError& e) {
      FormatErrc code = FormatErrc::kInconsistentInvolution;
      switch (e.code()) {
        case MapErrc::kLoop:
        case MapErrc::kParallelEdge: code = FormatErrc::kNonSimple; break;
        case MapErrc::kDisconnected: code = FormatErrc::kDisconnected; break;
        case MapErrc::kBadVertex:
        case MapErrc::kEmpty: code = FormatErrc::kBadVertex; break;
        default: break;
      }
      throw FormatError(code, "record " + std::to_string(record) + ": " + e.what());
    }
  }
  return maps;
}

/// Each rotation is written starting at its lowest-numbered neighbour.
inline Bytes write_planar_code(const std::vector<PlanarMap>& maps) {
  Bytes out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const auto& map : maps) {
    const int n = map.vertex_count();
    if (n > 255) throw FormatError(FormatErrc::kTooLarge, std::to_string(n) + " vertices (max 255)");
    out.push_back(static_cast<std::uint8_t>(n));
    for (int u = 0; u < n; ++u) {
      const auto nbrs = map.neighbors(u);
      const int deg = static_cast<int>(nbrs.size());
      int first = 0;
      for (int i = 1; i < deg; ++i) {
        if (nbrs[i] < nbrs[first]) first = i;
      }
      for (int i = 0; i < deg; ++i) out.push_back(static_cast<std::uint8_t>(nbrs[(first + i) % deg] + 1));
      out.push_back(0);
    }
  }
  return out;
}

}  // namespace nearplat
