#pragma once

// Exact counting identities for k-regular plane graphs whose faces have one
// common degree d2 except for f1 disparate faces of degree d1.
//
//   2e = kv,   2e = f1*d1 + f2*d2,   v - e + f = 2
//
// All evaluation is in exact rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nearplat/planar_map.hpp"

namespace nearplat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline std::string to_string(const Rational& q) { return q.str(); }

class CountingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Phi(f1, d1, d2) = 2 + f1 (d1 - d2) / d2.
inline Rational phi(int f1, int d1, int d2) {
  if (d2 < 3) throw CountingError("phi: d2 must be at least 3");
  return Rational(2) + Rational(f1) * Rational(d1 - d2, d2);
}

/// Pairs (k, d2), k, d2 >= 3, with (k - 2)(d2 - 2) < 4.
inline std::vector<std::pair<int, int>> admissible_pairs(int f1) {
  if (f1 < 0) throw CountingError("admissible_pairs: f1 must be non-negative");
  if (f1 > 3) {
    throw CountingError("UnsupportedF1: positivity of Phi is only guaranteed for f1 <= 3");
  }
  std::vector<std::pair<int, int>> pairs;
  // (k-2)(d2-2) >= 4 as soon as either factor reaches 4 with the other >= 1.
  for (int k = 3; (k - 2) < 4; ++k) {
    for (int d2 = 3; (k - 2) * (d2 - 2) < 4; ++d2) pairs.emplace_back(k, d2);
  }
  return pairs;
}

inline bool is_admissible(int k, int d2) { return k >= 3 && d2 >= 3 && (k - 2) * (d2 - 2) < 4; }

/// f = (kv - f1 (d1 - d2)) / d2, not assumed integral.
inline Rational total_faces(int k, int v, int f1, int d1, int d2) {
  if (d2 < 3) throw CountingError("total_faces: d2 must be at least 3");
  return Rational(BigInt(k) * v - BigInt(f1) * (d1 - d2), d2);
}

/// v = 2 (d1 + d2) / (4 - (k - 2)(d2 - 2)) for a single disparate face.
inline Rational vertices_for_one_disparate(int k, int d2, int d1) {
  const int denom = 4 - (k - 2) * (d2 - 2);
  if (denom <= 0) {
    throw CountingError("DegenerateDenominator: 4-(k-2)(d2-2) = " + std::to_string(denom));
  }
  return Rational(2 * (d1 + d2), denom);
}

/// v (2 d2 - k d2 + 2k) = 2 f1 d1 + (4 - 2 f1) d2, solved for v.
inline Rational vertices_from_face_identity(int k, int d2, int f1, int d1) {
  const int coeff = 2 * d2 - k * d2 + 2 * k;
  if (coeff <= 0) throw CountingError("DegenerateDenominator: 2d2-kd2+2k <= 0");
  return Rational(2 * f1 * d1 + (4 - 2 * f1) * d2, coeff);
}

inline int platonic_vertex_count(int k, int d2) {
  if (!is_admissible(k, d2)) {
    throw CountingError("platonic_vertex_count: (" + std::to_string(k) + "," + std::to_string(d2) +
                        ") is not admissible");
  }
  return static_cast<int>(4 * d2 / (2 * d2 - k * d2 + 2 * k));
}

/// Sum of disparate face degrees forced by Euler's formula for a map on v
/// vertices with f1 disparate faces and all other faces of degree d2.
inline Rational disparate_degree_sum(int k, int d2, int f1, int v) {
  const int delta = 4 - (k - 2) * (d2 - 2);
  return Rational(BigInt(v) * delta, 2) + Rational(d2 * (f1 - 2));
}

// ---------------------------------------------------------------------------
// Signatures: (k; d1^n1 d2^n2 ... dt^nt)

struct Signature {
  int k = 0;
  std::vector<std::pair<int, int>> faces;  // (degree, count), distinct degrees

  /// Merges repeated degrees, drops zero counts, orders by ascending count
  /// then descending degree (disparate faces first).
  void normalize() {
    std::sort(faces.begin(), faces.end());
    std::vector<std::pair<int, int>> merged;
    for (const auto& [deg, cnt] : faces) {
      if (!merged.empty() && merged.back().first == deg) {
        merged.back().second += cnt;
      } else {
        merged.emplace_back(deg, cnt);
      }
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first > b.first;
    });
    faces = std::move(merged);
  }

  int face_total() const {
    int total = 0;
    for (const auto& f : faces) total += f.second;
    return total;
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature make_signature(int k, std::vector<std::pair<int, int>> faces) {
  Signature sig{k, std::move(faces)};
  sig.normalize();
  return sig;
}

inline Signature signature_of(const PlanarMap& map) {
  Signature sig;
  sig.k = map.vertex_count() > 0 ? map.degree(0) : 0;
  for (const auto& [deg, cnt] : face_vector(map)) sig.faces.emplace_back(deg, cnt);
  sig.normalize();
  return sig;
}

inline std::string format_signature(const Signature& sig) {
  std::string out = "(" + std::to_string(sig.k) + ";";
  for (const auto& [deg, cnt] : sig.faces) {
    out += " " + std::to_string(deg) + "^" + std::to_string(cnt);
  }
  return out + ")";
}

/// Parses "(k; d^n d^n ...)"; an omitted exponent means 1.
inline std::optional<Signature> parse_signature(std::string_view text) {
  auto skip_ws = [&] {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  };
  auto read_int = [&](int& value) {
    skip_ws();
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) return false;
    text.remove_prefix(static_cast<std::size_t>(ptr - first));
    return true;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (text.empty() || text.front() != c) return false;
    text.remove_prefix(1);
    return true;
  };

  Signature sig;
  if (!expect('(') || !read_int(sig.k) || !expect(';')) return std::nullopt;
  while (true) {
    skip_ws();
    if (text.empty()) return std::nullopt;
    if (text.front() == ')') {
      text.remove_prefix(1);
      break;
    }
    int deg = 0;
    int cnt = 1;
    if (!read_int(deg)) return std::nullopt;
    skip_ws();
    if (!text.empty() && text.front() == '^' && (text.remove_prefix(1), !read_int(cnt))) {
      return std::nullopt;
    }
    if (deg < 1 || cnt < 1) return std::nullopt;
    sig.faces.emplace_back(deg, cnt);
  }
  skip_ws();
  if (!text.empty()) return std::nullopt;
  sig.normalize();
  return sig;
}

// ---------------------------------------------------------------------------
// Necessary-condition filter.

struct Feasibility {
  bool feasible = true;
  std::string identity;  // name of the first violated identity
  std::string detail;

  static Feasibility ok() { return {}; }
  static Feasibility fail(std::string identity, std::string detail) {
    return {false, std::move(identity), std::move(detail)};
  }
  std::string describe() const {
    if (feasible) return "FEASIBLE";
    return "INFEASIBLE: " + identity + (detail.empty() ? "" : " (" + detail + ")");
  }
};

namespace identity {
inline constexpr const char* kPhi = "Phi>0";
inline constexpr const char* kAdmissible = "(k-2)(d2-2)<4";
inline constexpr const char* kOneDisparateIntegral = "Eq.5 non-integral";
inline constexpr const char* kOneDisparateMismatch = "Eq.5 vertex count mismatch";
inline constexpr const char* kHandshakeParity = "2e=kv non-integral";
inline constexpr const char* kFaceCount = "Eq.1 face count";
inline constexpr const char* kFaceIdentity = "Eq.2";
inline constexpr const char* kHandshakeFaces = "2e=sum of face degrees";
inline constexpr const char* kEuler = "v-e+f=2";
inline constexpr const char* kFaceDegree = "face degree >= 3";
inline constexpr const char* kVertexDegree = "k >= 2";
}  // namespace identity

/// Checks only necessary conditions; a feasible verdict never implies existence.
///
/// For two face degrees the disparate one is the degree with the smaller count
/// (ties: the larger degree). The order of checks is fixed and the first
/// failure is reported.
inline Feasibility feasibility_check(Signature sig, int v) {
  sig.normalize();
  const int k = sig.k;
  if (k < 2) return Feasibility::fail(identity::kVertexDegree, "k=" + std::to_string(k));
  for (const auto& [deg, cnt] : sig.faces) {
    if (deg < 3) return Feasibility::fail(identity::kFaceDegree, "degree " + std::to_string(deg));
  }

  const int t = static_cast<int>(sig.faces.size());
  const bool two_degree = t == 2 && k >= 3;
  int f1 = 0, d1 = 0, d2 = 0;
  if (t == 1) {
    d2 = sig.faces[0].first;
  } else if (two_degree) {
    d1 = sig.faces[0].first;
    f1 = sig.faces[0].second;
    d2 = sig.faces[1].first;
  }

  if (two_degree && f1 <= 3) {
    const Rational p = phi(f1, d1, d2);
    if (p <= 0) return Feasibility::fail(identity::kPhi, to_string(p));
    if (!is_admissible(k, d2)) {
      return Feasibility::fail(identity::kAdmissible,
                               "(" + std::to_string(k) + "," + std::to_string(d2) + ")");
    }
    if (f1 == 1) {
      const Rational vq = vertices_for_one_disparate(k, d2, d1);
      if (!is_integral(vq)) return Feasibility::fail(identity::kOneDisparateIntegral, to_string(vq));
    }
  }

  if ((static_cast<long long>(k) * v) % 2 != 0) {
    return Feasibility::fail(identity::kHandshakeParity,
                             "kv=" + std::to_string(static_cast<long long>(k) * v));
  }
  const long long e = static_cast<long long>(k) * v / 2;
  const long long f = sig.face_total();

  if (two_degree && f1 == 1) {
    const Rational vq = vertices_for_one_disparate(k, d2, d1);
    if (vq != v) {
      return Feasibility::fail(identity::kOneDisparateMismatch,
                               "requires v=" + to_string(vq) + ", got " + std::to_string(v));
    }
  }

  if (two_degree || t == 1) {
    const Rational fq = total_faces(k, v, f1, two_degree ? d1 : d2, d2);
    if (!is_integral(fq) || fq != f) {
      return Feasibility::fail(identity::kFaceCount,
                               "f=" + to_string(fq) + ", signature has " + std::to_string(f));
    }
    const long long lhs = static_cast<long long>(v) * (2 * d2 - k * d2 + 2 * k);
    const long long rhs = 2LL * f1 * d1 + (4LL - 2 * f1) * d2;
    if (lhs != rhs) {
      return Feasibility::fail(identity::kFaceIdentity,
                               std::to_string(lhs) + " != " + std::to_string(rhs));
    }
  } else {
    long long degree_sum = 0;
    for (const auto& [deg, cnt] : sig.faces) degree_sum += static_cast<long long>(deg) * cnt;
    if (degree_sum != 2 * e) {
      return Feasibility::fail(identity::kHandshakeFaces,
                               std::to_string(degree_sum) + " != " + std::to_string(2 * e));
    }
    if (v - e + f != 2) {
      return Feasibility::fail(identity::kEuler, "v-e+f=" + std::to_string(v - e + f));
    }
  }
  return Feasibility::ok();
}

/// Signature for f1 disparate faces of degree d1 (all others d2) on v vertices.
/// The d2 count comes from the face-count identity; when that is not a
/// non-negative integer the returned verdict says so.
inline Feasibility feasibility_of_cell(int k, int d2, std::vector<int> disparate, int v) {
  if ((static_cast<long long>(k) * v) % 2 != 0) {
    return Feasibility::fail(identity::kHandshakeParity,
                             "kv=" + std::to_string(static_cast<long long>(k) * v));
  }
  if (disparate.size() == 1) {
    // Single disparate face: the dedicated vertex-count identity decides first.
    const int d1 = disparate[0];
    if (d1 < 3) return Feasibility::fail(identity::kFaceDegree, "degree " + std::to_string(d1));
    if (is_admissible(k, d2)) {
      const Rational vq = vertices_for_one_disparate(k, d2, d1);
      if (!is_integral(vq)) return Feasibility::fail(identity::kOneDisparateIntegral, to_string(vq));
    }
  }
  const long long e = static_cast<long long>(k) * v / 2;
  long long rest = 2 * e;
  for (int d : disparate) rest -= d;
  if (rest < 0 || rest % d2 != 0) {
    Rational fq(rest, d2);
    return Feasibility::fail(identity::kFaceCount, "f2=" + to_string(fq));
  }
  std::vector<std::pair<int, int>> faces;
  for (int d : disparate) faces.emplace_back(d, 1);
  if (rest > 0) faces.emplace_back(d2, static_cast<int>(rest / d2));
  return feasibility_check(make_signature(k, std::move(faces)), v);
}

}  // namespace nearplat
