#include <gtest/gtest.h>

#include <set>

#include "nearplat/canonical.hpp"
#include "nearplat/counting.hpp"
#include "nearplat/families.hpp"

using namespace nearplat;

namespace {

// The two faces of degree D (or the two degree-D faces adjoining the strip
// when D differs from d2).
std::vector<FaceWalk> disparate_faces(const PlanarMap& m, int degree) {
  std::vector<FaceWalk> out;
  for (auto& f : trace_faces(m)) {
    if (f.degree() == degree) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST(Platonic, Pipeline) {
  for (auto id : kAllPlatonic) {
    const auto& info = platonic_info(id);
    const auto m = generate_platonic(id);
    const int v = platonic_vertex_count(info.k, info.d2);
    EXPECT_EQ(m.vertex_count(), v) << info.name;
    EXPECT_EQ(m.edge_count(), info.k * v / 2);
    EXPECT_TRUE(is_regular(m, info.k));
    EXPECT_EQ(genus(m), 0);
    EXPECT_EQ(face_vector(m), (FaceVector{{info.d2, static_cast<int>(total_faces(info.k, v, 0, 0, info.d2))}}));
  }
}

TEST(Platonic, Examples) {
  const auto t = generate_platonic(PlatonicId::kTetrahedron);
  EXPECT_EQ(t.vertex_count(), 4);
  EXPECT_EQ(t.edge_count(), 6);
  EXPECT_EQ(face_vector(t), (FaceVector{{3, 4}}));
  const auto o = generate_platonic(PlatonicId::kOctahedron);
  EXPECT_EQ(o.vertex_count(), 6);
  EXPECT_EQ(o.edge_count(), 12);
  EXPECT_EQ(face_count(o), 8);
  const auto i = generate_platonic(PlatonicId::kIcosahedron);
  EXPECT_EQ(i.vertex_count(), 12);
  EXPECT_EQ(i.edge_count(), 30);
  EXPECT_EQ(face_count(i), 20);
}

TEST(Platonic, NamesRoundTrip) {
  for (auto id : kAllPlatonic) EXPECT_EQ(platonic_from_name(platonic_info(id).name), id);
  EXPECT_FALSE(platonic_from_name("rhombicuboctahedron"));
}

TEST(Families, NamesRoundTrip) {
  for (auto id : kAllFamilies) {
    EXPECT_EQ(family_from_name(family_info(id).name), id);
    EXPECT_EQ(family_info(id).id, id);
  }
  EXPECT_EQ(family_from_name("Tetra_Thin_Cycle"), FamilyId::kTetraThinCycle);
  EXPECT_FALSE(family_from_name("hexagonal-prism"));
}

TEST(Families, InvariantSuite) {
  for (auto id : kAllFamilies) {
    const auto& info = family_info(id);
    for (int d = info.d_min; d <= 10; ++d) {
      SCOPED_TRACE(std::string(info.name) + " d=" + std::to_string(d));
      const auto m = generate_family(id, d);
      EXPECT_TRUE(is_regular(m, info.k));
      EXPECT_EQ(genus(m), 0);
      const auto fv = face_vector(m);
      EXPECT_EQ(fv, declared_face_vector(id, d));
      const int D = disparate_degree(id, d);
      if (collapses_to_platonic(id, d)) {
        EXPECT_EQ(fv.size(), 1u);
        EXPECT_TRUE(isomorphic(m, generate_platonic(*info.platonic)));
        continue;
      }
      ASSERT_EQ(fv.at(D), 2);
      const int d2 = id == FamilyId::kCycle ? 3 : info.d2;
      // (e / (k d2)) (4 - (k-2)(d2-2)) = phi(2, D, d2)
      if (id != FamilyId::kCycle) {
        const Rational lhs = Rational(m.edge_count(), info.k * d2) * (4 - (info.k - 2) * (d2 - 2));
        EXPECT_EQ(lhs, phi(2, D, d2));
        EXPECT_EQ(fv.size(), 2u);
      }
    }
  }
}

TEST(Families, CycleSatisfiesEq3) {
  // k = 2: the identity holds for any common degree since there are no others.
  for (int d = 3; d <= 10; ++d) {
    const auto m = generate_family(FamilyId::kCycle, d);
    for (int d2 = 3; d2 <= 6; ++d2) {
      const Rational lhs = Rational(m.edge_count(), 2 * d2) * 4;
      EXPECT_EQ(lhs, phi(2, d, d2));
    }
  }
}

TEST(Families, BelowMinimumIsRejected) {
  for (auto id : kAllFamilies) {
    EXPECT_THROW(generate_family(id, family_info(id).d_min - 1), ParameterTooSmall) << family_info(id).name;
    EXPECT_THROW(declared_face_vector(id, family_info(id).d_min - 1), ParameterTooSmall);
  }
}

TEST(Families, SingleUnitClosesIntoThePlatonicMap) {
  for (auto id : kAllFamilies) {
    const auto& info = family_info(id);
    if (id == FamilyId::kCycle || info.d_min != 2) continue;
    const auto m = glue_strip(family_unit(id), 1);
    ASSERT_TRUE(info.platonic) << info.name;
    EXPECT_TRUE(isomorphic(m, generate_platonic(*info.platonic))) << info.name;
  }
  EXPECT_THROW(glue_strip(family_unit(FamilyId::kPrism), 1), ParameterTooSmall);
}

TEST(Families, Coincidences) {
  EXPECT_EQ(canonical_code(generate_family(FamilyId::kPrism, 4)),
            canonical_code(generate_platonic(PlatonicId::kCube)));
  EXPECT_EQ(canonical_code(generate_family(FamilyId::kAntiprism, 3)),
            canonical_code(generate_platonic(PlatonicId::kOctahedron)));
  EXPECT_EQ(canonical_code(generate_family(FamilyId::kTruncatedTrapezohedron, 5)),
            canonical_code(generate_platonic(PlatonicId::kDodecahedron)));
  EXPECT_EQ(canonical_code(generate_family(FamilyId::kIcosaOppositeCycle, 3)),
            canonical_code(generate_platonic(PlatonicId::kIcosahedron)));
  EXPECT_EQ(face_vector(generate_family(FamilyId::kPrism, 4)), (FaceVector{{4, 6}}));
}

TEST(Families, Examples) {
  const auto t = generate_family(FamilyId::kTetraThinCycle, 4);
  EXPECT_EQ(t.vertex_count(), 16);
  EXPECT_EQ(t.edge_count(), 24);
  EXPECT_EQ(face_vector(t), (FaceVector{{12, 2}, {3, 8}}));
  const auto i = generate_family(FamilyId::kIcosaThickCycle, 2);
  EXPECT_EQ(i.vertex_count(), 24);
  EXPECT_EQ(i.edge_count(), 60);
  EXPECT_EQ(face_vector(i), (FaceVector{{6, 2}, {3, 36}}));
  EXPECT_EQ(face_vector(generate_family(FamilyId::kCycle, 7)), (FaceVector{{7, 2}}));
  EXPECT_EQ(generate_family(FamilyId::kCycle, 7).vertex_count(), 7);
}

TEST(Families, PrintedFormulas) {
  for (int d = 3; d <= 10; ++d) {
    if (d != 4) EXPECT_EQ(declared_face_vector(FamilyId::kPrism, d), (FaceVector{{d, 2}, {4, d}}));
  }
  for (int d = 2; d <= 10; ++d) {
    EXPECT_EQ(declared_face_vector(FamilyId::kOctaVertexCycle, d), (FaceVector{{3 * d, 2}, {3, 6 * d}}));
  }
}

// Families without a printed vector: fit D(d) = a d and m(d) = b d + c on
// d = 2..8 from traced faces, then check the fit on d = 9..12.
TEST(Families, FittedFormulasForDerivedFamilies) {
  for (auto id : kAllFamilies) {
    const auto& info = family_info(id);
    if (info.printed) continue;
    SCOPED_TRACE(info.name);
    std::vector<std::pair<int, int>> samples;  // (D, m)
    const int d0 = std::max(2, info.d_min);
    for (int d = d0; d <= 8; ++d) {
      const auto fv = face_vector(generate_family(id, d));
      int D = -1, m = 0;
      for (const auto& [deg, cnt] : fv) {
        if (deg != info.d2 && cnt == 2) D = deg;
        if (deg == info.d2) m = cnt;
      }
      if (D < 0) {
        // collapsed member: D = d2 and the two faces merged into the count
        D = info.d2;
        m -= 2;
      }
      samples.emplace_back(D, m);
    }
    const int a = samples[1].first - samples[0].first;
    const int b = samples[1].second - samples[0].second;
    const int c = samples[0].second - b * d0;
    EXPECT_EQ(samples[0].first, a * d0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const int d = d0 + static_cast<int>(i);
      EXPECT_EQ(samples[i].first, a * d);
      EXPECT_EQ(samples[i].second, b * d + c);
    }
    EXPECT_EQ(a, info.multiplier);
    for (int d = 9; d <= 12; ++d) {
      FaceVector predicted;
      predicted[a * d] += 2;
      predicted[info.d2] += b * d + c;
      EXPECT_EQ(face_vector(generate_family(id, d)), predicted);
      EXPECT_EQ(declared_face_vector(id, d), predicted);
    }
  }
}

TEST(Families, CyclicSymmetryOfOrderD) {
  for (auto id : kAllFamilies) {
    if (id == FamilyId::kCycle) continue;
    const int nu = static_cast<int>(family_unit(id).vertices.size());
    for (int d = family_info(id).d_min; d <= 6; ++d) {
      const auto m = generate_family(id, d);
      const int n = m.vertex_count();
      std::vector<std::vector<int>> shifted(n);
      for (int u = 0; u < n; ++u) {
        for (int w : m.neighbors(u)) shifted[(u + nu) % n].push_back((w + nu) % n);
      }
      EXPECT_EQ(PlanarMap(shifted), m) << family_info(id).name << " d=" << d;
    }
  }
}

TEST(Families, DisparateFacesShareDartsNever) {
  for (auto id : kAllFamilies) {
    const auto& info = family_info(id);
    for (int d = info.d_min; d <= 8; ++d) {
      if (collapses_to_platonic(id, d)) continue;
      const auto m = generate_family(id, d);
      const auto faces = disparate_faces(m, disparate_degree(id, d));
      ASSERT_EQ(faces.size(), 2u);
      std::set<DartId> a(faces[0].darts.begin(), faces[0].darts.end());
      for (auto x : faces[1].darts) EXPECT_FALSE(a.count(x));

      // Golden data: shared edges and shared vertices.
      std::set<std::pair<int, int>> edges;
      for (auto x : faces[0].darts) edges.insert(std::minmax(m.source(x), m.target(x)));
      int shared_edges = 0;
      for (auto x : faces[1].darts) shared_edges += edges.count(std::minmax(m.source(x), m.target(x)));
      std::set<int> verts(faces[0].vertices.begin(), faces[0].vertices.end());
      int shared_vertices = 0;
      for (int x : std::set<int>(faces[1].vertices.begin(), faces[1].vertices.end())) {
        shared_vertices += verts.count(x);
      }
      EXPECT_EQ(shared_edges > 0, info.faces_share_edge) << info.name << " d=" << d;
      EXPECT_EQ(shared_vertices > 0, info.faces_share_vertex) << info.name << " d=" << d;
      if (id == FamilyId::kCycle) {
        EXPECT_EQ(shared_edges, d);
      } else if (info.faces_share_edge) {
        EXPECT_EQ(shared_edges, d);  // one connector edge per unit
        EXPECT_EQ(shared_vertices, 2 * d);
      } else if (info.faces_share_vertex) {
        EXPECT_EQ(shared_vertices, d);  // one pinch vertex per unit
      }
    }
  }
}

TEST(Fixtures, ThreeDisparateFaces) {
  const auto fixtures = f3_fixtures();
  ASSERT_GE(fixtures.size(), 3u);
  for (const auto& fx : fixtures) {
    SCOPED_TRACE(fx.name);
    EXPECT_EQ(genus(fx.map), 0);
    const int k = fx.map.degree(0);
    EXPECT_TRUE(is_regular(fx.map, k));
    // the common degree is the most frequent one
    const auto fv = face_vector(fx.map);
    int d2 = 0, best = 0;
    for (const auto& [deg, cnt] : fv) {
      if (cnt > best) best = cnt, d2 = deg;
    }
    int disparate = 0;
    for (const auto& [deg, cnt] : fv) {
      if (deg != d2) disparate += cnt;
    }
    EXPECT_EQ(disparate, 3);
    EXPECT_FALSE(fx.provenance.empty());
  }
}

TEST(Fixtures, DistinctDegrees) {
  const auto fx = f3_fixtures()[0];
  EXPECT_EQ(fx.name, "distinct-degrees");
  EXPECT_EQ(fx.map.vertex_count(), 26);
  EXPECT_TRUE(is_regular(fx.map, 3));
  EXPECT_EQ(face_vector(fx.map), (FaceVector{{3, 12}, {11, 1}, {14, 1}, {17, 1}}));
  EXPECT_EQ(format_signature(signature_of(fx.map)), "(3; 17^1 14^1 11^1 3^12)");
}

TEST(Fixtures, SymmetricFigures) {
  const auto fixtures = f3_fixtures();
  const auto& a = fixtures[1].map;
  EXPECT_EQ(a.vertex_count(), 14);
  EXPECT_TRUE(is_regular(a, 4));
  EXPECT_EQ(genus(a), 0);
  EXPECT_EQ(face_vector(a), (FaceVector{{3, 13}, {4, 2}, {9, 1}}));
  const auto& b = fixtures[2].map;
  EXPECT_EQ(b.vertex_count(), 26);
  EXPECT_TRUE(is_regular(b, 3));
  EXPECT_EQ(genus(b), 0);
  EXPECT_EQ(face_vector(b), (FaceVector{{5, 12}, {6, 3}}));
}
