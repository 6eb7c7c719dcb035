#include <gtest/gtest.h>

#include "nearplat/counting.hpp"
#include "nearplat/families.hpp"

using namespace nearplat;

namespace {

const std::vector<std::pair<int, int>> kFive = {{3, 3}, {3, 4}, {3, 5}, {4, 3}, {5, 3}};

}  // namespace

TEST(Phi, Examples) {
  EXPECT_EQ(phi(0, 7, 3), Rational(2));
  EXPECT_EQ(phi(3, 3, 5), Rational(4, 5));
  EXPECT_EQ(phi(1, 9, 3), Rational(4));
  EXPECT_EQ(to_string(phi(3, 3, 5)), "4/5");
}

// With three disparate faces a plane map forces d2 <= 5.
TEST(Phi, PositiveUnderLemmaHypotheses) {
  for (int f1 = 0; f1 <= 3; ++f1) {
    for (int d1 = 3; d1 <= 40; ++d1) {
      for (int d2 = 3; d2 <= (f1 == 3 ? 5 : 40); ++d2) {
        EXPECT_GT(phi(f1, d1, d2), 0) << f1 << " " << d1 << " " << d2;
      }
    }
  }
}

TEST(Phi, ThreeFacesNeedTheDegreeBound) {
  EXPECT_EQ(phi(3, 3, 9), Rational(0));
  EXPECT_LT(phi(3, 3, 40), 0);
}

TEST(Admissible, FivePairsForEachF1) {
  for (int f1 = 0; f1 <= 3; ++f1) {
    EXPECT_EQ(admissible_pairs(f1), kFive);
    for (auto [k, d2] : admissible_pairs(f1)) EXPECT_LT((k - 2) * (d2 - 2), 4);
  }
  EXPECT_THROW(admissible_pairs(4), CountingError);
  EXPECT_FALSE(is_admissible(2, 7));
  EXPECT_FALSE(is_admissible(4, 4));
}

TEST(TotalFaces, Examples) {
  EXPECT_EQ(total_faces(3, 4, 0, 3, 3), Rational(4));
  EXPECT_EQ(total_faces(3, 8, 0, 4, 4), Rational(6));
  EXPECT_EQ(total_faces(3, 10, 1, 6, 4), Rational(7));
  EXPECT_FALSE(is_integral(total_faces(3, 5, 1, 4, 3)));
}

TEST(VerticesForOneDisparate, Examples) {
  EXPECT_EQ(vertices_for_one_disparate(3, 3, 6), Rational(6));
  EXPECT_EQ(vertices_for_one_disparate(3, 4, 6), Rational(10));
  EXPECT_EQ(vertices_for_one_disparate(4, 3, 4), Rational(7));
  EXPECT_EQ(vertices_for_one_disparate(3, 3, 4), Rational(14, 3));
  EXPECT_THROW(vertices_for_one_disparate(4, 4, 5), CountingError);
}

TEST(VerticesForOneDisparate, AgreesWithFaceIdentity) {
  for (auto [k, d2] : kFive) {
    for (int d1 = 3; d1 <= 100; ++d1) {
      EXPECT_EQ(vertices_for_one_disparate(k, d2, d1), vertices_from_face_identity(k, d2, 1, d1));
    }
  }
}

TEST(PlatonicVertexCount, Examples) {
  EXPECT_EQ(platonic_vertex_count(3, 3), 4);
  EXPECT_EQ(platonic_vertex_count(3, 4), 8);
  EXPECT_EQ(platonic_vertex_count(3, 5), 20);
  EXPECT_EQ(platonic_vertex_count(4, 3), 6);
  EXPECT_EQ(platonic_vertex_count(5, 3), 12);
}

TEST(DisparateDegreeSum, MatchesSingleFaceFormula) {
  for (auto [k, d2] : kFive) {
    for (int d1 = 3; d1 <= 30; ++d1) {
      const Rational v = vertices_for_one_disparate(k, d2, d1);
      if (!is_integral(v)) continue;
      EXPECT_EQ(disparate_degree_sum(k, d2, 1, static_cast<int>(v)), Rational(d1));
    }
  }
}

TEST(Signature, NormalizeMergesAndOrders) {
  const auto sig = make_signature(3, {{4, 3}, {5, 2}, {4, 2}, {7, 0}});
  EXPECT_EQ(sig.faces, (std::vector<std::pair<int, int>>{{5, 2}, {4, 5}}));
  EXPECT_EQ(format_signature(sig), "(3; 5^2 4^5)");
}

TEST(Signature, ParseFormatRoundTrip) {
  for (const char* text : {"(3; 5^2 4^5)", "(4; 3^8)", "(5; 6^2 3^36)", "(3; 17^1 14^1 11^1 3^12)"}) {
    const auto sig = parse_signature(text);
    ASSERT_TRUE(sig) << text;
    EXPECT_EQ(format_signature(*sig), text);
  }
  const auto bare = parse_signature("(3;6 3^4)");
  ASSERT_TRUE(bare);
  EXPECT_EQ(format_signature(*bare), "(3; 6^1 3^4)");
  EXPECT_FALSE(parse_signature("3; 4^6"));
  EXPECT_FALSE(parse_signature("(3; 4^)"));
  EXPECT_FALSE(parse_signature("(3; 4^6) x"));
}

TEST(Signature, OfMap) {
  const auto sig = signature_of(generate_family(FamilyId::kPrism, 5));
  EXPECT_EQ(format_signature(sig), "(3; 5^2 4^5)");
  EXPECT_EQ(parse_signature(format_signature(sig)), sig);
}

TEST(Feasibility, Examples) {
  // Five faces in total on six vertices: one hexagon and four triangles.
  EXPECT_TRUE(feasibility_check(make_signature(3, {{6, 1}, {3, 4}}), 6).feasible);
  for (int n = 1; n <= 12; ++n) {
    for (int v = 4; v <= 14; ++v) {
      const auto f = feasibility_check(make_signature(3, {{4, 1}, {3, n}}), v);
      EXPECT_FALSE(f.feasible);
      EXPECT_EQ(f.identity, identity::kOneDisparateIntegral);
      EXPECT_EQ(f.describe(), "INFEASIBLE: Eq.5 non-integral (14/3)");
    }
  }
  EXPECT_TRUE(feasibility_check(make_signature(3, {{3, 4}}), 4).feasible);
}

TEST(Feasibility, NamedFailures) {
  EXPECT_EQ(feasibility_check(make_signature(3, {{3, 4}}), 5).identity, identity::kHandshakeParity);
  EXPECT_EQ(feasibility_check(make_signature(3, {{3, 5}}), 4).identity, identity::kFaceCount);
  EXPECT_EQ(feasibility_check(make_signature(3, {{6, 1}, {3, 4}}), 8).identity,
            identity::kOneDisparateMismatch);
  EXPECT_EQ(feasibility_check(make_signature(4, {{4, 2}, {4, 4}}), 6).identity, identity::kFaceIdentity);
  EXPECT_EQ(feasibility_check(make_signature(3, {{2, 3}}), 2).identity, identity::kFaceDegree);
  EXPECT_EQ(feasibility_check(make_signature(4, {{5, 1}, {4, 8}}), 8).identity, identity::kAdmissible);
}

TEST(Feasibility, RealMapsPass) {
  for (auto id : kAllPlatonic) {
    const auto m = generate_platonic(id);
    EXPECT_TRUE(feasibility_check(signature_of(m), m.vertex_count()).feasible);
  }
  for (auto id : kAllFamilies) {
    if (id == FamilyId::kCycle) continue;
    const auto m = generate_family(id, family_info(id).d_min + 1);
    const auto f = feasibility_check(signature_of(m), m.vertex_count());
    EXPECT_TRUE(f.feasible) << family_info(id).name << ": " << f.describe();
  }
  for (const auto& fx : f3_fixtures()) {
    const auto f = feasibility_check(signature_of(fx.map), fx.map.vertex_count());
    EXPECT_TRUE(f.feasible) << fx.name << ": " << f.describe();
  }
}

TEST(Feasibility, CellWithOneDisparateFace) {
  EXPECT_TRUE(feasibility_of_cell(3, 3, {6}, 6).feasible);
  EXPECT_EQ(feasibility_of_cell(3, 3, {4}, 6).identity, identity::kOneDisparateIntegral);
  EXPECT_EQ(feasibility_of_cell(3, 4, {7}, 11).identity, identity::kHandshakeParity);
  EXPECT_TRUE(feasibility_of_cell(3, 4, {3, 3}, 6).feasible);
}
