#include <gtest/gtest.h>

#include <set>

#include "nearplat/canonical.hpp"
#include "nearplat/families.hpp"
#include "nearplat/report.hpp"
#include "nearplat/search.hpp"

using namespace nearplat;

namespace {

SearchTask constrained(int k, int d2, int f1, std::vector<int> d1, int v_max, int v_min = 0) {
  return {k, d2, f1, std::move(d1), v_min, v_max, SearchPolicy::kFaceConstrained};
}

SearchTask unconstrained(int k, int v_max, int v_min = 0) {
  return {k, 0, 0, {}, v_min, v_max, SearchPolicy::kUnconstrained};
}

std::set<CanonicalCode> codes_at(const SearchReport& r, int v) {
  std::set<CanonicalCode> out;
  for (const auto& c : r.cells) {
    if (c.v != v) continue;
    for (const auto& w : c.witnesses) out.insert(w.code);
  }
  return out;
}

void expect_well_formed(const SearchReport& r) {
  for (const auto& c : r.cells) {
    std::set<CanonicalCode> seen;
    for (const auto& w : c.witnesses) {
      EXPECT_TRUE(seen.insert(w.code).second) << "duplicate witness";
      EXPECT_EQ(canonical_code(w.map), w.code);
      EXPECT_EQ(genus(w.map), 0);
      EXPECT_TRUE(is_regular(w.map, c.k));
      EXPECT_EQ(w.map.vertex_count(), c.v);
    }
    if (c.status == CellStatus::kPruned) {
      EXPECT_TRUE(c.witnesses.empty());
      EXPECT_FALSE(c.pruned_identity.empty());
    }
  }
}

}  // namespace

TEST(Search, TetrahedronIsTheOnlyCubicTriangulation) {
  const auto r = enumerate(constrained(3, 3, 0, {}, 4));
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].status, CellStatus::kComplete);
  ASSERT_EQ(r.cells[0].class_count(), 1);
  EXPECT_TRUE(isomorphic(r.cells[0].witnesses[0].map, generate_platonic(PlatonicId::kTetrahedron)));
}

TEST(Search, TriangularPrism) {
  const auto r = enumerate(constrained(3, 4, 2, {3}, 6));
  expect_well_formed(r);
  EXPECT_EQ(r.class_count(), 1);
  EXPECT_EQ(codes_at(r, 6), std::set<CanonicalCode>{canonical_code(generate_family(FamilyId::kPrism, 3))});
}

TEST(Search, NoHexagonWithCubicTriangles) {
  const auto r = enumerate(constrained(3, 3, 1, {6}, 6));
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].v, 6);
  EXPECT_EQ(r.cells[0].status, CellStatus::kComplete);
  EXPECT_EQ(r.cells[0].class_count(), 0);
}

TEST(Search, PlatonicSolidsFoundAtTheirVertexCount) {
  for (auto id : kAllPlatonic) {
    const auto& info = platonic_info(id);
    const int v = platonic_vertex_count(info.k, info.d2);
    if (v > 12) continue;
    const auto r = enumerate(constrained(info.k, info.d2, 0, {}, v, v));
    ASSERT_EQ(r.cells.size(), 1u) << info.name;
    ASSERT_EQ(r.cells[0].class_count(), 1) << info.name;
    EXPECT_EQ(r.cells[0].witnesses[0].code, canonical_code(generate_platonic(id)));
  }
}

TEST(Search, UnconstrainedSmallCounts) {
  // Cubic plane maps (simple, connected): 1, 1, 3, 9 for v = 4, 6, 8, 10.
  const auto cubic = enumerate(unconstrained(3, 10));
  expect_well_formed(cubic);
  EXPECT_EQ(codes_at(cubic, 4).size(), 1u);
  EXPECT_EQ(codes_at(cubic, 6).size(), 1u);
  EXPECT_EQ(codes_at(cubic, 8).size(), 3u);
  EXPECT_EQ(codes_at(cubic, 10).size(), 9u);
  const auto quartic = enumerate(unconstrained(4, 8));
  expect_well_formed(quartic);
  EXPECT_EQ(codes_at(quartic, 5).size(), 0u);
  EXPECT_EQ(codes_at(quartic, 6).size(), 1u);
  EXPECT_EQ(codes_at(quartic, 7).size(), 0u);
  EXPECT_EQ(codes_at(quartic, 8).size(), 1u);
}

TEST(Search, ConstrainedCellsPartitionTheUnconstrainedSet) {
  // For a fixed d2, each map with at most three faces of another degree lies
  // in exactly one f1 cell.
  struct Case {
    int k, v_max;
  };
  for (auto [k, v_max] : {Case{3, 10}, Case{4, 9}}) {
    const auto all = enumerate(unconstrained(k, v_max));
    for (const auto& [kk, d2] : admissible_pairs(0)) {
      if (kk != k) continue;
      for (int v = k + 1; v <= v_max; ++v) {
        std::multiset<CanonicalCode> got;
        for (int f1 = 0; f1 <= 3; ++f1) {
          for (const auto& c : codes_at(enumerate(constrained(k, d2, f1, {}, v, v)), v)) got.insert(c);
        }
        std::set<CanonicalCode> expected;
        for (const auto& c : codes_at(all, v)) {
          int other = 0;
          for (const auto& [deg, cnt] : signature_of(map_from_code(c)).faces) other += deg != d2 ? cnt : 0;
          if (other <= 3) expected.insert(c);
        }
        EXPECT_EQ(std::set<CanonicalCode>(got.begin(), got.end()), expected) << "k=" << k << " d2=" << d2 << " v=" << v;
        EXPECT_EQ(got.size(), expected.size()) << "k=" << k << " d2=" << d2 << " v=" << v;
      }
    }
  }
}

TEST(Search, PrunedCellsFailTheirIdentity) {
  std::vector<SearchReport> reports = {
      enumerate(constrained(3, 3, 1, {4, 5, 6, 7, 8, 9}, 14)),
      enumerate(constrained(3, 4, 1, {3, 5, 6, 7}, 12)),
      enumerate(constrained(3, 4, 2, {}, 12)),
      enumerate(constrained(3, 3, 0, {}, 12)),
      enumerate(constrained(4, 3, 3, {}, 10)),
  };
  int pruned = 0;
  for (const auto& r : reports) {
    const auto& t = r.tasks[0];
    for (const auto& c : r.cells) {
      if (c.status != CellStatus::kPruned) continue;
      ++pruned;
      Feasibility again;
      if (c.f1 == 1 && !t.d1.empty()) {
        const Rational vq = vertices_for_one_disparate(c.k, c.d2, c.d1.at(0));
        if (!is_integral(vq)) {
          EXPECT_EQ(c.pruned_identity, identity::kOneDisparateIntegral);
          continue;
        }
        again = feasibility_of_cell(c.k, c.d2, c.d1, c.v);
      } else if (c.f1 == 0) {
        again = feasibility_of_cell(c.k, c.d2, {}, c.v);
      } else {
        again = detail::cell_feasibility(c.k, c.d2, c.f1, t.d1, c.v);
      }
      EXPECT_FALSE(again.feasible);
      EXPECT_EQ(again.identity, c.pruned_identity);
    }
  }
  EXPECT_GT(pruned, 5);
}

TEST(Search, Lemma3PruningDoesNotChangeResults) {
  SearchOptions on;
  on.lemma3 = true;
  for (auto [k, d2, vmax] : std::vector<std::tuple<int, int, int>>{{3, 3, 12}, {3, 4, 12}, {4, 3, 11}}) {
    const auto task = constrained(k, d2, 1, {}, vmax);
    EXPECT_EQ(report_json(enumerate(task), false)["cells"], report_json(enumerate(task, on), false)["cells"]);
  }
}

TEST(Search, DeterministicAcrossThreadCounts) {
  SearchOptions one, three;
  three.threads = 3;
  for (const auto& task : {unconstrained(3, 12), constrained(3, 4, 2, {}, 12), constrained(4, 3, 2, {}, 10)}) {
    EXPECT_EQ(report_json(enumerate(task, one), false).dump(), report_json(enumerate(task, three), false).dump());
  }
}

TEST(Search, NodeBudgetYieldsUnknown) {
  SearchOptions tiny;
  tiny.budget_nodes = 10;
  const auto r = enumerate(unconstrained(3, 12, 12), tiny);
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].status, CellStatus::kUnknown);
  EXPECT_FALSE(r.complete());
  EXPECT_EQ(report_json(r)["complete"], false);
}

TEST(Search, RejectsBadTasks) {
  EXPECT_THROW(enumerate(constrained(2, 3, 0, {}, 6)), std::invalid_argument);
  EXPECT_THROW(enumerate(constrained(4, 4, 0, {}, 6)), std::invalid_argument);
  EXPECT_THROW(enumerate(constrained(3, 3, 4, {}, 6)), std::invalid_argument);
  EXPECT_THROW(enumerate(constrained(3, 3, 0, {}, 300)), std::invalid_argument);
}

TEST(Theorem, NoOneDisparateMapsUpToTheBounds) {
  const auto r = verify_theorem_one_disparate(default_theorem_bounds());
  EXPECT_TRUE(r.complete());
  EXPECT_EQ(r.class_count(), 0);
  EXPECT_EQ(r.tasks.size(), 5u);
  int searched = 0;
  for (const auto& c : r.cells) searched += c.status == CellStatus::kComplete;
  EXPECT_GT(searched, 10);
}

TEST(Theorem, Examples) {
  // (3,3,d1=6) at v=6 and (3,4,d1=6) at v=10.
  auto r = enumerate(constrained(3, 4, 1, {6}, 10));
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].v, 10);
  EXPECT_EQ(r.cells[0].status, CellStatus::kComplete);
  EXPECT_EQ(r.cells[0].class_count(), 0);
  r = enumerate(constrained(3, 3, 1, {4}, 14));
  ASSERT_EQ(r.cells.size(), 1u);
  EXPECT_EQ(r.cells[0].status, CellStatus::kPruned);
  EXPECT_EQ(r.cells[0].pruned_identity, identity::kOneDisparateIntegral);
  EXPECT_EQ(r.cells[0].v_text, "14/3");
}

TEST(Conjecture, SmallMapsAreFamilyMembers) {
  for (const auto& [k, d2] : admissible_pairs(2)) {
    const auto r = check_conjecture_equal_degrees(k, d2, 10);
    EXPECT_TRUE(r.complete());
    EXPECT_TRUE(r.unequal.empty()) << k << "," << d2;
    EXPECT_TRUE(r.unmatched.empty()) << k << "," << d2;
    for (const auto& m : r.members) EXPECT_TRUE(m.found) << m.family << " d=" << m.d;
  }
}

TEST(Conjecture, ExpectedMembersAppear) {
  auto has = [](const ConjectureReport& r, const std::string& fam, int d) {
    for (const auto& m : r.members) {
      if (m.family == fam && m.d == d) return m.found;
    }
    return false;
  };
  const auto cubic = check_conjecture_equal_degrees(3, 4, 10);
  EXPECT_TRUE(has(cubic, "prism", 3));
  EXPECT_TRUE(has(cubic, "prism", 4));
  EXPECT_TRUE(has(cubic, "prism", 5));
  const auto quartic = check_conjecture_equal_degrees(4, 3, 10);
  EXPECT_TRUE(has(quartic, "antiprism", 3));
  EXPECT_TRUE(has(quartic, "antiprism", 4));
  EXPECT_TRUE(has(quartic, "antiprism", 5));
  const auto tri = check_conjecture_equal_degrees(3, 3, 10);
  EXPECT_TRUE(has(tri, "tetra-thin-cycle", 2));
}
