#include <doctest.h>

#include <algorithm>
#include <random>

#include "quiverdom/quiver.hpp"

using namespace quiverdom;

namespace {

Quiver two_loops() {
  return Quiver({"1"}, {{"x", 0, 0}, {"y", 0, 0}});
}

Quiver a2() { return Quiver({"1", "2"}, {{"a", 0, 1}}); }

Quiver cycle3() {
  return Quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}});
}

Quiver random_quiver(std::mt19937& rng, int max_vertices, int max_arrows) {
  std::uniform_int_distribution<int> rdist(1, max_vertices);
  int r = rdist(rng);
  std::uniform_int_distribution<int> adist(0, max_arrows);
  int m = adist(rng);
  std::vector<std::string> verts;
  for (int v = 0; v < r; ++v) verts.push_back("v" + std::to_string(v));
  std::vector<Arrow> arrows;
  std::uniform_int_distribution<int> vdist(0, r - 1);
  for (int a = 0; a < m; ++a)
    arrows.push_back({"a" + std::to_string(a), vdist(rng), vdist(rng)});
  return Quiver(std::move(verts), std::move(arrows));
}

// reference check: does sigma satisfy B[i][j] == B[j][sigma(i)] for all i, j?
bool transpose_perm_works(const IntGrid& B, const std::vector<int>& sigma) {
  int r = static_cast<int>(B.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (B[i][j] != B[j][sigma[i]]) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("quiver");

TEST_CASE("construction and lookups") {
  Quiver q = cycle3();
  CHECK(q.vertex_count() == 3);
  CHECK(q.arrow_count() == 3);
  CHECK(q.vertex_index("2") == 1);
  CHECK(q.arrow_index("c") == 2);
  CHECK_THROWS_AS(q.vertex_index("zz"), QuiverError);
  CHECK_THROWS_AS(q.arrow_index("zz"), QuiverError);
  CHECK(q.arrows_from(0) == std::vector<int>{0});
  CHECK(q.arrows_into(0) == std::vector<int>{2});

  CHECK_THROWS_AS(Quiver({"1"}, {{"a", 0, 1}}), QuiverError);   // endpoint out of range
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), QuiverError);         // duplicate vertex name
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", 0, 0}, {"a", 0, 0}}), QuiverError);
}

TEST_CASE("incidence matrix counts arrows source to target") {
  // B[j][i] = number of arrows i -> j
  Quiver q({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}, {"c", 1, 0}, {"l", 1, 1}});
  IntGrid B = incidence_matrix(q);
  CHECK(B == IntGrid{{0, 1}, {2, 1}});
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(a2()));
  CHECK_FALSE(is_strongly_connected(a2()));
  CHECK(is_strongly_connected(cycle3()));
  CHECK(is_strongly_connected(two_loops()));

  Quiver disjoint({"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 3, 2}});
  CHECK_FALSE(is_connected(disjoint));
  auto comps = connected_components(disjoint);
  CHECK(comps == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  Quiver lonely({"1"}, {});
  CHECK(is_connected(lonely));
  CHECK(is_strongly_connected(lonely));
}

TEST_CASE("degree profile") {
  DegreeProfile d = degree_profile(cycle3());
  CHECK(d.outdeg == std::vector<long>{1, 1, 1});
  CHECK(d.indeg == std::vector<long>{1, 1, 1});
  CHECK(d.min_out == 1);
  CHECK_FALSE(d.all_out_ge2);

  Quiver dbl = double_quiver(cycle3());
  DegreeProfile dd = degree_profile(dbl);
  CHECK(dd.all_out_ge2);
  CHECK(dd.all_in_ge2);
}

TEST_CASE("double and opposite quivers") {
  Quiver d = double_quiver(a2());
  CHECK(d.arrow_count() == 2);
  CHECK(d.arrow(0).name == "a");
  CHECK(d.arrow(1).name == "a*");
  CHECK(d.arrow(1).src == 1);
  CHECK(d.arrow(1).tgt == 0);

  Quiver op = opposite_quiver(cycle3());
  CHECK(op.arrow(0).name == "a*");
  CHECK(op.arrow(0).src == 1);
  CHECK(op.arrow(0).tgt == 0);
  CHECK(op.vertex_names() == cycle3().vertex_names());
}

TEST_CASE("incidence transpose permutation, pinned cases") {
  // symmetric incidence: identity works and is lexicographically least
  IntGrid sym{{0, 1}, {1, 0}};
  auto s = incidence_transpose_permutation(sym);
  REQUIRE(s.has_value());
  CHECK(*s == std::vector<int>{0, 1});

  // directed 3-cycle: rotation i -> i+1 mod 3
  IntGrid B = incidence_matrix(cycle3());
  auto rot = incidence_transpose_permutation(B);
  REQUIRE(rot.has_value());
  CHECK(*rot == std::vector<int>{1, 2, 0});
  CHECK(transpose_perm_works(B, *rot));

  // single arrow: no permutation can exist
  CHECK_FALSE(incidence_transpose_permutation(incidence_matrix(a2())).has_value());

  // empty quiver edge case
  auto e = incidence_transpose_permutation(IntGrid{});
  REQUIRE(e.has_value());
  CHECK(e->empty());
}

TEST_CASE("incidence transpose permutation agrees with brute force") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<long> edist(0, 2);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> rdist(1, 5);
    int r = rdist(rng);
    IntGrid B(r, std::vector<long>(r, 0));
    for (auto& row : B)
      for (auto& x : row) x = edist(rng);
    auto got = incidence_transpose_permutation(B);

    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::optional<std::vector<int>> want;
    do {
      if (transpose_perm_works(B, perm)) {
        want = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(got == want);
  }
}

TEST_CASE("induced subquiver") {
  Quiver q({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 2}});
  Subquiver s = induced_subquiver(q, {1, 2});
  CHECK(s.quiver.vertex_count() == 2);
  CHECK(s.quiver.arrow_count() == 2);  // b and the loop c survive
  CHECK(s.vertex_of_new == std::vector<int>{1, 2});
  CHECK(s.new_of_vertex == std::vector<int>{-1, 0, 1});
  CHECK(s.new_of_arrow == std::vector<int>{-1, 0, 1});
  CHECK(s.quiver.arrow(0).name == "b");
  CHECK(s.quiver.arrow(0).src == 0);
  CHECK(s.quiver.arrow(0).tgt == 1);
}

TEST_SUITE_END();
