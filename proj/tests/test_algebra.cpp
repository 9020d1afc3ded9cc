#include <doctest.h>

#include <memory>
#include <random>

#include "quiverdom/algebra.hpp"

using namespace quiverdom;

namespace {

Quiver two_loops() { return Quiver({"1"}, {{"x", 0, 0}, {"y", 0, 0}}); }

// k<x,y>/(xy): basis in each degree is the words with no "xy" factor
QuadraticPresentation xy_zero(const FieldSpec& f) {
  return QuadraticPresentation(f, two_loops(), {{{Scalar::one(f), {0, 1}}}});
}

// exterior-type algebra on two variables: x**2, xy + yx, y**2
QuadraticPresentation exterior2(const FieldSpec& f) {
  return QuadraticPresentation(
      f, two_loops(),
      {{{Scalar::one(f), {0, 0}}},
       {{Scalar::one(f), {0, 1}}, {Scalar::one(f), {1, 0}}},
       {{Scalar::one(f), {1, 1}}}});
}

// commutative polynomial relations on two variables: xy - yx
QuadraticPresentation poly2(const FieldSpec& f) {
  return QuadraticPresentation(
      f, two_loops(), {{{Scalar::one(f), {0, 1}}, {-Scalar::one(f), {1, 0}}}});
}

QuadraticPresentation random_presentation(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> rdist(1, 3), adist(1, 4);
  int r = rdist(rng);
  int m = adist(rng);
  std::vector<std::string> verts;
  for (int v = 0; v < r; ++v) verts.push_back("v" + std::to_string(v));
  std::vector<Arrow> arrows;
  std::uniform_int_distribution<int> vdist(0, r - 1);
  for (int a = 0; a < m; ++a)
    arrows.push_back({"a" + std::to_string(a), vdist(rng), vdist(rng)});
  Quiver q(verts, arrows);

  // collect length-2 composable paths, then take random linear combinations per corner
  std::vector<Path> quad;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (q.arrow(a).src == q.arrow(b).tgt) quad.push_back({a, b});
  std::vector<std::vector<RelationTerm>> rels;
  std::uniform_int_distribution<int> cdist(-2, 2), ndist(0, 3);
  int nrel = ndist(rng);
  for (int k = 0; k < nrel && !quad.empty(); ++k) {
    // pick one corner, combine the paths inside it
    std::uniform_int_distribution<std::size_t> pick(0, quad.size() - 1);
    const Path& seed = quad[pick(rng)];
    int s = q.arrow(seed[1]).src, t = q.arrow(seed[0]).tgt;
    std::vector<RelationTerm> rel;
    for (const Path& p : quad)
      if (q.arrow(p[1]).src == s && q.arrow(p[0]).tgt == t) {
        int c = cdist(rng);
        if (c != 0) rel.push_back({Scalar::of_int(f, c), p});
      }
    if (!rel.empty()) rels.push_back(std::move(rel));
  }
  return QuadraticPresentation(f, q, rels);
}

}  // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("presentation validation") {
  auto Q = FieldSpec::rationals();
  Quiver q = two_loops();
  // wrong degree
  CHECK_THROWS_AS(QuadraticPresentation(Q, q, {{{Scalar::one(Q), {0}}}}),
                  PresentationError);
  CHECK_THROWS_AS(QuadraticPresentation(Q, q, {{{Scalar::one(Q), {0, 1, 0}}}}),
                  PresentationError);
  // non-composable path on a non-loop quiver
  Quiver a2({"1", "2"}, {{"a", 0, 1}});
  CHECK_THROWS_AS(QuadraticPresentation(Q, a2, {{{Scalar::one(Q), {0, 0}}}}),
                  PresentationError);

  // terms in different corners split into separate relations
  Quiver h({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}, {"d", 0, 2}});
  // b·a runs 1 -> 3, d·c runs 3 -> 3... pick two composable pairs in distinct corners
  QuadraticPresentation mixed(
      Q, h, {{{Scalar::one(Q), {1, 0}}, {Scalar::one(Q), {3, 2}}}});
  CHECK(mixed.relation_count() == 2);

  // duplicate paths accumulate; cancellation drops the relation
  QuadraticPresentation cancel(
      Q, q, {{{Scalar::one(Q), {0, 1}}, {-Scalar::one(Q), {0, 1}}}});
  CHECK(cancel.relation_count() == 0);
}

TEST_CASE("word algebra with one forbidden factor") {
  auto Q = FieldSpec::rationals();
  auto pres = xy_zero(Q);
  CHECK(pres.relation_strings() == std::vector<std::string>{"x·y"});

  auto alg = TruncatedGradedAlgebra::build(pres, 4);
  for (int n = 0; n <= 4; ++n) CHECK(alg.total_dim(n) == n + 1);
  CHECK_FALSE(alg.graded_length().has_value());

  // degree-2 quotient basis is path-labelled
  CHECK(alg.basis_label(2, 0, 0, 0) == "x·x");
  CHECK(alg.basis_label(2, 0, 0, 1) == "y·x");
  CHECK(alg.basis_label(2, 0, 0, 2) == "y·y");

  // x·y = 0, y·x is a basis word
  AlgebraElement x = alg.basis_element(1, 0, 0, 0), y = alg.basis_element(1, 0, 0, 1);
  CHECK(alg.multiply(x, y).coords.is_zero());
  CHECK(alg.element_label(alg.multiply(y, x)) == "y·x");
  // ideal and quotient dimensions add up to the free algebra
  for (int n = 2; n <= 4; ++n)
    CHECK(alg.ideal_span(n, 0, 0).cols() + alg.dim(n, 0, 0) == (1L << n));
}

TEST_CASE("quadratic dual of the forbidden-factor algebra") {
  auto Q = FieldSpec::rationals();
  auto dual = quadratic_dual(xy_zero(Q));
  CHECK(dual.relation_strings() ==
        std::vector<std::string>{"x*·x*", "x*·y*", "y*·y*"});

  auto lam = TruncatedGradedAlgebra::build(dual, 4);
  CHECK(lam.total_dim(0) == 1);
  CHECK(lam.total_dim(1) == 2);
  CHECK(lam.total_dim(2) == 1);
  CHECK(lam.total_dim(3) == 0);
  REQUIRE(lam.graded_length().has_value());
  CHECK(*lam.graded_length() == 3);
  CHECK(lam.basis_label(2, 0, 0, 0) == "y*·x*");
}

TEST_CASE("dual pairs: exterior and polynomial") {
  auto Q = FieldSpec::rationals();
  auto ext = TruncatedGradedAlgebra::build(exterior2(Q), 4);
  CHECK(ext.total_dim(0) == 1);
  CHECK(ext.total_dim(1) == 2);
  CHECK(ext.total_dim(2) == 1);
  REQUIRE(ext.graded_length().has_value());
  CHECK(*ext.graded_length() == 3);

  // the dual of the exterior relations presents the polynomial ring and vice versa
  auto poly = TruncatedGradedAlgebra::build(quadratic_dual(exterior2(Q)), 5);
  for (int n = 0; n <= 5; ++n) CHECK(poly.total_dim(n) == n + 1);

  auto ext2 = TruncatedGradedAlgebra::build(quadratic_dual(poly2(Q)), 4);
  CHECK(ext2.total_dim(1) == 2);
  CHECK(ext2.total_dim(2) == 1);
  CHECK(ext2.total_dim(3) == 0);
}

TEST_CASE("double dual is the identity on relation spans") {
  auto Q = FieldSpec::rationals();
  CHECK(double_dual_roundtrip(xy_zero(Q)));
  CHECK(double_dual_roundtrip(exterior2(Q)));
  CHECK(double_dual_roundtrip(poly2(Q)));

  for (long p : {2L, 3L}) {
    auto F = FieldSpec::prime(p);
    std::mt19937 rng(911 + p);
    for (int t = 0; t < 20; ++t) CHECK(double_dual_roundtrip(random_presentation(F, rng)));
  }
}

TEST_CASE("doubled-quiver presentation with the mesh relations") {
  auto Q = FieldSpec::rationals();
  Quiver a2({"1", "2"}, {{"a", 0, 1}});
  auto pres = preprojective_presentation(a2, Q);
  CHECK(pres.quiver().arrow_count() == 2);
  CHECK(pres.relation_strings() == std::vector<std::string>{"a*·a", "-a·a*"});

  auto pi = TruncatedGradedAlgebra::build(pres, 4);
  CHECK(pi.total_dim(0) == 2);
  CHECK(pi.total_dim(1) == 2);
  CHECK(pi.total_dim(2) == 0);
  REQUIRE(pi.graded_length().has_value());
  CHECK(*pi.graded_length() == 2);
}

TEST_CASE("restriction to a component") {
  auto Q = FieldSpec::rationals();
  Quiver two({"1", "2"}, {{"x", 0, 0}, {"y", 0, 0}, {"z", 1, 1}});
  QuadraticPresentation pres(
      Q, two, {{{Scalar::one(Q), {0, 1}}}, {{Scalar::one(Q), {2, 2}}}});
  auto sub = restrict_presentation(pres, {0});
  CHECK(sub.quiver().vertex_count() == 1);
  CHECK(sub.quiver().arrow_count() == 2);
  CHECK(sub.relation_strings() == std::vector<std::string>{"x·y"});
  auto sub2 = restrict_presentation(pres, {1});
  CHECK(sub2.relation_strings() == std::vector<std::string>{"z·z"});
}

TEST_CASE("hilbert data and series strings") {
  auto Q = FieldSpec::rationals();
  auto alg = TruncatedGradedAlgebra::build(xy_zero(Q), 4);
  HilbertData h = hilbert(alg);
  REQUIRE(h.grids.size() == 5);
  CHECK(h.grids[2][0][0] == 3);
  CHECK(h.row_sums[0] == std::vector<long>{1, 2, 3, 4, 5});
  CHECK(series_string(h.row_sums[0]) == "1 + 2t + 3t^2 + 4t^3 + 5t^4");
  CHECK(series_string({1, 1, 0, 0}) == "1 + t");
  CHECK(series_string({0}) == "0");
}

TEST_CASE("associativity on every composable basis triple") {
  auto F2 = FieldSpec::prime(2);
  for (const auto& pres : {xy_zero(F2), exterior2(F2), preprojective_presentation(
                               Quiver({"1", "2"}, {{"a", 0, 1}}), F2)}) {
    auto alg = TruncatedGradedAlgebra::build(pres, 4);
    int r = alg.vertex_count();
    for (int dx = 1; dx <= 2; ++dx)
      for (int dy = 1; dy <= 2; ++dy)
        for (int dz = 1; dz + dx + dy <= 4; ++dz)
          for (int sx = 0; sx < r; ++sx)
            for (int tx = 0; tx < r; ++tx)
              for (int sy = 0; sy < r; ++sy)
                for (int sz = 0; sz < r; ++sz) {
                  for (int i = 0; i < alg.dim(dx, sx, tx); ++i)
                    for (int j = 0; j < alg.dim(dy, sy, sx); ++j)
                      for (int k = 0; k < alg.dim(dz, sz, sy); ++k) {
                        auto x = alg.basis_element(dx, sx, tx, i);
                        auto y = alg.basis_element(dy, sy, sx, j);
                        auto z = alg.basis_element(dz, sz, sy, k);
                        auto lhs = alg.multiply(alg.multiply(x, y), z);
                        auto rhs = alg.multiply(x, alg.multiply(y, z));
                        CHECK(lhs.coords == rhs.coords);
                      }
                }
  }
}

TEST_CASE("identity elements act as units") {
  auto Q = FieldSpec::rationals();
  auto alg = TruncatedGradedAlgebra::build(exterior2(Q), 3);
  auto e = alg.basis_element(0, 0, 0, 0);
  auto x = alg.basis_element(1, 0, 0, 0);
  CHECK(alg.multiply(e, x).coords == x.coords);
  CHECK(alg.multiply(x, e).coords == x.coords);
}

TEST_CASE("table-backed algebra multiplies through stored structure constants") {
  auto Q = FieldSpec::rationals();
  // k[x]/(x^2): dims 1, 1; x*x = 0
  TruncatedGradedAlgebra::Tables t;
  t.field = Q;
  t.vertex_count = 1;
  t.max_degree = 2;
  t.dims = {{{1}}, {{1}}, {{0}}};
  t.products[{1, 1, 0, 0, 0}] = Matrix(Q, 0, 1);
  auto alg = TruncatedGradedAlgebra::from_tables(t);
  CHECK(alg.dim(1, 0, 0) == 1);
  REQUIRE(alg.graded_length().has_value());
  CHECK(*alg.graded_length() == 2);
  auto x = alg.basis_element(1, 0, 0, 0);
  CHECK(alg.multiply(x, x).coords.rows() == 0);
  CHECK_FALSE(alg.path_backed());
  CHECK_THROWS_AS(alg.quiver(), AlgebraError);
}

TEST_CASE("degree bound is enforced") {
  auto Q = FieldSpec::rationals();
  auto alg = TruncatedGradedAlgebra::build(xy_zero(Q), 3);
  auto x = alg.basis_element(2, 0, 0, 0);
  CHECK_THROWS_AS(alg.multiply(x, x), AlgebraError);
  CHECK_THROWS_AS(alg.dim(4, 0, 0), AlgebraError);
  CHECK(alg.dim(-1, 0, 0) == 0);
}

TEST_SUITE_END();
