#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mg/resolution.hpp"

using namespace mg;
using namespace mgtest;

TEST_CASE("Koszul resolution of the residue field") {
  GradedRing s = standardRing(2);
  FGModule k = monomialQuotient(s, {{1, 0}, {0, 1}});
  Resolution r = freeResolution(k);
  REQUIRE(r.projDim() == 2);
  CHECK(r.betti[0].size() == 1);
  CHECK(r.betti[1].size() == 2);
  CHECK(r.betti[2].size() == 1);
  CHECK(r.betti[2][0] == MultiDegree{2});
  CHECK(depthAB(k) == 0);
}

TEST_CASE("resolution of S/(x^2, xy)") {
  GradedRing s = standardRing(2);
  FGModule m = monomialQuotient(s, {{2, 0}, {1, 1}});
  Resolution r = freeResolution(m);
  REQUIRE(r.projDim() == 2);
  REQUIRE(r.betti[1].size() == 2);
  CHECK(r.betti[1][0] == MultiDegree{2});
  CHECK(r.betti[1][1] == MultiDegree{2});
  REQUIRE(r.betti[2].size() == 1);
  CHECK(r.betti[2][0] == MultiDegree{3});
  CHECK(depthAB(m) == 0);
  // Hilbert cross-check against direct monomial counting.
  for (Int n = 0; n <= 10; ++n)
    CHECK(r.eulerDimAt(MultiDegree{n}) ==
          monomialQuotientDim(s, {{2, 0}, {1, 1}}, MultiDegree{n}));
}

TEST_CASE("free modules resolve in length zero") {
  GradedRing s = standardRing(3);
  FGModule f = FGModule::freeModule(s, {MultiDegree{0}, MultiDegree{2}});
  Resolution r = freeResolution(f);
  CHECK(r.projDim() == 0);
  CHECK(depthAB(f) == 3);
}

TEST_CASE("depth via Auslander-Buchsbaum") {
  GradedRing s = standardRing(2);
  CHECK(depthAB(FGModule::quotientRing(s, {})) == 2);
  CHECK(depthAB(monomialQuotient(s, {{1, 0}, {0, 1}})) == 0);
  CHECK(depthAB(monomialQuotient(s, {{1, 0}})) == 1);

  // S/(x) (+) S: pd of a direct sum is the max of the pds.
  PolyMatrix p;
  p.rows = 2;
  p.cols.push_back({Poly::variable(s, 0), Poly::zero()});
  FGModule sum(s, {MultiDegree{0}, MultiDegree{0}}, p);
  CHECK(depthAB(sum) == 1);
}

TEST_CASE("non-minimal presentations are minimized first") {
  GradedRing s = standardRing(2);
  const Field& f = s.field();
  // Unit entry: generator e_0 is redundant; the pivot leaves coker = S(1)/(xy).
  PolyMatrix p;
  p.rows = 2;
  p.cols.push_back({Poly::constant(Scalar(1), 2, f), Poly::variable(s, 1)});
  p.cols.push_back({Poly::variable(s, 0), Poly::zero()});
  FGModule m(s, {MultiDegree{0}, MultiDegree{-1}}, p);
  Resolution r = freeResolution(m);
  CHECK(r.projDim() == 1);
  CHECK(r.betti[0].size() == 1);
  CHECK(r.betti[1].size() == 1);
  CHECK(depthAB(m) == 1);

  // Duplicate columns must not inflate the resolution.
  PolyMatrix dup;
  dup.rows = 1;
  dup.cols.push_back({Poly::variable(s, 0)});
  dup.cols.push_back({Poly::variable(s, 0)});
  FGModule d(s, {MultiDegree{0}}, dup);
  Resolution rd = freeResolution(d);
  CHECK(rd.projDim() == 1);
  CHECK(rd.betti[1].size() == 1);
}

TEST_CASE("zero module resolves to nothing") {
  GradedRing s = standardRing(2);
  PolyMatrix p;
  p.rows = 1;
  p.cols.push_back({Poly::constant(Scalar(1), 2, s.field())});
  FGModule zero(s, {MultiDegree{0}}, p);
  Resolution r = freeResolution(zero);
  CHECK(r.betti[0].empty());
  CHECK(depthAB(zero) == 2);  // sentinel for the zero module
}

TEST_CASE("bigraded resolutions carry multidegrees") {
  GradedRing bg = bigraded();
  FGModule m = monomialQuotient(bg, {{1, 1}});  // hypersurface
  Resolution r = freeResolution(m);
  REQUIRE(r.projDim() == 1);
  CHECK(r.betti[1][0] == MultiDegree{1, 1});
  CHECK(depthAB(m) == 1);

  FGModule k = monomialQuotient(bg, {{1, 0}, {0, 1}});
  Resolution rk = freeResolution(k);
  CHECK(rk.projDim() == 2);
  CHECK(rk.betti[2][0] == MultiDegree{1, 1});
}

TEST_CASE("weighted and triangular gradings resolve") {
  GradedRing w = bigraded(2, 3);
  FGModule m = monomialQuotient(w, {{1, 1}});
  CHECK(depthAB(m) == 1);

  GradedRing tri = triangularRing();
  FGModule t = monomialQuotient(tri, {{1, 1}, {0, 2}});
  Resolution r = freeResolution(t);
  CHECK(r.projDim() == 2);
  for (Int x = 0; x <= 6; ++x)
    for (Int y = 0; y <= x; ++y)
      CHECK(r.eulerDimAt(MultiDegree{x, y}) ==
            monomialQuotientDim(tri, {{1, 1}, {0, 2}}, MultiDegree{x, y}));
}

TEST_CASE("taylor-type quadric in four variables") {
  GradedRing s = standardRing(4);
  FGModule m = monomialQuotient(s, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  Resolution r = freeResolution(m);
  CHECK(r.projDim() == 2);  // complete intersection
  CHECK(depthAB(m) == 2);
  for (Int n = 0; n <= 8; ++n)
    CHECK(r.eulerDimAt(MultiDegree{n}) ==
          monomialQuotientDim(s, {{1, 1, 0, 0}, {0, 0, 1, 1}}, MultiDegree{n}));
}
