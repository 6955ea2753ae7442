#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mg/multidegree.hpp"

using namespace mg;

TEST_CASE("phi is the matrix-vector product") {
  CHECK(DegreeMatrix::identity(2).apply({2, 3}) == MultiDegree{2, 3});
  DegreeMatrix g({MultiDegree{2, 0}, MultiDegree{1, 3}});
  CHECK(g.apply({1, 1}) == MultiDegree{3, 3});
  DegreeMatrix h({MultiDegree{1, 0}, MultiDegree{1, 1}});
  CHECK(h.apply({0, 2}) == MultiDegree{2, 2});
  CHECK_THROWS_AS(g.apply(MultiDegree{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("phi_a multiplies termwise first") {
  CHECK(DegreeMatrix::identity(2).applyScaled({2, 3}, {1, 1}) == MultiDegree{2, 3});
  DegreeMatrix g({MultiDegree{2, 0}, MultiDegree{1, 3}});
  for (Int x = -3; x <= 3; ++x)
    for (Int y = -3; y <= 3; ++y)
      CHECK(g.applyScaled({1, 1}, {x, y}) == g.apply({x, y}));
  CHECK(g.applyScaled({2, 1}, {1, 2}) == MultiDegree{6, 6});
  CHECK_THROWS_AS(g.applyScaled({0, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("star takes termwise absolute values") {
  CHECK(MultiDegree{-2, 3}.star() == MultiDegree{2, 3});
  CHECK(MultiDegree{0, 0}.star() == MultiDegree{0, 0});
  CHECK(MultiDegree{-1, -4}.star() == MultiDegree{1, 4});
}

TEST_CASE("cone membership by back-substitution") {
  ConeRegion c1(MultiDegree{4, 6}, DegreeMatrix::diagonal({2, 3}));
  CHECK(c1.contains({6, 9}));
  CHECK_FALSE(c1.contains({3, 9}));
  ConeRegion c2(MultiDegree{0, 0},
                DegreeMatrix({MultiDegree{1, 0}, MultiDegree{1, 2}}));
  CHECK(c2.contains({3, 2}));  // lambda = (2, 1)
  CHECK_FALSE(c2.contains({0, 2}));
}

TEST_CASE("cone membership holds on the lattice span of the cone") {
  std::vector<DegreeMatrix> mats = {
      DegreeMatrix::identity(1),
      DegreeMatrix::diagonal({3}),
      DegreeMatrix({MultiDegree{2, 0}, MultiDegree{1, 3}}),
      DegreeMatrix::identity(3),
      DegreeMatrix({MultiDegree{1, 0, 0}, MultiDegree{2, 1, 0},
                    MultiDegree{1, 1, 2}}),
  };
  for (const auto& g : mats) {
    int r = g.rank();
    MultiDegree beta = MultiDegree::constant(r, 2);
    ConeRegion cone(beta, g);
    std::vector<Int> lam(r, 0);
    while (true) {
      CHECK(cone.contains(beta + g.apply(MultiDegree(lam))));
      int i = r - 1;
      while (i >= 0 && lam[i] == 5) lam[i--] = 0;
      if (i < 0) break;
      ++lam[i];
    }
  }
}

TEST_CASE("almost-standard cones are termwise-order cones") {
  DegreeMatrix g = DegreeMatrix::diagonal({2, 3});
  MultiDegree beta{1, 2};
  ConeRegion cone(beta, g);
  for (Int x = -10; x <= 10; ++x)
    for (Int y = -10; y <= 10; ++y) {
      MultiDegree n{x, y};
      CHECK(cone.contains(n) == n.geq(beta));
    }
}

TEST_CASE("cone intersection takes the max vertex") {
  DegreeMatrix g = DegreeMatrix::identity(2);
  ConeRegion a(MultiDegree{1, 2}, g), b(MultiDegree{3, 0}, g);
  CHECK(coneIntersect(a, b).vertex() == MultiDegree{3, 2});
  CHECK(coneIntersect(a, a).vertex() == MultiDegree{1, 2});
  ConeRegion z(MultiDegree{0, 0}, g), w(MultiDegree{5, 5}, g);
  CHECK(coneIntersect(z, w).vertex() == MultiDegree{5, 5});
  DegreeMatrix tri({MultiDegree{1, 0}, MultiDegree{1, 1}});
  CHECK_THROWS_AS(
      coneIntersect(ConeRegion({0, 0}, tri), ConeRegion({0, 0}, tri)),
      std::invalid_argument);
}

TEST_CASE("vertex recursion") {
  CHECK(betaVertex(2, MultiDegree{3}, DegreeMatrix::diagonal({2})) ==
        MultiDegree{7});
  CHECK(betaVertex(1, MultiDegree{1, 1}, DegreeMatrix::identity(2)) ==
        MultiDegree{2, 2});
  DegreeMatrix g({MultiDegree{1, 0}, MultiDegree{1, 1}});
  CHECK(betaVertex(1, MultiDegree{0, 0}, g) == MultiDegree{2, 1});
}

TEST_CASE("vertex recursion dominates alpha and grows with u") {
  std::vector<DegreeMatrix> mats = {
      DegreeMatrix::diagonal({2, 3}),
      DegreeMatrix({MultiDegree{1, 0}, MultiDegree{2, 2}}),
      DegreeMatrix({MultiDegree{3, 0, 0}, MultiDegree{1, 1, 0},
                    MultiDegree{0, 2, 2}}),
  };
  for (const auto& g : mats) {
    int r = g.rank();
    MultiDegree alpha = MultiDegree::constant(r, 1);
    MultiDegree prev = betaVertex(0, alpha, g);
    CHECK(prev.geq(alpha));
    for (Int u = 1; u <= 4; ++u) {
      MultiDegree b = betaVertex(u, alpha, g);
      CHECK(b.geq(alpha));
      for (int i = 0; i < r; ++i) CHECK(b[i] > prev[i]);
      prev = b;
    }
  }
}

TEST_CASE("veronese region bound") {
  CHECK(veroneseRegion({2, 2}, {2, 2}, DegreeMatrix::identity(2)) ==
        MultiDegree{4, 4});
  CHECK(veroneseRegion({4, 6}, {4, 6}, DegreeMatrix::diagonal({2, 3})) ==
        MultiDegree{4, 4});
  CHECK(veroneseRegion({0, 0}, {0, 0}, DegreeMatrix::identity(2)) ==
        MultiDegree{1, 1});
  CHECK_THROWS_AS(veroneseRegion({2, 2}, {1, 2}, DegreeMatrix::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("veronese region soundness on a window") {
  for (Int g1 : {1, 2, 3})
    for (Int g2 : {1, 3}) {
      DegreeMatrix g = DegreeMatrix::diagonal({g1, g2});
      for (Int b1 = 0; b1 <= 3; ++b1)
        for (Int b2 = 0; b2 <= 3; ++b2) {
          MultiDegree beta{b1, b2};
          ConeRegion cone(beta, g);
          for (Int e1 = 0; e1 <= 2; ++e1)
            for (Int e2 = 0; e2 <= 2; ++e2) {
              MultiDegree b = beta + MultiDegree{e1, e2};
              MultiDegree a = veroneseRegion(beta, b, g);
              for (Int x = -10; x <= 10; ++x)
                for (Int y = -10; y <= 10; ++y) {
                  MultiDegree img = g.applyScaled(a, {x, y}) + b;
                  CHECK(cone.contains(img.star()));
                }
            }
        }
    }
}

TEST_CASE("veronese region first clause: no b >= beta needed off the axes") {
  // With every n_i nonzero, only a_i >= (beta_i+b_i)/gamma_i^i is required.
  DegreeMatrix g = DegreeMatrix::diagonal({2, 1});
  MultiDegree beta{3, 4};
  ConeRegion cone(beta, g);
  for (Int b1 = 0; b1 <= 2; ++b1)
    for (Int b2 = 0; b2 <= 2; ++b2) {
      MultiDegree b{b1, b2};  // deliberately below beta
      std::vector<Int> a(2);
      a[0] = std::max<Int>(1, (beta[0] + b[0] + g.diag(0) - 1) / g.diag(0));
      a[1] = std::max<Int>(1, (beta[1] + b[1] + g.diag(1) - 1) / g.diag(1));
      for (Int x = -6; x <= 6; ++x)
        for (Int y = -6; y <= 6; ++y) {
          if (x == 0 || y == 0) continue;
          MultiDegree img = g.applyScaled(MultiDegree(a), {x, y}) + b;
          CHECK(cone.contains(img.star()));
        }
    }
}

TEST_CASE("gamma witness satisfies all three conditions") {
  struct Case {
    GammaSupport supp;
    MultiDegree beta;
    Int c;
  };
  std::vector<Case> cases = {
      {GammaSupport({MultiDegree{0, 0}}, DegreeMatrix::identity(2)), {1, 1}, 3},
      {GammaSupport({MultiDegree{1, 2}}, DegreeMatrix::identity(2)), {1, 2}, 0},
      {GammaSupport({MultiDegree{1, 1}}, DegreeMatrix::diagonal({2, 2})), {3, 3}, 5},
      {GammaSupport({MultiDegree{2, 1}, MultiDegree{0, 0}},
                    DegreeMatrix({MultiDegree{1, 0}, MultiDegree{1, 2}})),
       {2, 2},
       4},
  };
  for (const auto& cs : cases) {
    GammaWitness w = gammaWitness(cs.supp, cs.beta, cs.c);
    CHECK(cs.supp.contains(w.alpha));
    CHECK(cs.supp.matrix().solveIntegral(w.alpha - cs.beta).has_value());
    CHECK(w.alpha.geq(MultiDegree::constant(cs.beta.rank(), cs.c)));
    for (Int ni : w.n) CHECK(ni >= 0);
    // certificate consistency
    CHECK(cs.supp.offsets()[w.offsetIndex] +
              cs.supp.matrix().apply(MultiDegree(w.t)) ==
          w.alpha);
    CHECK(cs.beta + cs.supp.matrix().apply(MultiDegree(w.n)) == w.alpha);
  }
}

TEST_CASE("gamma witness frozen examples") {
  GammaWitness w1 = gammaWitness(
      GammaSupport({MultiDegree{0, 0}}, DegreeMatrix::identity(2)), {1, 1}, 3);
  CHECK(w1.alpha == MultiDegree{3, 3});
  CHECK(w1.t == std::vector<Int>{3, 3});
  CHECK(w1.n == std::vector<Int>{2, 2});

  GammaWitness w2 = gammaWitness(
      GammaSupport({MultiDegree{1, 2}}, DegreeMatrix::identity(2)), {1, 2}, 0);
  CHECK(w2.alpha == MultiDegree{1, 2});
  CHECK(w2.t == std::vector<Int>{0, 0});

  GammaWitness w3 = gammaWitness(
      GammaSupport({MultiDegree{1, 1}}, DegreeMatrix::diagonal({2, 2})), {3, 3}, 5);
  CHECK(w3.alpha == MultiDegree{5, 5});

  // No offset congruent to beta modulo Gamma.
  CHECK_THROWS_AS(
      gammaWitness(
          GammaSupport({MultiDegree{0, 0}}, DegreeMatrix::diagonal({2, 2})),
          {1, 0}, 0),
      std::invalid_argument);
}

TEST_CASE("degree matrix validation") {
  CHECK_THROWS_AS(DegreeMatrix({MultiDegree{0, 0}, MultiDegree{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DegreeMatrix({MultiDegree{1, 1}, MultiDegree{0, 1}}),
                  std::invalid_argument);
  CHECK(DegreeMatrix::identity(3).isAlmostStandard());
  CHECK_FALSE(DegreeMatrix({MultiDegree{1, 0}, MultiDegree{1, 1}}).isAlmostStandard());
}
