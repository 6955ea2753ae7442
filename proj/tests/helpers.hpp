#pragma once

// Small builders shared by the test suites.

#include <string>
#include <vector>

#include "mg/module.hpp"
#include "mg/ring.hpp"

namespace mgtest {

using namespace mg;

/// k[x_1..x_mu], Z-graded, every variable of degree 1, one block.
inline GradedRing standardRing(int mu, Field f = Field::rationals()) {
  std::vector<RingVariable> vars;
  std::vector<int> blk;
  const char* names[] = {"x", "y", "z", "w", "v", "u"};
  for (int j = 0; j < mu; ++j) {
    vars.push_back({names[j], MultiDegree{1}});
    blk.push_back(j);
  }
  return GradedRing(f, vars, std::vector<std::vector<int>>{blk});
}

/// k[x], Z-graded, deg x = d.
inline GradedRing weightedLine(Int d, Field f = Field::rationals()) {
  return GradedRing(f, {{"x", MultiDegree{d}}},
                    std::vector<std::vector<int>>{{0}});
}

/// k[x, y] with deg x = (g1, 0), deg y = (0, g2); two blocks.
inline GradedRing bigraded(Int g1 = 1, Int g2 = 1, Field f = Field::rationals()) {
  return GradedRing(f,
                    {{"x", MultiDegree{g1, 0}}, {"y", MultiDegree{0, g2}}},
                    std::vector<std::vector<int>>{{0}, {1}});
}

/// k[x1, x2, y]: block 1 = {x1, x2} of degree (1,0), block 2 = {y} of (0,1).
inline GradedRing bigradedWide(Field f = Field::rationals()) {
  return GradedRing(f,
                    {{"x1", MultiDegree{1, 0}},
                     {"x2", MultiDegree{1, 0}},
                     {"y", MultiDegree{0, 1}}},
                    std::vector<std::vector<int>>{{0, 1}, {2}});
}

/// k[x, y] with deg x = (1,0), deg y = (1,1): triangular, not almost-standard.
inline GradedRing triangularRing(Field f = Field::rationals()) {
  return GradedRing(f,
                    {{"x", MultiDegree{1, 0}}, {"y", MultiDegree{1, 1}}},
                    std::vector<std::vector<int>>{{0}, {1}});
}

inline Monomial mono(const GradedRing& ring, std::vector<int> exps) {
  if (static_cast<int>(exps.size()) != ring.varCount())
    throw std::invalid_argument("mono: exponent count");
  return Monomial{std::move(exps)};
}

inline Poly pmono(const GradedRing& ring, std::vector<int> exps) {
  return Poly::monomial(mono(ring, std::move(exps)));
}

/// Quotient of the ring by monomial generators given as exponent vectors.
inline FGModule monomialQuotient(const GradedRing& ring,
                                 const std::vector<std::vector<int>>& gens) {
  std::vector<Poly> ideal;
  for (const auto& e : gens) ideal.push_back(pmono(ring, e));
  return FGModule::quotientRing(ring, ideal);
}

/// Brute-force Hilbert oracle for monomial quotients: monomials of degree n
/// divisible by no generator.
inline long long monomialQuotientDim(const GradedRing& ring,
                                     const std::vector<std::vector<int>>& gens,
                                     const MultiDegree& n) {
  long long count = 0;
  for (const Monomial& m : ring.monomialBasis(n)) {
    bool killed = false;
    for (const auto& g : gens) {
      bool divides = true;
      for (int j = 0; j < ring.varCount(); ++j)
        if (m.exps[j] < g[j]) {
          divides = false;
          break;
        }
      if (divides) {
        killed = true;
        break;
      }
    }
    if (!killed) ++count;
  }
  return count;
}

}  // namespace mgtest
