#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mg {

using Int = long;

/// A point of Z^r. Entries may be negative: module degrees range over all of
/// Z^r even though ring degrees live in N^r.
class MultiDegree {
public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<Int> entries) : e_(std::move(entries)) {}
  MultiDegree(std::initializer_list<Int> entries) : e_(entries) {}
  static MultiDegree zero(int rank) { return MultiDegree(std::vector<Int>(rank, 0)); }
  static MultiDegree constant(int rank, Int value) {
    return MultiDegree(std::vector<Int>(rank, value));
  }

  int rank() const { return static_cast<int>(e_.size()); }
  Int operator[](int i) const { return e_[i]; }
  Int& operator[](int i) { return e_[i]; }
  const std::vector<Int>& entries() const { return e_; }

  MultiDegree operator+(const MultiDegree& o) const;
  MultiDegree operator-(const MultiDegree& o) const;
  MultiDegree operator-() const;
  /// Termwise product a.b.
  MultiDegree termwise(const MultiDegree& o) const;
  /// Termwise absolute value n*.
  MultiDegree star() const;

  bool operator==(const MultiDegree& o) const { return e_ == o.e_; }
  bool operator!=(const MultiDegree& o) const { return e_ != o.e_; }
  /// Lexicographic; used only as a deterministic container order.
  bool operator<(const MultiDegree& o) const { return e_ < o.e_; }

  /// Termwise comparisons (partial order on Z^r).
  bool geq(const MultiDegree& o) const;
  bool allNonNegative() const;
  bool allPositive() const;

  std::string str() const;

private:
  std::vector<Int> e_;
};

struct MultiDegreeHash {
  size_t operator()(const MultiDegree& d) const {
    size_t h = 1469598103934665603ull;
    for (Int v : d.entries()) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// The r x r upper triangular degree matrix G whose columns are the block
/// degrees gamma_1..gamma_r. Column i has zero entries below row i and a
/// positive diagonal entry, so G is nonsingular and everything can be solved
/// by back-substitution, exactly, over the rationals.
class DegreeMatrix {
public:
  explicit DegreeMatrix(std::vector<MultiDegree> columns);
  static DegreeMatrix identity(int r);
  static DegreeMatrix diagonal(std::vector<Int> diag);

  int rank() const { return r_; }
  const MultiDegree& column(int i) const { return cols_[i]; }
  Int entry(int row, int col) const { return cols_[col][row]; }
  Int diag(int i) const { return cols_[i][i]; }

  /// gamma_i = gamma_i^i e_i for every i.
  bool isAlmostStandard() const { return almostStandard_; }

  /// phi(n) = sum n_i gamma_i = G n.
  MultiDegree apply(const MultiDegree& n) const;
  /// phi_a(n) = phi(n . a); requires a > 0.
  MultiDegree applyScaled(const MultiDegree& a, const MultiDegree& n) const;

  /// Solves G x = target over Q by back-substitution.
  std::vector<mpq_class> solve(const MultiDegree& target) const;
  /// Solves G x = target over Z, if an integral solution exists.
  std::optional<std::vector<Int>> solveIntegral(const MultiDegree& target) const;

  bool operator==(const DegreeMatrix& o) const;

private:
  int r_;
  std::vector<MultiDegree> cols_;
  bool almostStandard_;
};

/// The cone C_beta: all points beta + sum lambda_i gamma_i of N^r with real
/// lambda_i >= 0. Membership is decided exactly over Q.
class ConeRegion {
public:
  ConeRegion(MultiDegree vertex, DegreeMatrix matrix);

  const MultiDegree& vertex() const { return vertex_; }
  const DegreeMatrix& matrix() const { return matrix_; }

  bool contains(const MultiDegree& n) const;

private:
  MultiDegree vertex_;
  DegreeMatrix matrix_;
};

/// Intersection of two cones over the same almost-standard matrix: the cone
/// with vertex the termwise maximum of the two vertices.
ConeRegion coneIntersect(const ConeRegion& c1, const ConeRegion& c2);

/// The vertex recursion: beta_i = u gamma_i^i + sum_{l>i} beta_l gamma_i^l
/// + alpha_i, computed from i = r down to 1.
MultiDegree betaVertex(Int u, const MultiDegree& alpha, const DegreeMatrix& g);

/// Minimal integer vector a with a_i >= (beta_i + b_i)/gamma_i^i and
/// a_i >= 1. For such a, star(phi_a(n) + b) lies in C_beta for all n.
/// Requires an almost-standard matrix and b >= beta.
MultiDegree veroneseRegion(const MultiDegree& beta, const MultiDegree& b,
                           const DegreeMatrix& g);

/// Gamma_M = union of the translates d^i + Gamma, Gamma the subgroup of Z^r
/// generated by the columns of G.
class GammaSupport {
public:
  GammaSupport(std::vector<MultiDegree> offsets, DegreeMatrix matrix);

  const std::vector<MultiDegree>& offsets() const { return offsets_; }
  const DegreeMatrix& matrix() const { return matrix_; }

  bool contains(const MultiDegree& n) const;

private:
  std::vector<MultiDegree> offsets_;
  DegreeMatrix matrix_;
};

/// A witness alpha in Gamma_M with alpha >= (c,...,c), alpha = d + G t and
/// alpha = beta + G n with n >= 0, together with its certificate (t, n).
struct GammaWitness {
  MultiDegree alpha;
  std::vector<Int> t;
  std::vector<Int> n;
  int offsetIndex = 0;
};

GammaWitness gammaWitness(const GammaSupport& supp, const MultiDegree& beta,
                          Int c);

}  // namespace mg
