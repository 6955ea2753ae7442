#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mg/field.hpp"
#include "mg/multidegree.hpp"

namespace mg {

/// A monomial is its exponent vector over the ring variables.
struct Monomial {
  std::vector<int> exps;

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator<(const Monomial& o) const { return exps < o.exps; }
  bool isOne() const;
  Monomial times(const Monomial& o) const;
  Monomial power(int t) const;
  std::string str(const std::vector<std::string>& names) const;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull;
    for (int v : m.exps) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct NonPositiveGrading : std::runtime_error {
  explicit NonPositiveGrading(const std::string& what)
      : std::runtime_error(what) {}
};

struct RingVariable {
  std::string name;
  MultiDegree degree;
};

/// A multigraded polynomial ring over an exact field: variables with
/// multidegrees in Z^q, an optional partition into r blocks of equal degree
/// (the gamma_i of the degree matrix), and a positivity functional theta with
/// theta . deg(x_j) > 0 for every j, which certifies that every graded piece
/// is a finite-dimensional vector space.
class GradedRing {
public:
  GradedRing(Field field, std::vector<RingVariable> vars,
             std::optional<std::vector<std::vector<int>>> blocks = std::nullopt);

  const Field& field() const;
  int gradingRank() const;              // q
  int varCount() const;                 // mu
  const std::vector<RingVariable>& vars() const;
  const MultiDegree& varDegree(int j) const;
  int varIndex(const std::string& name) const;  // -1 if absent

  bool hasBlocks() const;
  int blockCount() const;                         // r
  const std::vector<int>& block(int i) const;     // variable indices
  const DegreeMatrix& blockMatrix() const;        // gamma_1..gamma_r
  bool isAlmostStandard() const;

  /// The positivity certificate, scaled to integers.
  const std::vector<Int>& theta() const;
  Int weight(const MultiDegree& d) const;  // theta . d
  Int minVarWeight() const;
  Int maxVarWeight() const;

  MultiDegree monomialDegree(const Monomial& m) const;
  Monomial one() const;
  Monomial variable(int j) const;

  /// All monomials of multidegree exactly n, in descending lexicographic
  /// order on exponent vectors. Cached per degree; thread-safe.
  const std::vector<Monomial>& monomialBasis(const MultiDegree& n) const;
  /// |monomialBasis(n)| without materializing the list (memoized count).
  long long monomialCount(const MultiDegree& n) const;

  /// All distinct monomial degrees of weight <= cap, ordered by (weight,
  /// lex). This is the candidate-degree ladder for degreewise algorithms.
  std::vector<MultiDegree> degreeLadder(Int cap) const;

  /// Sum of all variable degrees; the canonical module is S(-sigma).
  MultiDegree sigma() const;

  /// One monomial per product over blocks of a degree-u monomial in the
  /// generators of the block ideal I_i (so together they generate S_++^u).
  std::vector<Monomial> irrelevantPowerGens(Int u) const;
  /// The block-product monomials x_{1,j_1} ... x_{r,j_r}.
  std::vector<Monomial> blockProducts() const;

  bool sameRingAs(const GradedRing& o) const { return d_ == o.d_; }

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

/// Returns a strictly positive functional for the given variable degrees if
/// one exists among the candidate scheme (block row sums, then all-ones),
/// else throws NonPositiveGrading.
std::vector<Int> checkPositive(
    const std::vector<RingVariable>& vars,
    const std::optional<DegreeMatrix>& blockMatrix);

/// Term list kept sorted in descending lex on exponents, coefficients
/// nonzero. Polynomials are plain values; the ring is passed where degrees
/// are needed.
class Poly {
public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly term(const Monomial& m, const Scalar& c, const Field& f);
  static Poly constant(const Scalar& c, int varCount, const Field& f);
  static Poly variable(const GradedRing& ring, int j);
  static Poly monomial(const Monomial& m) ;

  bool isZero() const { return terms_.empty(); }
  int termCount() const { return static_cast<int>(terms_.size()); }
  const std::vector<std::pair<Monomial, Scalar>>& terms() const { return terms_; }

  Poly plus(const Poly& o, const Field& f) const;
  Poly minus(const Poly& o, const Field& f) const;
  Poly timesScalar(const Scalar& c, const Field& f) const;
  Poly timesMonomial(const Monomial& m, const Field& f) const;
  Poly times(const Poly& o, const Field& f) const;
  Poly power(int t, const Field& f) const;

  bool isHomogeneous(const GradedRing& ring) const;
  /// Degree of a nonzero homogeneous polynomial.
  MultiDegree degree(const GradedRing& ring) const;
  /// Degree-zero part as a scalar, if the poly is a constant (or zero).
  std::optional<Scalar> asConstant() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  std::string str(const GradedRing& ring) const;

private:
  std::vector<std::pair<Monomial, Scalar>> terms_;
};

}  // namespace mg
