#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "mg/ring.hpp"
#include "mg/smatrix.hpp"

namespace mg {

/// Element of a free module: one polynomial per generator.
using PolyVec = std::vector<Poly>;

/// Homogeneous matrix between free modules, stored column-major. Column l is
/// the image of the l-th source generator.
struct PolyMatrix {
  int rows = 0;
  std::vector<PolyVec> cols;

  static PolyMatrix zero(int rows) { return PolyMatrix{rows, {}}; }
  int colCount() const { return static_cast<int>(cols.size()); }
};

/// Basis of one graded piece of a free module: pairs (generator, monomial).
struct PieceBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::unordered_map<size_t, int> index;  // hash(gen, monomial) -> position

  int dim() const { return static_cast<int>(elems.size()); }
  static size_t key(int gen, const Monomial& m) {
    return MonomialHash()(m) * 1000003u + static_cast<size_t>(gen);
  }
  int find(int gen, const Monomial& m) const {
    auto it = index.find(key(gen, m));
    return it == index.end() ? -1 : it->second;
  }
};

/// Free module ⊕_k S(-shift_k): generator e_k has degree shift_k; the piece
/// at n has basis {m e_k : deg(m) = n - shift_k}.
class FreeModule {
public:
  FreeModule(GradedRing ring, std::vector<MultiDegree> shifts);

  const GradedRing& ring() const;
  int rank() const;
  const std::vector<MultiDegree>& shifts() const;

  const PieceBasis& basisAt(const MultiDegree& n) const;  // cached
  long long dimAt(const MultiDegree& n) const;            // count only

  /// Coordinates of a homogeneous element of degree n.
  SparseVec expand(const PolyVec& v, const MultiDegree& n) const;

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

PolyVec mulVecMonomial(const PolyVec& v, const Monomial& m, const Field& f);
PolyVec mulVecPoly(const PolyVec& v, const Poly& p, const Field& f);
PolyVec addVec(const PolyVec& a, const PolyVec& b, const Field& f);
bool vecIsZero(const PolyVec& v);

/// One graded piece of a cokernel: ambient basis, the reduced echelon of the
/// relation image, and the non-pivot ambient positions which represent the
/// quotient basis.
struct QuotientPiece {
  PieceBasis ambient;
  Echelon image;
  std::vector<int> cosetIdx;                 // ambient positions, ascending
  std::unordered_map<int, int> cosetPos;     // ambient position -> coset index

  explicit QuotientPiece(const Field& f) : image(f) {}
  int dim() const { return static_cast<int>(cosetIdx.size()); }
  /// Reduce an ambient vector modulo the image and read off coset coords.
  SparseVec toCoset(const SparseVec& ambientVec) const;
};

/// A finitely generated multigraded module presented as the cokernel of a
/// homogeneous matrix P : F1 -> F0.
class FGModule {
public:
  FGModule(GradedRing ring, std::vector<MultiDegree> shifts, PolyMatrix p);
  /// Quotient of the rank-1 free module by an ideal.
  static FGModule quotientRing(GradedRing ring, const std::vector<Poly>& ideal);
  static FGModule freeModule(GradedRing ring, std::vector<MultiDegree> shifts);

  const GradedRing& ring() const;
  const FreeModule& ambient() const;
  const std::vector<MultiDegree>& shifts() const { return ambient().shifts(); }
  const PolyMatrix& presentation() const;
  const std::vector<MultiDegree>& relationDegrees() const;

  const QuotientPiece& pieceAt(const MultiDegree& n) const;  // cached
  long long dimAt(const MultiDegree& n) const;

  /// Labels of the coset basis of the piece at n.
  std::vector<std::pair<int, Monomial>> pieceBasisLabels(const MultiDegree& n) const;

  /// Matrix of multiplication by a homogeneous f on the chosen coset bases,
  /// target dim x source dim.
  SparseMatrix multMap(const Poly& f, const MultiDegree& n) const;

  /// Same presentation with every shift translated by -b, so that
  /// twist(b).pieceAt(n) = pieceAt(n + b).
  FGModule twist(const MultiDegree& b) const;

  /// True iff the homogeneous element v of F0 maps to zero in the cokernel.
  bool elementIsZero(const PolyVec& v, const MultiDegree& degree) const;

  /// M / image(extra columns).
  FGModule quotientByImage(const std::vector<PolyVec>& extraCols) const;
  /// Dimension at n of the submodule generated by the given columns,
  /// measured inside M (image modulo the presentation).
  long long imageDimAt(const std::vector<PolyVec>& gens,
                       const MultiDegree& n) const;

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

struct NilpotencyVerdict {
  bool nilpotent = false;
  int power = 0;  // minimal t with g^t M = 0, when nilpotent
  int cap = 0;
};

/// Nilpotent(t) iff g^t kills every generator of M, decided exactly through
/// presentation reduction; inconclusive once the cap is exhausted.
NilpotencyVerdict isNilpotentAction(const FGModule& m, const Poly& g, int powerCap);

/// True iff every generator of S_++^u kills every generator of M.
bool annihilatedByIrrelevantPower(const FGModule& m, Int u);

struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& what)
      : std::runtime_error(what) {}
};

struct VanishingReport {
  MultiDegree beta;
  bool verified = false;
  std::optional<MultiDegree> counterexample;
};

/// The vertex recursion applied to the componentwise max of the generator
/// degrees, then an exhaustive check that M_n = 0 whenever n* lies in the
/// predicted cone, for n in the box [-window, window]^r.
VanishingReport vanishingVertexCheck(const FGModule& m, Int u, Int window);

/// Lazy Veronese view: piece(n) = base piece at phi_a(n) + b.
class VeroneseView {
public:
  VeroneseView(FGModule base, MultiDegree a, MultiDegree b);

  const FGModule& base() const { return base_; }
  const MultiDegree& a() const { return a_; }
  const MultiDegree& b() const { return b_; }

  MultiDegree indexMap(const MultiDegree& n) const;
  long long dimAt(const MultiDegree& n) const;

private:
  FGModule base_;
  MultiDegree a_, b_;
};

/// All lattice points of [-w, w]^r in a fixed scan order.
std::vector<MultiDegree> windowBox(int rank, Int w);

}  // namespace mg
