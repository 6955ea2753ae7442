#include "mg/module.hpp"

#include <algorithm>

namespace mg {

struct FreeModule::Data {
  GradedRing ring;
  std::vector<MultiDegree> shifts;
  mutable std::mutex mx;
  mutable std::unordered_map<MultiDegree, PieceBasis, MultiDegreeHash> cache;

  Data(GradedRing r, std::vector<MultiDegree> s)
      : ring(std::move(r)), shifts(std::move(s)) {}
};

FreeModule::FreeModule(GradedRing ring, std::vector<MultiDegree> shifts)
    : d_(std::make_shared<Data>(std::move(ring), std::move(shifts))) {
  for (const auto& s : d_->shifts)
    if (s.rank() != d_->ring.gradingRank())
      throw std::invalid_argument("FreeModule: shift rank mismatch");
}

const GradedRing& FreeModule::ring() const { return d_->ring; }
int FreeModule::rank() const { return static_cast<int>(d_->shifts.size()); }
const std::vector<MultiDegree>& FreeModule::shifts() const { return d_->shifts; }

const PieceBasis& FreeModule::basisAt(const MultiDegree& n) const {
  {
    std::lock_guard<std::mutex> lk(d_->mx);
    auto it = d_->cache.find(n);
    if (it != d_->cache.end()) return it->second;
  }
  PieceBasis b;
  for (int k = 0; k < rank(); ++k) {
    for (const Monomial& m : d_->ring.monomialBasis(n - d_->shifts[k])) {
      b.index[PieceBasis::key(k, m)] = b.dim();
      b.elems.emplace_back(k, m);
    }
  }
  std::lock_guard<std::mutex> lk(d_->mx);
  auto [it, inserted] = d_->cache.emplace(n, std::move(b));
  return it->second;
}

long long FreeModule::dimAt(const MultiDegree& n) const {
  long long total = 0;
  for (const auto& s : d_->shifts) total += d_->ring.monomialCount(n - s);
  return total;
}

SparseVec FreeModule::expand(const PolyVec& v, const MultiDegree& n) const {
  const PieceBasis& b = basisAt(n);
  const Field& f = d_->ring.field();
  std::vector<Scalar> dense(b.dim(), Scalar(0));
  for (size_t k = 0; k < v.size(); ++k) {
    for (const auto& [m, c] : v[k].terms()) {
      int pos = b.find(static_cast<int>(k), m);
      if (pos < 0)
        throw std::invalid_argument("FreeModule::expand: inhomogeneous element");
      dense[pos] = f.add(dense[pos], c);
    }
  }
  return sparseFromDense(dense, f);
}

PolyVec mulVecMonomial(const PolyVec& v, const Monomial& m, const Field& f) {
  PolyVec out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.timesMonomial(m, f));
  return out;
}

PolyVec mulVecPoly(const PolyVec& v, const Poly& p, const Field& f) {
  PolyVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.times(p, f));
  return out;
}

PolyVec addVec(const PolyVec& a, const PolyVec& b, const Field& f) {
  PolyVec out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i].plus(b[i], f));
  return out;
}

bool vecIsZero(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.isZero(); });
}

SparseVec QuotientPiece::toCoset(const SparseVec& ambientVec) const {
  SparseVec red = image.reduce(ambientVec);
  SparseVec out;
  for (const auto& [i, c] : red) {
    auto it = cosetPos.find(i);
    if (it == cosetPos.end())
      throw std::logic_error("QuotientPiece: residual hit a pivot position");
    out.emplace_back(it->second, c);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

struct FGModule::Data {
  GradedRing ring;
  FreeModule f0;
  PolyMatrix p;
  std::vector<MultiDegree> relDegrees;
  mutable std::mutex mx;
  mutable std::unordered_map<MultiDegree, std::shared_ptr<QuotientPiece>,
                             MultiDegreeHash>
      pieces;

  Data(GradedRing r, std::vector<MultiDegree> shifts, PolyMatrix pm)
      : ring(r), f0(r, std::move(shifts)), p(std::move(pm)) {}
};

FGModule::FGModule(GradedRing ring, std::vector<MultiDegree> shifts, PolyMatrix p)
    : d_(std::make_shared<Data>(std::move(ring), std::move(shifts), std::move(p))) {
  const auto& s0 = d_->f0.shifts();
  if (d_->p.rows != static_cast<int>(s0.size()))
    throw std::invalid_argument("FGModule: presentation row count mismatch");
  for (const auto& col : d_->p.cols) {
    if (static_cast<int>(col.size()) != d_->p.rows)
      throw std::invalid_argument("FGModule: ragged presentation column");
    // Column degree: every nonzero entry k must satisfy
    // deg(entry) + shift_k = column degree.
    std::optional<MultiDegree> deg;
    for (size_t k = 0; k < col.size(); ++k) {
      if (col[k].isZero()) continue;
      if (!col[k].isHomogeneous(d_->ring))
        throw std::invalid_argument("FGModule: inhomogeneous entry");
      MultiDegree dk = col[k].degree(d_->ring) + s0[k];
      if (deg && !(*deg == dk))
        throw std::invalid_argument("FGModule: column is not homogeneous");
      deg = dk;
    }
    d_->relDegrees.push_back(deg ? *deg : MultiDegree::zero(d_->ring.gradingRank()));
  }
}

FGModule FGModule::quotientRing(GradedRing ring, const std::vector<Poly>& ideal) {
  PolyMatrix p;
  p.rows = 1;
  for (const auto& g : ideal) p.cols.push_back(PolyVec{g});
  std::vector<MultiDegree> shifts{MultiDegree::zero(ring.gradingRank())};
  return FGModule(std::move(ring), std::move(shifts), std::move(p));
}

FGModule FGModule::freeModule(GradedRing ring, std::vector<MultiDegree> shifts) {
  PolyMatrix p;
  p.rows = static_cast<int>(shifts.size());
  return FGModule(std::move(ring), std::move(shifts), std::move(p));
}

const GradedRing& FGModule::ring() const { return d_->ring; }
const FreeModule& FGModule::ambient() const { return d_->f0; }
const PolyMatrix& FGModule::presentation() const { return d_->p; }
const std::vector<MultiDegree>& FGModule::relationDegrees() const {
  return d_->relDegrees;
}

const QuotientPiece& FGModule::pieceAt(const MultiDegree& n) const {
  {
    std::lock_guard<std::mutex> lk(d_->mx);
    auto it = d_->pieces.find(n);
    if (it != d_->pieces.end()) return *it->second;
  }
  const Field& f = d_->ring.field();
  auto qp = std::make_shared<QuotientPiece>(f);
  qp->ambient = d_->f0.basisAt(n);
  // Image of the presentation at degree n: every monomial multiple of every
  // column that lands in degree n.
  for (int l = 0; l < d_->p.colCount(); ++l) {
    const MultiDegree& cd = d_->relDegrees[l];
    for (const Monomial& m : d_->ring.monomialBasis(n - cd)) {
      PolyVec moved = mulVecMonomial(d_->p.cols[l], m, f);
      qp->image.insert(d_->f0.expand(moved, n));
    }
  }
  for (int i = 0; i < qp->ambient.dim(); ++i) {
    if (!qp->image.isPivot(i)) {
      qp->cosetPos[i] = static_cast<int>(qp->cosetIdx.size());
      qp->cosetIdx.push_back(i);
    }
  }
  std::lock_guard<std::mutex> lk(d_->mx);
  auto [it, inserted] = d_->pieces.emplace(n, std::move(qp));
  return *it->second;
}

long long FGModule::dimAt(const MultiDegree& n) const {
  if (d_->f0.dimAt(n) == 0) return 0;
  return pieceAt(n).dim();
}

std::vector<std::pair<int, Monomial>> FGModule::pieceBasisLabels(
    const MultiDegree& n) const {
  const QuotientPiece& qp = pieceAt(n);
  std::vector<std::pair<int, Monomial>> out;
  for (int i : qp.cosetIdx) out.push_back(qp.ambient.elems[i]);
  return out;
}

SparseMatrix FGModule::multMap(const Poly& f, const MultiDegree& n) const {
  if (!f.isHomogeneous(d_->ring))
    throw std::invalid_argument("multMap: inhomogeneous polynomial");
  const Field& fld = d_->ring.field();
  const QuotientPiece& src = pieceAt(n);
  if (f.isZero()) return SparseMatrix(0, src.dim());
  MultiDegree target = n + f.degree(d_->ring);
  const QuotientPiece& dst = pieceAt(target);
  SparseMatrix out(dst.dim(), src.dim());
  for (int c = 0; c < src.dim(); ++c) {
    auto [gen, mono] = src.ambient.elems[src.cosetIdx[c]];
    PolyVec v(d_->f0.rank(), Poly::zero());
    v[gen] = f.timesMonomial(mono, fld);
    SparseVec coords = dst.toCoset(d_->f0.expand(v, target));
    for (const auto& [r, val] : coords) out.set(r, c, val);
  }
  return out;
}

FGModule FGModule::twist(const MultiDegree& b) const {
  std::vector<MultiDegree> shifts;
  for (const auto& s : d_->f0.shifts()) shifts.push_back(s - b);
  return FGModule(d_->ring, std::move(shifts), d_->p);
}

bool FGModule::elementIsZero(const PolyVec& v, const MultiDegree& degree) const {
  if (vecIsZero(v)) return true;
  const QuotientPiece& qp = pieceAt(degree);
  return qp.image.contains(d_->f0.expand(v, degree));
}

FGModule FGModule::quotientByImage(const std::vector<PolyVec>& extraCols) const {
  PolyMatrix p = d_->p;
  for (const auto& c : extraCols) p.cols.push_back(c);
  return FGModule(d_->ring, d_->f0.shifts(), std::move(p));
}

long long FGModule::imageDimAt(const std::vector<PolyVec>& gens,
                               const MultiDegree& n) const {
  const Field& f = d_->ring.field();
  const QuotientPiece& qp = pieceAt(n);
  Echelon joint(f);
  for (const auto& row : qp.image.rows()) joint.insert(row);
  int base = joint.rank();
  for (const auto& g : gens) {
    MultiDegree gd = MultiDegree::zero(d_->ring.gradingRank());
    bool zero = true;
    for (size_t k = 0; k < g.size(); ++k) {
      if (!g[k].isZero()) {
        gd = g[k].degree(d_->ring) + d_->f0.shifts()[k];
        zero = false;
        break;
      }
    }
    if (zero) continue;
    for (const Monomial& m : d_->ring.monomialBasis(n - gd))
      joint.insert(d_->f0.expand(mulVecMonomial(g, m, f), n));
  }
  return joint.rank() - base;
}

NilpotencyVerdict isNilpotentAction(const FGModule& m, const Poly& g, int powerCap) {
  const GradedRing& ring = m.ring();
  const Field& f = ring.field();
  if (g.isZero() || ring.weight(g.degree(ring)) == 0)
    throw std::invalid_argument("isNilpotentAction: g must have positive weight");
  std::vector<int> alive;
  for (int k = 0; k < m.ambient().rank(); ++k) alive.push_back(k);
  Poly gt = Poly::constant(Scalar(1), ring.varCount(), f);
  for (int t = 1; t <= powerCap; ++t) {
    gt = gt.times(g, f);
    MultiDegree gd = gt.degree(ring);
    std::vector<int> still;
    for (int k : alive) {
      PolyVec v(m.ambient().rank(), Poly::zero());
      v[k] = gt;
      if (!m.elementIsZero(v, gd + m.shifts()[k])) still.push_back(k);
    }
    alive = std::move(still);
    if (alive.empty()) return NilpotencyVerdict{true, t, powerCap};
  }
  return NilpotencyVerdict{false, 0, powerCap};
}

bool annihilatedByIrrelevantPower(const FGModule& m, Int u) {
  const GradedRing& ring = m.ring();
  for (const Monomial& g : ring.irrelevantPowerGens(u)) {
    MultiDegree gd = ring.monomialDegree(g);
    for (int k = 0; k < m.ambient().rank(); ++k) {
      PolyVec v(m.ambient().rank(), Poly::zero());
      v[k] = Poly::monomial(g);
      if (!m.elementIsZero(v, gd + m.shifts()[k])) return false;
    }
  }
  return true;
}

VanishingReport vanishingVertexCheck(const FGModule& m, Int u, Int window) {
  const GradedRing& ring = m.ring();
  if (!ring.hasBlocks())
    throw std::invalid_argument("vanishingVertexCheck: ring has no blocks");
  if (!annihilatedByIrrelevantPower(m, u))
    throw PreconditionFailed("vanishingVertexCheck: S_++^u does not kill M");
  int r = ring.blockCount();
  std::vector<Int> alpha(r, 0);
  for (const auto& s : m.shifts())
    for (int i = 0; i < r; ++i) alpha[i] = std::max(alpha[i], s[i]);
  MultiDegree beta = betaVertex(u, MultiDegree(alpha), ring.blockMatrix());
  ConeRegion cone(beta, ring.blockMatrix());
  VanishingReport rep{beta, true, std::nullopt};
  for (const MultiDegree& n : windowBox(r, window)) {
    if (!cone.contains(n.star())) continue;
    if (m.dimAt(n) != 0) {
      rep.verified = false;
      rep.counterexample = n;
      return rep;
    }
  }
  return rep;
}

VeroneseView::VeroneseView(FGModule base, MultiDegree a, MultiDegree b)
    : base_(std::move(base)), a_(std::move(a)), b_(std::move(b)) {
  if (!a_.allPositive())
    throw std::invalid_argument("VeroneseView: a must be positive");
}

MultiDegree VeroneseView::indexMap(const MultiDegree& n) const {
  const GradedRing& ring = base_.ring();
  return ring.blockMatrix().applyScaled(a_, n) + b_;
}

long long VeroneseView::dimAt(const MultiDegree& n) const {
  return base_.dimAt(indexMap(n));
}

std::vector<MultiDegree> windowBox(int rank, Int w) {
  std::vector<MultiDegree> out;
  std::vector<Int> cur(rank, -w);
  while (true) {
    out.push_back(MultiDegree(cur));
    int i = rank - 1;
    while (i >= 0 && cur[i] == w) {
      cur[i] = -w;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace mg
