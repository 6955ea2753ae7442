#include "mg/resolution.hpp"

#include <algorithm>
#include <set>

namespace mg {

long long Resolution::freeDimAt(int j, const MultiDegree& n) const {
  if (j < 0 || j > projDim()) return 0;
  long long total = 0;
  for (const auto& s : betti[j]) total += ring.monomialCount(n - s);
  return total;
}

long long Resolution::eulerDimAt(const MultiDegree& n) const {
  long long total = 0;
  for (int j = 0; j <= projDim(); ++j)
    total += (j % 2 == 0 ? 1 : -1) * freeDimAt(j, n);
  return total;
}

FreeModule Resolution::freeModule(int j) const {
  return FreeModule(ring, betti[j]);
}

namespace {

std::vector<MultiDegree> candidateDegrees(const GradedRing& ring,
                                          const std::vector<MultiDegree>& shifts,
                                          Int cap) {
  std::set<MultiDegree> seen;
  for (const auto& s : shifts) {
    Int room = cap - ring.weight(s);
    if (room < 0) continue;
    for (const auto& d : ring.degreeLadder(room)) seen.insert(s + d);
  }
  std::vector<MultiDegree> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [&ring](const MultiDegree& a, const MultiDegree& b) {
              Int wa = ring.weight(a), wb = ring.weight(b);
              if (wa != wb) return wa < wb;
              return a < b;
            });
  return out;
}

PolyVec vecFromCoords(const PieceBasis& basis, const SparseVec& coords, int rank,
                      const Field& f) {
  PolyVec out(rank, Poly::zero());
  for (const auto& [idx, c] : coords) {
    auto [gen, mono] = basis.elems[idx];
    out[gen] = out[gen].plus(Poly::term(mono, c, f), f);
  }
  return out;
}

}  // namespace

MinimalColumns minimalGenerators(const FreeModule& target, Int hardCap,
                                 Int quietMargin, Int scanAtLeast,
                                 const SpanProvider& provider) {
  const GradedRing& ring = target.ring();
  const Field& f = ring.field();
  MinimalColumns out;
  if (target.rank() == 0) return out;

  Int maxShiftW = ring.weight(target.shifts()[0]);
  for (const auto& s : target.shifts())
    maxShiftW = std::max(maxShiftW, ring.weight(s));
  Int lastActivity = maxShiftW;
  Int wanted = std::max(scanAtLeast, lastActivity + quietMargin);

  for (const MultiDegree& n : candidateDegrees(ring, target.shifts(), hardCap)) {
    Int w = ring.weight(n);
    if (w > wanted) break;
    out.scannedCap = std::max(out.scannedCap, w);
    const PieceBasis& basis = target.basisAt(n);
    if (basis.dim() == 0) continue;

    // Span of monomial multiples of the generators found so far; new
    // generators at this degree are a coset basis modulo it.
    Echelon span(f);
    for (size_t t = 0; t < out.cols.size(); ++t) {
      for (const Monomial& m : ring.monomialBasis(n - out.degrees[t]))
        span.insert(target.expand(mulVecMonomial(out.cols[t], m, f), n));
    }
    for (const SparseVec& v : provider(n, basis)) {
      SparseVec residual;
      if (span.insertReduced(v, &residual)) {
        out.cols.push_back(vecFromCoords(basis, residual, target.rank(), f));
        out.degrees.push_back(n);
        lastActivity = w;
        wanted = std::max(wanted, lastActivity + quietMargin);
      }
    }
  }
  if (wanted > hardCap) out.capHitWhileActive = true;
  return out;
}

SpanProvider imageProvider(const FreeModule& target,
                           const std::vector<PolyVec>& cols,
                           const std::vector<MultiDegree>& colDegrees) {
  return [target, cols, colDegrees](const MultiDegree& n, const PieceBasis&) {
    const GradedRing& ring = target.ring();
    const Field& f = ring.field();
    std::vector<SparseVec> vs;
    for (size_t l = 0; l < cols.size(); ++l)
      for (const Monomial& m : ring.monomialBasis(n - colDegrees[l]))
        vs.push_back(target.expand(mulVecMonomial(cols[l], m, f), n));
    return vs;
  };
}

SpanProvider kernelProvider(const FreeModule& source, const FreeModule& targetOfMap,
                            const std::vector<PolyVec>& cols,
                            const std::vector<MultiDegree>& colDegrees) {
  (void)colDegrees;
  return [source, targetOfMap, cols](const MultiDegree& n,
                                     const PieceBasis& basis) {
    const GradedRing& ring = source.ring();
    const Field& f = ring.field();
    const PieceBasis& tb = targetOfMap.basisAt(n);
    std::vector<SparseVec> mapCols(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
      auto [gen, mono] = basis.elems[i];
      mapCols[i] = targetOfMap.expand(mulVecMonomial(cols[gen], mono, f), n);
    }
    return kernelBasisOfColumns(mapCols, tb.dim(), f);
  };
}

PolyMatrix composeMatrices(const PolyMatrix& outer, const PolyMatrix& inner,
                           const Field& f) {
  PolyMatrix out;
  out.rows = outer.rows;
  for (const PolyVec& icol : inner.cols) {
    PolyVec acc(outer.rows, Poly::zero());
    for (size_t k = 0; k < icol.size(); ++k) {
      if (icol[k].isZero()) continue;
      acc = addVec(acc, mulVecPoly(outer.cols[k], icol[k], f), f);
    }
    out.cols.push_back(std::move(acc));
  }
  return out;
}

namespace {

// Pivot away entries of degree zero: generator k is redundant when some
// column maps onto it with a unit coefficient.
void stripConstants(std::vector<MultiDegree>& shifts, PolyMatrix& p,
                    const Field& f) {
  for (;;) {
    int pk = -1, pl = -1;
    Scalar pc;
    for (int l = 0; l < p.colCount() && pk < 0; ++l) {
      for (int k = 0; k < p.rows; ++k) {
        auto c = p.cols[l][k].asConstant();
        if (c && !f.isZero(*c) && !p.cols[l][k].isZero()) {
          pk = k;
          pl = l;
          pc = *c;
          break;
        }
      }
    }
    if (pk < 0) break;
    Scalar inv = f.inv(pc);
    PolyVec pivotCol = p.cols[pl];
    PolyMatrix next;
    next.rows = p.rows - 1;
    for (int l = 0; l < p.colCount(); ++l) {
      if (l == pl) continue;
      const Poly& head = p.cols[l][pk];
      PolyVec col;
      col.reserve(next.rows);
      for (int k = 0; k < p.rows; ++k) {
        if (k == pk) continue;
        Poly e = p.cols[l][k];
        if (!head.isZero())
          e = e.minus(pivotCol[k].times(head.timesScalar(inv, f), f), f);
        col.push_back(std::move(e));
      }
      next.cols.push_back(std::move(col));
    }
    p = std::move(next);
    shifts.erase(shifts.begin() + pk);
  }
  // Drop zero columns.
  PolyMatrix clean;
  clean.rows = p.rows;
  for (auto& col : p.cols)
    if (!vecIsZero(col)) clean.cols.push_back(std::move(col));
  p = std::move(clean);
}

Int defaultHardCap(const FGModule& m) {
  const GradedRing& ring = m.ring();
  Int maxShiftW = 0;
  for (const auto& s : m.shifts()) maxShiftW = std::max(maxShiftW, ring.weight(s));
  Int maxRelW = maxShiftW;
  for (const auto& d : m.relationDegrees()) maxRelW = std::max(maxRelW, ring.weight(d));
  return maxRelW + ring.varCount() * ring.maxVarWeight() + 8;
}

}  // namespace

FGModule minimalPresentation(const FGModule& m, const ResolveOptions& opts) {
  const GradedRing& ring = m.ring();
  std::vector<MultiDegree> shifts = m.shifts();
  PolyMatrix p = m.presentation();
  stripConstants(shifts, p, ring.field());
  if (shifts.empty()) return FGModule(ring, {}, PolyMatrix::zero(0));
  FGModule stripped(ring, shifts, p);
  const std::vector<MultiDegree>& colDegs = stripped.relationDegrees();
  Int maxColW = 0;
  for (const auto& d : colDegs) maxColW = std::max(maxColW, ring.weight(d));
  Int cap = std::max(opts.hardCap.value_or(defaultHardCap(m)), maxColW);
  Int margin = opts.quietMargin.value_or(2 * ring.maxVarWeight() + 2);
  FreeModule f0 = stripped.ambient();
  // Image generators can only live at the column degrees, so scanning through
  // their maximal weight is exhaustive.
  MinimalColumns gens = minimalGenerators(
      f0, cap, margin, maxColW, imageProvider(f0, p.cols, colDegs));
  if (gens.capHitWhileActive)
    throw WindowTooSmall("minimalPresentation: relation search hit the cap");
  PolyMatrix d1;
  d1.rows = static_cast<int>(shifts.size());
  d1.cols = gens.cols;
  return FGModule(ring, shifts, std::move(d1));
}

Resolution freeResolution(const FGModule& m, const ResolveOptions& opts) {
  const GradedRing& ring = m.ring();
  const Field& f = ring.field();
  Int cap = opts.hardCap.value_or(defaultHardCap(m));
  Int margin = opts.quietMargin.value_or(2 * ring.maxVarWeight() + 2);
  int mu = ring.varCount();

  FGModule mm = minimalPresentation(m, opts);
  Resolution res{ring, {}, {}, 0};
  res.betti.push_back(mm.shifts());
  if (mm.shifts().empty()) return res;  // zero module

  // Step 1 is the minimal presentation itself; each later step takes minimal
  // generators of the kernel of the previous map.
  std::vector<PolyVec> cur = mm.presentation().cols;
  std::vector<MultiDegree> curDegs = mm.relationDegrees();
  FreeModule below = mm.ambient();
  Int scanned = cap;
  while (!cur.empty()) {
    PolyMatrix d;
    d.rows = below.rank();
    d.cols = cur;
    res.maps.push_back(d);
    res.betti.push_back(curDegs);
    int j = static_cast<int>(res.maps.size());
    if (j > mu)
      throw WindowTooSmall(
          "freeResolution: length exceeded the variable count; syzygy window "
          "inconsistent");
    FreeModule here(ring, curDegs);
    MinimalColumns next = minimalGenerators(
        here, cap, margin, 0, kernelProvider(here, below, cur, curDegs));
    if (next.capHitWhileActive)
      throw WindowTooSmall("freeResolution: syzygy search hit the cap");
    scanned = std::min(scanned, next.scannedCap);
    below = here;
    cur = next.cols;
    curDegs = next.degrees;
  }
  res.verifiedCap = scanned;

  if (opts.validate) {
    for (size_t j = 0; j + 1 < res.maps.size(); ++j) {
      PolyMatrix comp = composeMatrices(res.maps[j], res.maps[j + 1], f);
      for (const auto& col : comp.cols)
        if (!vecIsZero(col)) throw std::logic_error("freeResolution: d o d != 0");
    }
    for (const auto& map : res.maps)
      for (const auto& col : map.cols)
        for (const auto& e : col) {
          auto c = e.asConstant();
          if (c && !f.isZero(*c) && !e.isZero())
            throw std::logic_error("freeResolution: non-minimal map entry");
        }
    // Euler-Hilbert consistency against the module's own piece dimensions.
    // The minimal presentation generates the same image degreewise by
    // construction, so its cokernel is the module itself.
    FGModule viaMin(ring, res.betti[0],
                    res.maps.empty()
                        ? PolyMatrix::zero(static_cast<int>(res.betti[0].size()))
                        : res.maps[0]);
    Int checkCap = std::min<Int>(res.verifiedCap, defaultHardCap(m));
    for (const MultiDegree& n : candidateDegrees(ring, m.shifts(), checkCap)) {
      if (res.eulerDimAt(n) != viaMin.dimAt(n))
        throw WindowTooSmall("freeResolution: Euler-Hilbert mismatch at " +
                             n.str());
    }
    // Spot-check that minimization preserved the module.
    for (const MultiDegree& n :
         candidateDegrees(ring, m.shifts(), std::min<Int>(checkCap, 8)))
      if (viaMin.dimAt(n) != m.dimAt(n))
        throw std::logic_error("freeResolution: minimization changed the module");
  }
  return res;
}

int depthAB(const FGModule& m) {
  const GradedRing& ring = m.ring();
  ResolveOptions opts;
  Int cap = defaultHardCap(m);
  Int margin = 2 * ring.maxVarWeight() + 2;
  for (int attempt = 0; attempt < 4; ++attempt) {
    opts.hardCap = cap;
    opts.quietMargin = margin;
    try {
      Resolution r = freeResolution(m, opts);
      if (r.betti[0].empty()) return ring.varCount();  // zero module
      return ring.varCount() - r.projDim();
    } catch (const WindowTooSmall&) {
      cap += ring.varCount() * ring.maxVarWeight() + 8;
      margin += 2 * ring.maxVarWeight() + 2;
    }
  }
  throw WindowTooSmall("depthAB: resolution did not stabilize");
}

}  // namespace mg
