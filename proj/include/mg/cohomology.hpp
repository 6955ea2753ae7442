#pragma once

#include "mg/resolution.hpp"

namespace mg {

struct CohomologyOptions {
  std::optional<Int> hardCap;
  std::optional<Int> quietMargin;
  bool validateExt = true;  // cross-check Ext presentations degreewise
};

struct GdepthVerdict {
  int value = 0;          // first failing level; mu + 1 when all levels pass
  bool sentinel = false;  // the "all tested levels pass" encoding of infinity
  int powerCap = 0;
  int maxPowerUsed = 0;   // largest nilpotency index that was proved
  std::string witness;    // failing block product, when finite

  bool sameValueAs(const GdepthVerdict& o) const {
    return sentinel == o.sentinel && (sentinel || value == o.value);
  }
};

struct ConeCertificate {
  int level = 0;
  MultiDegree vertex;
};

struct GammaFgVerdict {
  int value = 0;
  bool sentinel = false;
  Int window = 0;  // every claim is relative to the box [-window, window]^r
  std::vector<ConeCertificate> cones;
  std::optional<MultiDegree> witnessDegree;  // nonzero piece at the failing level

  bool sameValueAs(const GammaFgVerdict& o) const {
    return sentinel == o.sentinel && (sentinel || value == o.value);
  }
};

/// Local cohomology dimensions over a degree box, one row per cohomological
/// index. Entries come from the duality route; the Cech oracle fills the
/// `cech` counterpart where requested, and the two must agree.
struct LCTable {
  Int window = 0;
  std::vector<std::unordered_map<MultiDegree, long long, MultiDegreeHash>> rows;
};

/// Duality-route cohomology of one module, computed lazily and cached: the
/// minimal free resolution, the Ext modules against omega = S(-sigma), their
/// own resolutions, and every query derived from them. Local cohomology is
/// read through graded local duality, H^i(M)_n = Ext^{mu-i}(M, omega)_{-n},
/// so a piece query costs lattice counting once the Ext side is resolved.
class ModuleCohomology {
public:
  explicit ModuleCohomology(FGModule m, CohomologyOptions opts = {});

  const FGModule& module() const { return m_; }
  int mu() const;
  const Resolution& resolution();
  int projDim();
  int depth();

  /// dim Ext^j(M, omega)_n through the resolved Ext module.
  long long extDim(int j, const MultiDegree& n);
  /// The same dimension computed from the dualized complex at one degree.
  long long extDimDirect(int j, const MultiDegree& n);
  /// dim H^i_M(M)_n.
  long long lcDim(int i, const MultiDegree& n);
  const std::optional<FGModule>& extModule(int j);

  /// Least i < mu with a nonzero H^i piece among the probes, else mu.
  int minNonvanishingLevel(const std::vector<MultiDegree>& probes);

  GdepthVerdict gdepth(int powerCap);
  GammaFgVerdict gammaFg(Int window);

  /// depth(M^(a,b)) through the commutation of local cohomology with the
  /// Veronese functor; window-relative upper bound mu when all pieces vanish.
  int veroneseDepth(const MultiDegree& a, const MultiDegree& b, Int window);

  /// Componentwise max of the Gamma-fg cone vertices over the passing
  /// levels: a vertex beta such that H^i vanishes (within the window) on
  /// n* in C_beta for every i below the Gamma-fg value.
  MultiDegree vanishingVertex(Int window);

private:
  struct ExtData {
    std::optional<FGModule> mod;
    std::optional<Resolution> res;
  };
  ExtData& ext(int j);
  FreeModule homFree(int j);

  FGModule m_;
  CohomologyOptions opts_;
  std::optional<Resolution> res_;
  std::vector<std::optional<ExtData>> ext_;
  std::optional<GdepthVerdict> gdepthCache_;
  int gdepthCapUsed_ = 0;
  std::optional<GammaFgVerdict> gammaFgCache_;
  Int gammaFgWindowUsed_ = 0;
};

int vadEstimate(ModuleCohomology& mc,
                const std::vector<std::pair<MultiDegree, MultiDegree>>& samples,
                Int window);

/// Default sampler: the lattice {1,2,3}^r x {0,1,2}^r together with points
/// of the region predicted by veroneseRegion over the module's vanishing
/// vertex.
std::vector<std::pair<MultiDegree, MultiDegree>> vadDefaultSamples(
    ModuleCohomology& mc, Int window);

LCTable lcTable(ModuleCohomology& mc, Int window);

struct Unstable : std::runtime_error {
  int truncation;
  explicit Unstable(int t)
      : std::runtime_error("cech cohomology not stable at truncation " +
                           std::to_string(t)),
        truncation(t) {}
};

/// Degree-n dimension of the i-th cohomology of the Cech complex of S/I on
/// the variables, I monomial, with inverted exponents truncated at -T. The
/// complex splits over the fine Z^mu grading into simplicial complexes of
/// subsets of the variables, so each fine degree contributes a tiny rank
/// computation.
long long cechOracle(const GradedRing& ring, const std::vector<Monomial>& idealGens,
                     int i, const MultiDegree& n, int truncation);

/// Recomputes at T and T+1 and requires equality, doubling a few times
/// before giving up.
long long cechOracleStable(const GradedRing& ring,
                           const std::vector<Monomial>& idealGens, int i,
                           const MultiDegree& n, int truncation);

struct DepthReport {
  int depth = 0;
  int projDim = 0;
  GdepthVerdict gdepth;
  GammaFgVerdict gammaFg;
  int vad = 0;
};

DepthReport depthReport(ModuleCohomology& mc, int powerCap, Int window);

}  // namespace mg
