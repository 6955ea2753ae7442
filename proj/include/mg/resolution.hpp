#pragma once

#include <functional>

#include "mg/module.hpp"

namespace mg {

struct WindowTooSmall : std::runtime_error {
  explicit WindowTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// A minimal multigraded free resolution
///   0 -> F_p -> ... -> F_1 -> F_0 -> M -> 0
/// with d_{j} = maps[j-1] : F_j -> F_{j-1}. Invariants checked on
/// construction: d∘d = 0 exactly, no unit entries (graded Nakayama), length
/// at most the number of variables, and Euler-Hilbert consistency on the
/// verified weight window.
struct Resolution {
  GradedRing ring;
  std::vector<std::vector<MultiDegree>> betti;  // betti[j] = shifts of F_j
  std::vector<PolyMatrix> maps;
  Int verifiedCap = 0;  // weight through which syzygy search was exhaustive

  int projDim() const { return static_cast<int>(betti.size()) - 1; }
  long long freeDimAt(int j, const MultiDegree& n) const;
  /// Alternating sum of free piece dimensions; equals dim M_n once the
  /// resolution is complete.
  long long eulerDimAt(const MultiDegree& n) const;
  FreeModule freeModule(int j) const;
};

struct ResolveOptions {
  std::optional<Int> hardCap;   // absolute weight cap for syzygy search
  std::optional<Int> quietMargin;
  bool validate = true;         // Euler-Hilbert + dd=0 + minimality
};

Resolution freeResolution(const FGModule& m, const ResolveOptions& opts = {});

/// mu - projDim(M): depth with respect to the maximal homogeneous ideal.
/// Retries with enlarged caps on WindowTooSmall. For the zero module the
/// sentinel mu is returned.
int depthAB(const FGModule& m);

/// Minimal presentation: constant entries pivoted away, then columns
/// minimalized degreewise. The cokernel is unchanged.
FGModule minimalPresentation(const FGModule& m, const ResolveOptions& opts = {});

/// Minimal homogeneous generators of a graded subspace family inside a free
/// module: `provider` spans the subspace of interest at each degree, and the
/// result is a minimal generating set of the submodule it sweeps out,
/// collected degreewise in ascending weight (graded Nakayama).
struct MinimalColumns {
  std::vector<PolyVec> cols;
  std::vector<MultiDegree> degrees;
  Int scannedCap = 0;       // last weight fully processed
  bool capHitWhileActive = false;
};

using SpanProvider =
    std::function<std::vector<SparseVec>(const MultiDegree&, const PieceBasis&)>;

/// Scans degrees of weight up to max(scanAtLeast, last activity + margin),
/// hard-capped; `capHitWhileActive` reports a truncated scan.
MinimalColumns minimalGenerators(const FreeModule& target, Int hardCap,
                                 Int quietMargin, Int scanAtLeast,
                                 const SpanProvider& provider);

/// Span provider for the column space of a polynomial matrix with columns in
/// `target` (all monomial multiples of all columns at the degree).
SpanProvider imageProvider(const FreeModule& target,
                           const std::vector<PolyVec>& cols,
                           const std::vector<MultiDegree>& colDegrees);

/// Span provider for the kernel of a matrix `source -> targetOfMap`.
SpanProvider kernelProvider(const FreeModule& source, const FreeModule& targetOfMap,
                            const std::vector<PolyVec>& cols,
                            const std::vector<MultiDegree>& colDegrees);

/// Compose two polynomial matrices (inner applied first): cols of `inner`
/// are rewritten through `outer`.
PolyMatrix composeMatrices(const PolyMatrix& outer, const PolyMatrix& inner,
                           const Field& f);

}  // namespace mg
