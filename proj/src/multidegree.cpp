#include "mg/multidegree.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mg {

namespace {
void requireSameRank(const MultiDegree& a, const MultiDegree& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("MultiDegree rank mismatch: " + a.str() +
                                " vs " + b.str());
}

Int ceilDiv(Int num, Int den) {
  // den > 0
  Int q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}
}  // namespace

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  requireSameRank(*this, o);
  std::vector<Int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return MultiDegree(std::move(r));
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
  requireSameRank(*this, o);
  std::vector<Int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - o.e_[i];
  return MultiDegree(std::move(r));
}

MultiDegree MultiDegree::operator-() const {
  std::vector<Int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = -e_[i];
  return MultiDegree(std::move(r));
}

MultiDegree MultiDegree::termwise(const MultiDegree& o) const {
  requireSameRank(*this, o);
  std::vector<Int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] * o.e_[i];
  return MultiDegree(std::move(r));
}

MultiDegree MultiDegree::star() const {
  std::vector<Int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = std::labs(e_[i]);
  return MultiDegree(std::move(r));
}

bool MultiDegree::geq(const MultiDegree& o) const {
  requireSameRank(*this, o);
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < o.e_[i]) return false;
  return true;
}

bool MultiDegree::allNonNegative() const {
  return std::all_of(e_.begin(), e_.end(), [](Int v) { return v >= 0; });
}

bool MultiDegree::allPositive() const {
  return std::all_of(e_.begin(), e_.end(), [](Int v) { return v >= 1; });
}

std::string MultiDegree::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  os << ')';
  return os.str();
}

DegreeMatrix::DegreeMatrix(std::vector<MultiDegree> columns)
    : r_(static_cast<int>(columns.size())), cols_(std::move(columns)) {
  if (r_ < 1) throw std::invalid_argument("DegreeMatrix needs rank >= 1");
  almostStandard_ = true;
  for (int i = 0; i < r_; ++i) {
    if (cols_[i].rank() != r_)
      throw std::invalid_argument("DegreeMatrix column rank mismatch");
    for (int row = 0; row < r_; ++row) {
      Int v = cols_[i][row];
      if (row > i && v != 0)
        throw std::invalid_argument("DegreeMatrix not upper triangular");
      if (row == i && v < 1)
        throw std::invalid_argument("DegreeMatrix diagonal entry must be >= 1");
      if (v < 0)
        throw std::invalid_argument("DegreeMatrix entries must be nonnegative");
      if (row != i && v != 0) almostStandard_ = false;
    }
  }
}

DegreeMatrix DegreeMatrix::identity(int r) {
  std::vector<MultiDegree> cols;
  for (int i = 0; i < r; ++i) {
    std::vector<Int> c(r, 0);
    c[i] = 1;
    cols.emplace_back(std::move(c));
  }
  return DegreeMatrix(std::move(cols));
}

DegreeMatrix DegreeMatrix::diagonal(std::vector<Int> diag) {
  int r = static_cast<int>(diag.size());
  std::vector<MultiDegree> cols;
  for (int i = 0; i < r; ++i) {
    std::vector<Int> c(r, 0);
    c[i] = diag[i];
    cols.emplace_back(std::move(c));
  }
  return DegreeMatrix(std::move(cols));
}

MultiDegree DegreeMatrix::apply(const MultiDegree& n) const {
  if (n.rank() != r_)
    throw std::invalid_argument("phi: dimension mismatch");
  std::vector<Int> out(r_, 0);
  for (int i = 0; i < r_; ++i)
    for (int row = 0; row <= i; ++row) out[row] += n[i] * cols_[i][row];
  return MultiDegree(std::move(out));
}

MultiDegree DegreeMatrix::applyScaled(const MultiDegree& a,
                                      const MultiDegree& n) const {
  if (!a.allPositive())
    throw std::invalid_argument("phi_a: a must have positive entries");
  return apply(n.termwise(a));
}

std::vector<mpq_class> DegreeMatrix::solve(const MultiDegree& target) const {
  if (target.rank() != r_)
    throw std::invalid_argument("solve: dimension mismatch");
  std::vector<mpq_class> x(r_);
  for (int i = r_ - 1; i >= 0; --i) {
    mpq_class rhs(target[i]);
    for (int l = i + 1; l < r_; ++l) rhs -= x[l] * cols_[l][i];
    x[i] = rhs / cols_[i][i];
  }
  return x;
}

std::optional<std::vector<Int>> DegreeMatrix::solveIntegral(
    const MultiDegree& target) const {
  std::vector<mpq_class> x = solve(target);
  std::vector<Int> out(r_);
  for (int i = 0; i < r_; ++i) {
    if (x[i].get_den() != 1) return std::nullopt;
    out[i] = static_cast<Int>(x[i].get_num().get_si());
  }
  return out;
}

bool DegreeMatrix::operator==(const DegreeMatrix& o) const {
  if (r_ != o.r_) return false;
  for (int i = 0; i < r_; ++i)
    if (!(cols_[i] == o.cols_[i])) return false;
  return true;
}

ConeRegion::ConeRegion(MultiDegree vertex, DegreeMatrix matrix)
    : vertex_(std::move(vertex)), matrix_(std::move(matrix)) {
  if (vertex_.rank() != matrix_.rank())
    throw std::invalid_argument("ConeRegion: vertex rank mismatch");
  if (!vertex_.allNonNegative())
    throw std::invalid_argument("ConeRegion: vertex must lie in N^r");
}

bool ConeRegion::contains(const MultiDegree& n) const {
  if (n.rank() != vertex_.rank()) return false;
  std::vector<mpq_class> lambda = matrix_.solve(n - vertex_);
  for (const mpq_class& l : lambda)
    if (l < 0) return false;
  return true;
}

ConeRegion coneIntersect(const ConeRegion& c1, const ConeRegion& c2) {
  if (!(c1.matrix() == c2.matrix()))
    throw std::invalid_argument("coneIntersect: matrices differ");
  if (!c1.matrix().isAlmostStandard())
    throw std::invalid_argument(
        "coneIntersect: requires an almost-standard matrix");
  int r = c1.matrix().rank();
  std::vector<Int> v(r);
  for (int i = 0; i < r; ++i)
    v[i] = std::max(c1.vertex()[i], c2.vertex()[i]);
  return ConeRegion(MultiDegree(std::move(v)), c1.matrix());
}

MultiDegree betaVertex(Int u, const MultiDegree& alpha, const DegreeMatrix& g) {
  if (u < 0) throw std::invalid_argument("betaVertex: u must be >= 0");
  if (!alpha.allNonNegative())
    throw std::invalid_argument("betaVertex: alpha must be nonnegative");
  int r = g.rank();
  if (alpha.rank() != r)
    throw std::invalid_argument("betaVertex: rank mismatch");
  std::vector<Int> beta(r, 0);
  for (int i = r - 1; i >= 0; --i) {
    Int b = u * g.diag(i) + alpha[i];
    for (int l = i + 1; l < r; ++l) b += beta[l] * g.entry(i, l);
    beta[i] = b;
  }
  return MultiDegree(std::move(beta));
}

MultiDegree veroneseRegion(const MultiDegree& beta, const MultiDegree& b,
                           const DegreeMatrix& g) {
  if (!g.isAlmostStandard())
    throw std::invalid_argument("veroneseRegion: matrix must be almost-standard");
  if (!b.geq(beta))
    throw std::invalid_argument("veroneseRegion: requires b >= beta");
  int r = g.rank();
  std::vector<Int> a(r);
  for (int i = 0; i < r; ++i)
    a[i] = std::max<Int>(1, ceilDiv(beta[i] + b[i], g.diag(i)));
  return MultiDegree(std::move(a));
}

GammaSupport::GammaSupport(std::vector<MultiDegree> offsets, DegreeMatrix matrix)
    : offsets_(std::move(offsets)), matrix_(std::move(matrix)) {
  if (offsets_.empty())
    throw std::invalid_argument("GammaSupport: needs at least one offset");
  for (const auto& d : offsets_)
    if (d.rank() != matrix_.rank())
      throw std::invalid_argument("GammaSupport: offset rank mismatch");
}

bool GammaSupport::contains(const MultiDegree& n) const {
  for (const auto& d : offsets_)
    if (matrix_.solveIntegral(n - d)) return true;
  return false;
}

GammaWitness gammaWitness(const GammaSupport& supp, const MultiDegree& beta,
                          Int c) {
  if (c < 0) throw std::invalid_argument("gammaWitness: c must be >= 0");
  const DegreeMatrix& g = supp.matrix();
  int r = g.rank();
  // The offsets d with d = beta (mod Gamma) are the ones for which
  // (d + Gamma) meets (beta + Gamma) at all; pick the first.
  for (size_t idx = 0; idx < supp.offsets().size(); ++idx) {
    const MultiDegree& d = supp.offsets()[idx];
    auto v = g.solveIntegral(d - beta);
    if (!v) continue;
    // alpha = d + G t with alpha >= c and n = t + v >= 0. Solve for the
    // minimal t from coordinate r down to 1; each row constraint only
    // involves t_i and the already-fixed t_{i+1..r}.
    std::vector<Int> t(r, 0);
    for (int i = r - 1; i >= 0; --i) {
      Int acc = d[i];
      for (int l = i + 1; l < r; ++l) acc += t[l] * g.entry(i, l);
      Int lower = ceilDiv(c - acc, g.diag(i));
      t[i] = std::max(lower, -(*v)[i]);
    }
    MultiDegree alpha = d + g.apply(MultiDegree(t));
    std::vector<Int> n(r);
    for (int i = 0; i < r; ++i) n[i] = t[i] + (*v)[i];
    return GammaWitness{alpha, t, n, static_cast<int>(idx)};
  }
  throw std::invalid_argument(
      "gammaWitness: no offset is congruent to beta modulo Gamma");
}

}  // namespace mg
