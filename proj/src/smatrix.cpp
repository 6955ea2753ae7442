#include "mg/smatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mg {

SparseVec sparseFromDense(const std::vector<Scalar>& v, const Field& f) {
  SparseVec out;
  for (size_t i = 0; i < v.size(); ++i)
    if (!f.isZero(v[i])) out.emplace_back(static_cast<int>(i), f.reduce(v[i]));
  return out;
}

std::vector<Scalar> denseFromSparse(const SparseVec& v, int n) {
  std::vector<Scalar> out(n, Scalar(0));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b,
               const Field& f) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = f.mul(c, b[j].second);
      if (!f.isZero(v)) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      Scalar v = f.add(a[i].second, f.mul(c, b[j].second));
      if (!f.isZero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const SparseVec& a, const Scalar& c, const Field& f) {
  if (f.isZero(c)) return {};
  SparseVec out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.emplace_back(i, f.mul(c, v));
  return out;
}

namespace {
const Scalar* coeffAt(const SparseVec& v, int index) {
  auto it = std::lower_bound(
      v.begin(), v.end(), index,
      [](const std::pair<int, Scalar>& p, int i) { return p.first < i; });
  if (it != v.end() && it->first == index) return &it->second;
  return nullptr;
}
}  // namespace

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec cur = v;
  // pivots_ is sorted; one sweep suffices because rows are fully reduced.
  for (size_t k = 0; k < rows_.size() && !cur.empty(); ++k) {
    const Scalar* c = coeffAt(cur, pivots_[k]);
    if (c) cur = axpy(cur, f_.neg(*c), rows_[k], f_);
  }
  return cur;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r;
  return insertReduced(v, &r);
}

bool Echelon::insertReduced(const SparseVec& v, SparseVec* residual) {
  SparseVec r = reduce(v);
  if (r.empty()) {
    *residual = {};
    return false;
  }
  int piv = r.front().first;
  SparseVec norm = scale(r, f_.inv(r.front().second), f_);
  // Back-eliminate the new pivot from existing rows to stay fully reduced.
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar* c = coeffAt(rows_[k], piv);
    if (c) rows_[k] = axpy(rows_[k], f_.neg(*c), norm, f_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, norm);
  *residual = std::move(norm);
  return true;
}

bool Echelon::isPivot(int index) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), index);
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  auto& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<int, Scalar>& p, int i) { return p.first < i; });
  if (it != row.end() && it->first == c) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

void SparseMatrix::add(int r, int c, const Scalar& v, const Field& f) {
  auto& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const std::pair<int, Scalar>& p, int i) { return p.first < i; });
  if (it != row.end() && it->first == c) {
    Scalar s = f.add(it->second, v);
    if (f.isZero(s))
      row.erase(it);
    else
      it->second = s;
  } else if (!f.isZero(v)) {
    row.insert(it, {c, f.reduce(v)});
  }
}

Scalar SparseMatrix::get(int r, int c) const {
  const Scalar* p = coeffAt(data_[r], c);
  return p ? *p : Scalar(0);
}

SparseVec SparseMatrix::column(int c) const {
  SparseVec out;
  for (int r = 0; r < rows_; ++r) {
    const Scalar* p = coeffAt(data_[r], c);
    if (p) out.emplace_back(r, *p);
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

int SparseMatrix::rank(const Field& f) const {
  Echelon e(f);
  for (int r = 0; r < rows_; ++r) e.insert(data_[r]);
  return e.rank();
}

bool SparseMatrix::isZero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<SparseVec> kernelBasis(const SparseMatrix& a, const Field& f) {
  Echelon e(f);
  for (int r = 0; r < a.rows(); ++r) e.insert(a.row(r));
  std::vector<SparseVec> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (e.isPivot(c)) continue;
    // x_c = 1, x_{pivot of row k} = -row_k[c].
    SparseVec v;
    for (size_t k = 0; k < e.rows().size(); ++k) {
      const Scalar* coef = coeffAt(e.rows()[k], c);
      if (coef) v.emplace_back(e.pivots()[k], f.neg(*coef));
    }
    v.emplace_back(c, f.one());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<SparseVec> kernelBasisOfColumns(const std::vector<SparseVec>& cols,
                                            int rows, const Field& f) {
  SparseMatrix a(rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) a.set(r, static_cast<int>(c), v);
  return kernelBasis(a, f);
}

std::optional<std::vector<Scalar>> solveOrReject(const SparseMatrix& a,
                                                 const std::vector<Scalar>& b,
                                                 const Field& f) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solveOrReject: dimension mismatch");
  int n = a.cols();
  Echelon e(f);
  for (int r = 0; r < a.rows(); ++r) {
    SparseVec row = a.row(r);
    if (!f.isZero(b[r])) row.emplace_back(n, f.reduce(b[r]));
    e.insert(row);
  }
  if (e.isPivot(n)) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(n, Scalar(0));
  for (size_t k = 0; k < e.rows().size(); ++k) {
    const Scalar* rhs = coeffAt(e.rows()[k], n);
    // Free variables stay zero, so x_pivot is just the reduced RHS.
    x[e.pivots()[k]] = rhs ? *rhs : Scalar(0);
  }
  return x;
}

}  // namespace mg
