#include "mg/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mg {

bool Monomial::isOne() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (size_t j = 0; j < exps.size(); ++j) r.exps[j] += o.exps[j];
  return r;
}

Monomial Monomial::power(int t) const {
  Monomial r = *this;
  for (size_t j = 0; j < exps.size(); ++j) r.exps[j] *= t;
  return r;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool any = false;
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (any) os << '*';
    os << names[j];
    if (exps[j] > 1) os << '^' << exps[j];
    any = true;
  }
  return any ? os.str() : "1";
}

std::vector<Int> checkPositive(
    const std::vector<RingVariable>& vars,
    const std::optional<DegreeMatrix>& blockMatrix) {
  if (vars.empty()) throw NonPositiveGrading("ring has no variables");
  int q = vars[0].degree.rank();
  std::vector<std::vector<Int>> candidates;
  if (blockMatrix) {
    // Row sums of G are positive by triangularity and pair positively with
    // every block degree.
    std::vector<Int> rowSums(q, 0);
    for (int i = 0; i < blockMatrix->rank(); ++i)
      for (int row = 0; row < blockMatrix->rank(); ++row)
        rowSums[row] += blockMatrix->entry(row, i);
    candidates.push_back(std::move(rowSums));
  }
  candidates.push_back(std::vector<Int>(q, 1));
  for (const auto& theta : candidates) {
    bool ok = true;
    for (const auto& v : vars) {
      Int w = 0;
      for (int k = 0; k < q; ++k) w += theta[k] * v.degree[k];
      if (w <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return theta;
  }
  throw NonPositiveGrading(
      "no strictly positive functional found for the variable degrees");
}

struct GradedRing::Data {
  Field field = Field::rationals();
  std::vector<RingVariable> vars;
  std::optional<std::vector<std::vector<int>>> blocks;
  std::optional<DegreeMatrix> blockMatrix;
  std::vector<Int> theta;
  Int minVarW = 0, maxVarW = 0;
  std::unordered_map<std::string, int> varByName;

  mutable std::mutex mx;
  mutable std::unordered_map<MultiDegree, std::vector<Monomial>, MultiDegreeHash>
      basisCache;
  mutable std::unordered_map<MultiDegree, long long, MultiDegreeHash> countCache;
};

GradedRing::GradedRing(Field field, std::vector<RingVariable> vars,
                       std::optional<std::vector<std::vector<int>>> blocks)
    : d_(std::make_shared<Data>()) {
  if (vars.empty()) throw std::invalid_argument("GradedRing: no variables");
  int q = vars[0].degree.rank();
  for (const auto& v : vars)
    if (v.degree.rank() != q)
      throw std::invalid_argument("GradedRing: variable degree rank mismatch");
  d_->field = field;
  d_->vars = std::move(vars);
  if (blocks) {
    // Every variable must occur in exactly one block, and all variables of a
    // block must share one degree; the block degrees form the matrix G.
    std::vector<int> seen(d_->vars.size(), 0);
    std::vector<MultiDegree> gammas;
    for (const auto& blk : *blocks) {
      if (blk.empty()) throw std::invalid_argument("GradedRing: empty block");
      const MultiDegree& g = d_->vars[blk[0]].degree;
      for (int j : blk) {
        if (j < 0 || j >= static_cast<int>(d_->vars.size()))
          throw std::invalid_argument("GradedRing: block index out of range");
        if (seen[j]++) throw std::invalid_argument("GradedRing: duplicate block entry");
        if (!(d_->vars[j].degree == g))
          throw std::invalid_argument(
              "GradedRing: block variables must share one degree");
      }
      gammas.push_back(g);
    }
    for (int s : seen)
      if (!s) throw std::invalid_argument("GradedRing: variable missing from blocks");
    if (static_cast<int>(gammas.size()) != q)
      throw std::invalid_argument(
          "GradedRing: block count must equal the grading rank");
    d_->blockMatrix = DegreeMatrix(std::move(gammas));
    d_->blocks = std::move(blocks);
  }
  d_->theta = checkPositive(d_->vars, d_->blockMatrix);
  d_->minVarW = 0;
  for (size_t j = 0; j < d_->vars.size(); ++j) {
    Int w = weight(d_->vars[j].degree);
    if (j == 0 || w < d_->minVarW) d_->minVarW = w;
    if (j == 0 || w > d_->maxVarW) d_->maxVarW = w;
    d_->varByName[d_->vars[j].name] = static_cast<int>(j);
  }
}

const Field& GradedRing::field() const { return d_->field; }
int GradedRing::gradingRank() const { return d_->vars[0].degree.rank(); }
int GradedRing::varCount() const { return static_cast<int>(d_->vars.size()); }
const std::vector<RingVariable>& GradedRing::vars() const { return d_->vars; }
const MultiDegree& GradedRing::varDegree(int j) const { return d_->vars[j].degree; }

int GradedRing::varIndex(const std::string& name) const {
  auto it = d_->varByName.find(name);
  return it == d_->varByName.end() ? -1 : it->second;
}

bool GradedRing::hasBlocks() const { return d_->blocks.has_value(); }
int GradedRing::blockCount() const { return static_cast<int>(d_->blocks->size()); }
const std::vector<int>& GradedRing::block(int i) const { return (*d_->blocks)[i]; }
const DegreeMatrix& GradedRing::blockMatrix() const { return *d_->blockMatrix; }

bool GradedRing::isAlmostStandard() const {
  return hasBlocks() && d_->blockMatrix->isAlmostStandard();
}

const std::vector<Int>& GradedRing::theta() const { return d_->theta; }

Int GradedRing::weight(const MultiDegree& d) const {
  Int w = 0;
  for (int k = 0; k < d.rank(); ++k) w += d_->theta[k] * d[k];
  return w;
}

Int GradedRing::minVarWeight() const { return d_->minVarW; }
Int GradedRing::maxVarWeight() const { return d_->maxVarW; }

MultiDegree GradedRing::monomialDegree(const Monomial& m) const {
  MultiDegree d = MultiDegree::zero(gradingRank());
  for (size_t j = 0; j < m.exps.size(); ++j)
    for (int e = 0; e < m.exps[j]; ++e) d = d + d_->vars[j].degree;
  return d;
}

Monomial GradedRing::one() const {
  return Monomial{std::vector<int>(varCount(), 0)};
}

Monomial GradedRing::variable(int j) const {
  Monomial m = one();
  m.exps[j] = 1;
  return m;
}

namespace {
// Enumerates exponents for variable j downward so that the overall order is
// descending lex.
void enumerate(const GradedRing& ring, int j, MultiDegree residual,
               Monomial& cur, std::vector<Monomial>& out) {
  int mu = ring.varCount();
  Int rw = ring.weight(residual);
  if (rw < 0) return;
  if (j == mu) {
    if (rw == 0 && residual == MultiDegree::zero(residual.rank()))
      out.push_back(cur);
    return;
  }
  Int vw = ring.weight(ring.varDegree(j));
  int emax = static_cast<int>(rw / vw);
  for (int e = emax; e >= 0; --e) {
    MultiDegree rem = residual;
    bool feasible = true;
    const MultiDegree& dj = ring.varDegree(j);
    for (int t = 0; t < e && feasible; ++t) {
      rem = rem - dj;
    }
    cur.exps[j] = e;
    enumerate(ring, j + 1, rem, cur, out);
  }
  cur.exps[j] = 0;
}
}  // namespace

const std::vector<Monomial>& GradedRing::monomialBasis(const MultiDegree& n) const {
  {
    std::lock_guard<std::mutex> lk(d_->mx);
    auto it = d_->basisCache.find(n);
    if (it != d_->basisCache.end()) return it->second;
  }
  std::vector<Monomial> out;
  if (n.rank() != gradingRank())
    throw std::invalid_argument("monomialBasis: degree rank mismatch");
  Monomial cur = one();
  enumerate(*this, 0, n, cur, out);
  std::lock_guard<std::mutex> lk(d_->mx);
  auto [it, inserted] = d_->basisCache.emplace(n, std::move(out));
  return it->second;
}

namespace {
struct CountKey {
  int var;
  MultiDegree residual;
  bool operator==(const CountKey& o) const {
    return var == o.var && residual == o.residual;
  }
};
struct CountKeyHash {
  size_t operator()(const CountKey& k) const {
    return MultiDegreeHash()(k.residual) * 31 + static_cast<size_t>(k.var);
  }
};

long long countRec(const GradedRing& ring, int j, const MultiDegree& residual,
                   std::unordered_map<CountKey, long long, CountKeyHash>& memo) {
  Int rw = ring.weight(residual);
  if (rw < 0) return 0;
  int mu = ring.varCount();
  if (j == mu) return residual == MultiDegree::zero(residual.rank()) ? 1 : 0;
  CountKey key{j, residual};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long total = 0;
  Int vw = ring.weight(ring.varDegree(j));
  MultiDegree rem = residual;
  for (int e = 0; e * vw <= rw; ++e) {
    if (e > 0) rem = rem - ring.varDegree(j);
    total += countRec(ring, j + 1, rem, memo);
  }
  memo[key] = total;
  return total;
}
}  // namespace

long long GradedRing::monomialCount(const MultiDegree& n) const {
  {
    std::lock_guard<std::mutex> lk(d_->mx);
    auto it = d_->countCache.find(n);
    if (it != d_->countCache.end()) return it->second;
  }
  std::unordered_map<CountKey, long long, CountKeyHash> memo;
  long long c = countRec(*this, 0, n, memo);
  std::lock_guard<std::mutex> lk(d_->mx);
  d_->countCache[n] = c;
  return c;
}

std::vector<MultiDegree> GradedRing::degreeLadder(Int cap) const {
  std::vector<MultiDegree> out;
  std::unordered_map<MultiDegree, bool, MultiDegreeHash> seen;
  std::vector<MultiDegree> frontier{MultiDegree::zero(gradingRank())};
  seen[frontier[0]] = true;
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<MultiDegree> next;
    for (const auto& d : frontier) {
      for (int j = 0; j < varCount(); ++j) {
        MultiDegree e = d + varDegree(j);
        if (weight(e) > cap) continue;
        if (seen.emplace(e, true).second) {
          next.push_back(e);
          out.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [this](const MultiDegree& a, const MultiDegree& b) {
    Int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

MultiDegree GradedRing::sigma() const {
  MultiDegree s = MultiDegree::zero(gradingRank());
  for (int j = 0; j < varCount(); ++j) s = s + varDegree(j);
  return s;
}

namespace {
// All multisets of size u over the variable index set, as monomials.
void multisets(const std::vector<int>& vars, int pos, Int left, Monomial& cur,
               std::vector<Monomial>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  if (pos == static_cast<int>(vars.size())) return;
  for (Int e = left; e >= 0; --e) {
    cur.exps[vars[pos]] += static_cast<int>(e);
    multisets(vars, pos + 1, left - e, cur, out);
    cur.exps[vars[pos]] -= static_cast<int>(e);
  }
}
}  // namespace

std::vector<Monomial> GradedRing::irrelevantPowerGens(Int u) const {
  if (!hasBlocks())
    throw std::invalid_argument("irrelevantPowerGens: ring has no blocks");
  int r = blockCount();
  // I_i is generated by the variables of every block j >= i whose degree has
  // a nonzero i-th coordinate; in the almost-standard case this is block i.
  std::vector<std::vector<int>> gens(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (blockMatrix().entry(i, j) != 0)
        for (int v : block(j)) gens[i].push_back(v);
  std::vector<Monomial> acc{one()};
  for (int i = 0; i < r; ++i) {
    std::vector<Monomial> parts;
    Monomial cur = one();
    multisets(gens[i], 0, u, cur, parts);
    std::vector<Monomial> next;
    for (const auto& a : acc)
      for (const auto& p : parts) next.push_back(a.times(p));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

std::vector<Monomial> GradedRing::blockProducts() const {
  if (!hasBlocks())
    throw std::invalid_argument("blockProducts: ring has no blocks");
  std::vector<Monomial> acc{one()};
  for (int i = 0; i < blockCount(); ++i) {
    std::vector<Monomial> next;
    for (const auto& a : acc)
      for (int v : block(i)) {
        Monomial m = a;
        m.exps[v] += 1;
        next.push_back(m);
      }
    acc = std::move(next);
  }
  return acc;
}

Poly Poly::term(const Monomial& m, const Scalar& c, const Field& f) {
  Poly p;
  Scalar r = f.reduce(c);
  if (!f.isZero(r)) p.terms_.emplace_back(m, r);
  return p;
}

Poly Poly::constant(const Scalar& c, int varCount, const Field& f) {
  return term(Monomial{std::vector<int>(varCount, 0)}, c, f);
}

Poly Poly::variable(const GradedRing& ring, int j) {
  return term(ring.variable(j), Scalar(1), ring.field());
}

Poly Poly::monomial(const Monomial& m) {
  Poly p;
  p.terms_.emplace_back(m, Scalar(1));
  return p;
}

namespace {
// descending lex on exponents
bool monoGreater(const Monomial& a, const Monomial& b) { return b < a; }
}  // namespace

Poly Poly::plus(const Poly& o, const Field& f) const {
  Poly out;
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && monoGreater(terms_[i].first, o.terms_[j].first))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               monoGreater(o.terms_[j].first, terms_[i].first)) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = f.add(terms_[i].second, o.terms_[j].second);
      if (!f.isZero(c)) out.terms_.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::minus(const Poly& o, const Field& f) const {
  return plus(o.timesScalar(f.neg(f.one()), f), f);
}

Poly Poly::timesScalar(const Scalar& c, const Field& f) const {
  Poly out;
  Scalar r = f.reduce(c);
  if (f.isZero(r)) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace_back(m, f.mul(a, r));
  return out;
}

Poly Poly::timesMonomial(const Monomial& m, const Field& f) const {
  (void)f;
  Poly out;
  for (const auto& [mm, a] : terms_) out.terms_.emplace_back(mm.times(m), a);
  // multiplying by a fixed monomial preserves the descending-lex order
  return out;
}

Poly Poly::times(const Poly& o, const Field& f) const {
  Poly out;
  for (const auto& [m, c] : o.terms_)
    out = out.plus(timesMonomial(m, f).timesScalar(c, f), f);
  return out;
}

Poly Poly::power(int t, const Field& f) const {
  if (t < 0) throw std::invalid_argument("Poly::power: negative exponent");
  if (terms_.empty()) return t == 0 ? Poly() : Poly();
  Poly out = Poly::term(Monomial{std::vector<int>(terms_[0].first.exps.size(), 0)},
                        Scalar(1), f);
  for (int i = 0; i < t; ++i) out = out.times(*this, f);
  return out;
}

bool Poly::isHomogeneous(const GradedRing& ring) const {
  if (terms_.empty()) return true;
  MultiDegree d = ring.monomialDegree(terms_[0].first);
  for (size_t i = 1; i < terms_.size(); ++i)
    if (!(ring.monomialDegree(terms_[i].first) == d)) return false;
  return true;
}

MultiDegree Poly::degree(const GradedRing& ring) const {
  if (terms_.empty())
    throw std::invalid_argument("Poly::degree: zero polynomial");
  return ring.monomialDegree(terms_[0].first);
}

std::optional<Scalar> Poly::asConstant() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() == 1 && terms_[0].first.isOne()) return terms_[0].second;
  return std::nullopt;
}

std::string Poly::str(const GradedRing& ring) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (const auto& v : ring.vars()) names.push_back(v.name);
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << '-';
      a = -a;
    }
    first = false;
    if (m.isOne()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << m.str(names);
    }
  }
  return os.str();
}

}  // namespace mg
