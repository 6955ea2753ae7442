#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mg {

/// Exact scalars. In rational mode these are arbitrary-precision elements of
/// Q; in prime mode they are canonical residues 0..p-1 (stored in the same
/// representation, reduced after every operation). All arithmetic funnels
/// through a Field so the two modes share every algorithm unchanged.
using Scalar = mpq_class;

class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);

  bool isPrime() const { return p_ != 0; }
  unsigned long characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar fromInt(long v) const { return reduce(Scalar(v)); }
  Scalar fromRational(const Scalar& q) const { return reduce(q); }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool isZero(const Scalar& a) const { return a == 0; }

  /// Canonical form: identity on Q, residue 0..p-1 on F_p. Rationals with
  /// denominator divisible by p are rejected.
  Scalar reduce(const Scalar& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  std::string str() const;

private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;  // 0 means Q
};

}  // namespace mg
