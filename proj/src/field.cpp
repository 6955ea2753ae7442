#include "mg/field.hpp"

namespace mg {

Field Field::prime(unsigned long p) {
  if (p < 2) throw std::invalid_argument("Field::prime: p must be >= 2");
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
    throw std::invalid_argument("Field::prime: " + std::to_string(p) +
                                " is not prime");
  return Field(p);
}

Scalar Field::reduce(const Scalar& a) const {
  if (p_ == 0) return a;
  mpz_class p(p_);
  mpz_class den = a.get_den() % p;
  if (den == 0)
    throw std::domain_error("Field: denominator divisible by the modulus");
  mpz_class deninv;
  if (!mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()))
    throw std::domain_error("Field: denominator not invertible");
  mpz_class num = a.get_num() % p;
  mpz_class r = (num * deninv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("Field: division by zero");
  if (p_ == 0) return 1 / a;
  return reduce(Scalar(1) / a);
}

std::string Field::str() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

}  // namespace mg
