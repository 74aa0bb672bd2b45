#include "dualco/field.hpp"

namespace dualco {

namespace {

bool is_prime_ul(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime_ul(p)) throw input_error("field characteristic must be prime: " + std::to_string(p));
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  return f;
}

Scalar Field::reduce(const Scalar& v) const {
  if (kind_ == FieldKind::Rationals) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = v.get_num() % p;
  mpz_class den = v.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) throw input_error("denominator not invertible mod " + std::to_string(p_));
  if (den != 1) {
    mpz_class dinv;
    if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()))
      throw input_error("denominator not invertible mod " + std::to_string(p_));
    num = (num * dinv) % p;
  }
  return Scalar(num);
}

Scalar Field::from_ratio(long num, long den) const {
  if (den == 0) throw input_error("zero denominator");
  Scalar v(num, den);
  v.canonicalize();
  return reduce(v);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw check_error("inverse of zero");
  if (kind_ == FieldKind::Rationals) return Scalar(1) / a;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class ainv;
  mpz_invert(ainv.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(ainv);
}

std::string Field::name() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace dualco
