#include "flatcover/interval.hpp"

#include "flatcover/error.hpp"

#include <string>

namespace flatcover {

Enclosure::Enclosure() {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(long v) : Enclosure() {
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(const BigInt& v) : Enclosure() {
  const std::string s = v.str();
  mpfr_set_str(lo_, s.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(hi_, s.c_str(), 10, MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& other) : Enclosure() {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure& Enclosure::operator=(const Enclosure& other) {
  if (this != &other) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::rational(long p, long q) {
  if (q <= 0) throw ParameterError("rational enclosure needs a positive denominator");
  Enclosure out;
  mpfr_set_si(out.lo_, p, MPFR_RNDD);
  mpfr_div_si(out.lo_, out.lo_, q, MPFR_RNDD);
  mpfr_set_si(out.hi_, p, MPFR_RNDU);
  mpfr_div_si(out.hi_, out.hi_, q, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::operator+(const Enclosure& o) const {
  Enclosure out;
  mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::operator-(const Enclosure& o) const {
  Enclosure out;
  mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
  if (mpfr_sgn(lo_) < 0 || mpfr_sgn(o.lo_) < 0) throw ParameterError("enclosure product needs non-negative operands");
  Enclosure out;
  mpfr_mul(out.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(out.hi_, hi_, o.hi_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::operator/(const Enclosure& o) const {
  if (mpfr_sgn(lo_) < 0 || mpfr_sgn(o.lo_) <= 0) throw ParameterError("enclosure quotient needs a positive divisor");
  Enclosure out;
  mpfr_div(out.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_div(out.hi_, hi_, o.lo_, MPFR_RNDU);
  return out;
}

#define FLATCOVER_MONOTONE(name, fn, need_positive)                                           \
  Enclosure Enclosure::name() const {                                                         \
    if (need_positive && mpfr_sgn(lo_) <= 0) throw ParameterError(#name " needs a positive argument"); \
    Enclosure out;                                                                            \
    fn(out.lo_, lo_, MPFR_RNDD);                                                              \
    fn(out.hi_, hi_, MPFR_RNDU);                                                              \
    return out;                                                                               \
  }

FLATCOVER_MONOTONE(ln, mpfr_log, true)
FLATCOVER_MONOTONE(log2, mpfr_log2, true)
FLATCOVER_MONOTONE(exp, mpfr_exp, false)
FLATCOVER_MONOTONE(exp2, mpfr_exp2, false)
FLATCOVER_MONOTONE(cbrt, mpfr_cbrt, false)
FLATCOVER_MONOTONE(sqrt, mpfr_sqrt, false)
#undef FLATCOVER_MONOTONE

Enclosure Enclosure::sqr() const {
  if (mpfr_sgn(lo_) < 0) throw ParameterError("sqr enclosure needs a non-negative argument");
  Enclosure out;
  mpfr_sqr(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqr(out.hi_, hi_, MPFR_RNDU);
  return out;
}

double Enclosure::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::mid() const {
  mpfr_t m;
  mpfr_init2(m, kPrecision);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double v = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return v;
}

bool Enclosure::certainly_less(const Enclosure& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }

}  // namespace flatcover
