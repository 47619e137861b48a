#pragma once

// Closed real intervals with MPFR endpoints rounded outward. Used where a
// bound is irrational and a "holds" verdict must be conservative.

#include "flatcover/bigint.hpp"

#include <mpfr.h>

namespace flatcover {

class Enclosure {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  Enclosure();
  explicit Enclosure(long v);
  explicit Enclosure(const BigInt& v);
  Enclosure(const Enclosure& other);
  Enclosure& operator=(const Enclosure& other);
  ~Enclosure();

  // p / q with q > 0.
  static Enclosure rational(long p, long q);

  Enclosure operator+(const Enclosure& o) const;
  Enclosure operator-(const Enclosure& o) const;
  // Both operands must be non-negative.
  Enclosure operator*(const Enclosure& o) const;
  // Numerator non-negative, denominator strictly positive.
  Enclosure operator/(const Enclosure& o) const;

  // Monotone functions on positive arguments.
  Enclosure ln() const;
  Enclosure log2() const;
  Enclosure exp() const;
  Enclosure exp2() const;
  Enclosure cbrt() const;
  Enclosure sqrt() const;
  Enclosure sqr() const;

  double lower() const;
  double upper() const;
  double mid() const;

  // Every point of *this is strictly below every point of o.
  bool certainly_less(const Enclosure& o) const;

 private:
  mpfr_t lo_, hi_;
};

}  // namespace flatcover
