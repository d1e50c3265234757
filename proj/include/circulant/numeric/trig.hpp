#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "circulant/numeric/complex_interval.hpp"
#include "circulant/numeric/interval.hpp"

namespace circulant {

// Rational number of full turns, kept canonical in [0, 1).  Exact angle
// arithmetic lets products of trigonometric factors detect zeros exactly and
// re-evaluate at any precision without drift.
class Angle {
 public:
  Angle() : turns_(0) {}
  explicit Angle(mpq_class turns);
  static Angle of(long num, unsigned long den);

  const mpq_class& turns() const { return turns_; }
  bool is_zero() const { return turns_ == 0; }
  // cos(2*pi*t) == 1  <=>  t integral; after normalization this is t == 0.
  bool cos_is_one() const { return turns_ == 0; }

  Angle times(const mpz_class& k) const;
  Angle negated() const;
  bool operator==(const Angle& o) const { return turns_ == o.turns_; }
  bool operator<(const Angle& o) const { return turns_ < o.turns_; }

  // Folded to [0, 1/2]: cos(2*pi*fold) == cos(2*pi*turns).
  mpq_class cos_fold() const;

 private:
  mpq_class turns_;
};

// Certified enclosures of cos/sin(2*pi*a); exact for the rational special
// values (denominators 1, 2, 3, 4, 6 for cos; 1, 2, 4 for sin).
Interval angle_cos(const Angle& a, mpfr_prec_t prec);
Interval angle_sin(const Angle& a, mpfr_prec_t prec);
CInterval unit_root(const Angle& a, mpfr_prec_t prec);

// Sum of c_i * (1 - cos(2*pi*t_i)) with c_i > 0.  Nonnegative by
// construction and exactly zero iff every angle is integral, which makes
// zero-detection for eigenvalues and constant shifts a rational test.
class CosineDeficitSum {
 public:
  CosineDeficitSum() = default;

  void add(const mpq_class& coeff, const Angle& t);
  bool exactly_zero() const;
  Interval enclosure(mpfr_prec_t prec) const;
  bool empty() const { return terms_.empty(); }
  const std::vector<std::pair<mpq_class, Angle>>& terms() const { return terms_; }

  bool operator==(const CosineDeficitSum& o) const;

 private:
  // canonical: angles folded to [0,1/2], sorted, equal angles merged
  std::vector<std::pair<mpq_class, Angle>> terms_;
};

}  // namespace circulant
