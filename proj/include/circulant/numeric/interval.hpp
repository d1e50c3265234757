#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace circulant {

// Closed real interval [lo, hi] with MPFR endpoints.  Every operation rounds
// outward, so the result encloses the exact image of the operands.  Result
// precision is the maximum of the operand precisions.
class Interval {
 public:
  Interval();  // [0, 0] at 64 bits
  explicit Interval(mpfr_prec_t prec);
  Interval(long v, mpfr_prec_t prec);
  Interval(const mpz_class& v, mpfr_prec_t prec);
  Interval(const mpq_class& v, mpfr_prec_t prec);

  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_doubles(double lo, double hi, mpfr_prec_t prec);
  // Adopts the given endpoints verbatim (must satisfy lo <= hi).
  static Interval from_mpfr(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);
  // [m - r, m + r], both endpoints rounded outward.
  static Interval ball(const mpfr_t m, const mpfr_t r, mpfr_prec_t prec);
  static Interval hull(const Interval& a, const Interval& b);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  bool contains_zero() const;
  bool is_strictly_positive() const;  // lo > 0
  bool is_strictly_negative() const;  // hi < 0
  bool contains(const mpq_class& v) const;
  bool contains_si(long v) const;
  bool intersects(const Interval& o) const;
  bool certainly_less(const Interval& o) const;   // hi < o.lo
  bool certainly_greater(const Interval& o) const;

  // True iff exactly one integer lies in the interval; stores it in out.
  bool unique_integer(mpz_class& out) const;

  // hi - lo rounded up, converted to double (upper bound; +inf on overflow).
  double width_upper() const;
  double mid_double() const;
  // Decimal rendering of the midpoint, deterministic for fixed digits.
  std::string str(int digits = 17) const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& o);
  Interval& operator*=(const Interval& o);

  friend Interval operator*(const Interval& a, long b);
  friend Interval operator+(const Interval& a, long b);
  friend Interval operator-(long a, const Interval& b);

  Interval abs() const;
  Interval square() const;   // tight even when the interval straddles 0
  Interval sqrt() const;     // requires lo >= 0 (lo clamped at 0 if hi >= 0)
  Interval log() const;      // requires lo > 0
  Interval exp() const;
  Interval recip() const;    // requires 0 not contained
  Interval pow_ui(unsigned long e) const;
  Interval mul_q(const mpq_class& q) const;  // exact rational scaling

  // |mid(a) - mid(b)| evaluated in extended precision.
  friend double midpoint_distance(const Interval& a, const Interval& b);

 private:
  void init(mpfr_prec_t prec);
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace circulant
