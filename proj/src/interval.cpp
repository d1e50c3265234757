#include "circulant/numeric/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace circulant {

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

void Interval::init(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(static_cast<mpfr_prec_t>(64)) {}

Interval::Interval(mpfr_prec_t prec) {
  init(prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const mpz_class& v, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& v, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  init(o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision());
    mpfr_set_prec(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_doubles(double lo, double hi, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpfr(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::ball(const mpfr_t m, const mpfr_t r, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_sub(out.lo_, m, r, MPFR_RNDD);
  mpfr_add(out.hi_, m, r, MPFR_RNDU);
  return out;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::is_strictly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::contains_si(long v) const {
  return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
}

bool Interval::intersects(const Interval& o) const {
  return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool Interval::certainly_less(const Interval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::certainly_greater(const Interval& o) const {
  return mpfr_cmp(lo_, o.hi_) > 0;
}

bool Interval::unique_integer(mpz_class& out) const {
  mpz_class a, b;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDU);  // ceil(lo)
  mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);  // floor(hi)
  if (a != b) return false;
  out = a;
  return true;
}

double Interval::width_upper() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Interval::str(int digits) const {
  mpfr_t m;
  mpfr_init2(m, std::max<mpfr_prec_t>(precision(), 64));
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, m);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(m);
  return out;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = join_prec(a, b);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);

  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);

  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.recip(); }

Interval& Interval::operator+=(const Interval& o) {
  *this = *this + o;
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  *this = *this * o;
  return *this;
}

Interval operator*(const Interval& a, long b) {
  Interval r(a.precision());
  if (b >= 0) {
    mpfr_mul_si(r.lo_, a.lo_, b, MPFR_RNDD);
    mpfr_mul_si(r.hi_, a.hi_, b, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_, a.hi_, b, MPFR_RNDD);
    mpfr_mul_si(r.hi_, a.lo_, b, MPFR_RNDU);
  }
  return r;
}

Interval operator+(const Interval& a, long b) {
  Interval r(a.precision());
  mpfr_add_si(r.lo_, a.lo_, b, MPFR_RNDD);
  mpfr_add_si(r.hi_, a.hi_, b, MPFR_RNDU);
  return r;
}

Interval operator-(long a, const Interval& b) {
  Interval r(b.precision());
  mpfr_si_sub(r.lo_, a, b.hi_, MPFR_RNDD);
  mpfr_si_sub(r.hi_, a, b.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  Interval r(precision());
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::square() const {
  Interval a = abs();
  Interval r(precision());
  mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_) < 0)
    throw std::domain_error("interval sqrt of a negative interval");
  Interval r(precision());
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0)
    throw std::domain_error("interval log requires a positive interval");
  Interval r(precision());
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(precision());
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::recip() const {
  if (contains_zero())
    throw std::domain_error("interval reciprocal of an interval containing 0");
  Interval r(precision());
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::pow_ui(unsigned long e) const {
  Interval acc(1L, precision());
  Interval base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1UL;
    if (e > 0) base = base.square();
  }
  return acc;
}

Interval Interval::mul_q(const mpq_class& q) const {
  return *this * Interval(q, precision());
}

double midpoint_distance(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(
      128, std::max(a.precision(), b.precision()));
  mpfr_t ma, mb;
  mpfr_inits2(prec, ma, mb, static_cast<mpfr_ptr>(nullptr));
  mpfr_add(ma, a.lo_, a.hi_, MPFR_RNDN);
  mpfr_add(mb, b.lo_, b.hi_, MPFR_RNDN);
  mpfr_sub(ma, ma, mb, MPFR_RNDN);
  mpfr_div_2ui(ma, ma, 1, MPFR_RNDN);
  mpfr_abs(ma, ma, MPFR_RNDN);
  double d = mpfr_get_d(ma, MPFR_RNDU);
  mpfr_clears(ma, mb, static_cast<mpfr_ptr>(nullptr));
  return d;
}

}  // namespace circulant
