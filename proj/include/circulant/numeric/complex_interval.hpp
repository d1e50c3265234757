#pragma once

#include "circulant/numeric/interval.hpp"

namespace circulant {

// Axis-aligned rectangle enclosure of a complex number.
struct CInterval {
  Interval re;
  Interval im;

  CInterval() = default;
  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  explicit CInterval(mpfr_prec_t prec) : re(prec), im(prec) {}
  CInterval(long v, mpfr_prec_t prec) : re(v, prec), im(0L, prec) {}
  CInterval(const mpq_class& v, mpfr_prec_t prec) : re(v, prec), im(0L, prec) {}

  mpfr_prec_t precision() const { return re.precision(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool intersects(const CInterval& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }

  CInterval conj() const { return {re, -im}; }
  CInterval operator-() const { return {-re, -im}; }

  friend CInterval operator+(const CInterval& a, const CInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CInterval operator-(const CInterval& a, const CInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CInterval operator/(const CInterval& a, const CInterval& b) {
    Interval n = b.norm2();
    CInterval num = a * b.conj();
    return {num.re / n, num.im / n};
  }

  Interval norm2() const { return re.square() + im.square(); }
  Interval abs() const { return norm2().sqrt(); }
  CInterval recip() const {
    Interval n = norm2();
    return {re / n, (-im) / n};
  }
  CInterval square() const {
    return {re.square() - im.square(), (re * im) * 2L};
  }
  CInterval pow_ui(unsigned long e) const;

  std::string str(int digits = 17) const {
    return re.str(digits) + (im.contains_zero() ? "" : (" + i*" + im.str(digits)));
  }
};

}  // namespace circulant
