#include "circulant/numeric/chebyshev.hpp"

namespace circulant {

namespace {

template <class R>
struct Mat2 {
  R a, b, c, d;  // [[a, b], [c, d]]
};

template <class R>
Mat2<R> mat_mul(const Mat2<R>& x, const Mat2<R>& y) {
  return {R(x.a * y.a + x.b * y.c), R(x.a * y.b + x.b * y.d),
          R(x.c * y.a + x.d * y.c), R(x.c * y.b + x.d * y.d)};
}

// (T_{k+1}, T_k) = M (T_k, T_{k-1}) with M = [[2w, -1], [1, 0]].
template <class R>
R cheb_impl(unsigned long n, const R& w, const R& one) {
  if (n == 0) return one;
  R zero = R(one - one);
  Mat2<R> m{R(w + w), R(zero - one), one, zero};
  Mat2<R> acc{one, zero, zero, one};
  unsigned long e = n - 1;
  while (e > 0) {
    if (e & 1UL) acc = mat_mul(acc, m);
    e >>= 1UL;
    if (e > 0) m = mat_mul(m, m);
  }
  // T_n = acc * (T_1, T_0)^T = acc.a * w + acc.b
  return R(acc.a * w + acc.b);
}

}  // namespace

mpz_class chebyshev_T(unsigned long n, const mpz_class& w) {
  return cheb_impl(n, w, mpz_class(1));
}

mpq_class chebyshev_T(unsigned long n, const mpq_class& w) {
  return cheb_impl(n, w, mpq_class(1));
}

Interval chebyshev_T(unsigned long n, const Interval& w) {
  return cheb_impl(n, w, Interval(1L, w.precision()));
}

CInterval chebyshev_T(unsigned long n, const CInterval& w) {
  return cheb_impl(n, w, CInterval(1L, w.precision()));
}

}  // namespace circulant
