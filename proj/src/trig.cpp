#include "circulant/numeric/trig.hpp"

#include <algorithm>
#include <stdexcept>

namespace circulant {

Angle::Angle(mpq_class turns) : turns_(std::move(turns)) {
  turns_.canonicalize();
  mpz_class num = turns_.get_num(), den = turns_.get_den();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  turns_ = mpq_class(r, den);
  turns_.canonicalize();
}

Angle Angle::of(long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("angle with zero denominator");
  return Angle(mpq_class(num, den));
}

Angle Angle::times(const mpz_class& k) const {
  return Angle(mpq_class(turns_.get_num() * k, turns_.get_den()));
}

Angle Angle::negated() const { return Angle(-turns_); }

mpq_class Angle::cos_fold() const {
  mpq_class t = turns_;
  if (t > mpq_class(1, 2)) t = 1 - t;
  return t;
}

namespace {

// cos(2*pi*t) for folded t in [0, 1/2] when it is rational.
bool exact_cos(const mpq_class& folded, mpq_class& out) {
  const unsigned long den = folded.get_den().get_ui();
  if (folded.get_den() > 6) return false;
  const long num = folded.get_num().get_si();
  switch (den) {
    case 1: out = 1; return true;                       // t = 0
    case 2: out = -1; return true;                      // t = 1/2
    case 3: out = mpq_class(-1, 2); return true;        // t = 1/3
    case 4: out = 0; return true;                       // t = 1/4
    case 6: out = num == 1 ? mpq_class(1, 2) : mpq_class(-1, 2); return true;
    default: return false;
  }
}

// Enclosure of the angle 2*pi*t in radians.
void radians(const mpq_class& t, mpfr_prec_t prec, mpfr_t out_lo, mpfr_t out_hi) {
  mpfr_t pi;
  mpfr_init2(pi, prec);
  mpfr_const_pi(pi, MPFR_RNDD);
  mpfr_mul_q(out_lo, pi, t.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_2ui(out_lo, out_lo, 1, MPFR_RNDD);
  mpfr_const_pi(pi, MPFR_RNDU);
  mpfr_mul_q(out_hi, pi, t.get_mpq_t(), MPFR_RNDU);
  mpfr_mul_2ui(out_hi, out_hi, 1, MPFR_RNDU);
  mpfr_clear(pi);
}

// Enclosure of f over [xlo, xhi] for 1-Lipschitz f (cos or sin): evaluate at
// both endpoints with outward rounding and pad by the angle width.
Interval lipschitz_trig(int (*f)(mpfr_t, const mpfr_t, mpfr_rnd_t),
                        const mpfr_t xlo, const mpfr_t xhi, mpfr_prec_t prec) {
  mpfr_t a, b, c, d, w;
  mpfr_inits2(prec, a, b, c, d, w, static_cast<mpfr_ptr>(nullptr));
  f(a, xlo, MPFR_RNDD);
  f(b, xlo, MPFR_RNDU);
  f(c, xhi, MPFR_RNDD);
  f(d, xhi, MPFR_RNDU);
  mpfr_sub(w, xhi, xlo, MPFR_RNDU);

  mpfr_t lo, hi;
  mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_min(lo, a, c, MPFR_RNDD);
  mpfr_sub(lo, lo, w, MPFR_RNDD);
  mpfr_max(hi, b, d, MPFR_RNDU);
  mpfr_add(hi, hi, w, MPFR_RNDU);
  // clamp to [-1, 1]
  if (mpfr_cmp_si(lo, -1) < 0) mpfr_set_si(lo, -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi, 1) > 0) mpfr_set_si(hi, 1, MPFR_RNDU);
  Interval out = Interval::from_mpfr(lo, hi, prec);
  mpfr_clears(a, b, c, d, w, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

Interval angle_cos(const Angle& a, mpfr_prec_t prec) {
  mpq_class folded = a.cos_fold();
  mpq_class exact;
  if (exact_cos(folded, exact)) return Interval(exact, prec);
  mpfr_t xlo, xhi;
  mpfr_inits2(prec + 16, xlo, xhi, static_cast<mpfr_ptr>(nullptr));
  radians(folded, prec + 16, xlo, xhi);
  Interval r = lipschitz_trig(mpfr_cos, xlo, xhi, prec);
  mpfr_clears(xlo, xhi, static_cast<mpfr_ptr>(nullptr));
  return r;
}

Interval angle_sin(const Angle& a, mpfr_prec_t prec) {
  const mpq_class& t = a.turns();
  if (t == 0) return Interval(0L, prec);
  if (t.get_den() == 2) return Interval(0L, prec);           // t = 1/2
  if (t.get_den() == 4) {
    return Interval(t.get_num() == 1 ? 1L : -1L, prec);      // t = 1/4 or 3/4
  }
  mpfr_t xlo, xhi;
  mpfr_inits2(prec + 16, xlo, xhi, static_cast<mpfr_ptr>(nullptr));
  radians(t, prec + 16, xlo, xhi);
  Interval r = lipschitz_trig(mpfr_sin, xlo, xhi, prec);
  mpfr_clears(xlo, xhi, static_cast<mpfr_ptr>(nullptr));
  return r;
}

CInterval unit_root(const Angle& a, mpfr_prec_t prec) {
  return {angle_cos(a, prec), angle_sin(a, prec)};
}

void CosineDeficitSum::add(const mpq_class& coeff, const Angle& t) {
  if (coeff <= 0) throw std::invalid_argument("cosine deficit coefficients must be positive");
  Angle folded(t.cos_fold());
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), folded,
      [](const auto& term, const Angle& x) { return term.second < x; });
  if (it != terms_.end() && it->second == folded) {
    it->first += coeff;
  } else {
    terms_.insert(it, {coeff, folded});
  }
}

bool CosineDeficitSum::exactly_zero() const {
  for (const auto& [c, t] : terms_)
    if (!t.cos_is_one()) return false;
  return true;
}

Interval CosineDeficitSum::enclosure(mpfr_prec_t prec) const {
  Interval acc(0L, prec);
  for (const auto& [c, t] : terms_) {
    if (t.cos_is_one()) continue;  // exact zero contribution
    Interval deficit = Interval(1L, prec) - angle_cos(t, prec);
    acc += deficit.mul_q(c);
  }
  return acc;
}

bool CosineDeficitSum::operator==(const CosineDeficitSum& o) const {
  auto strip = [](const std::vector<std::pair<mpq_class, Angle>>& v) {
    std::vector<std::pair<mpq_class, Angle>> out;
    for (const auto& term : v)
      if (!term.second.cos_is_one()) out.push_back(term);
    return out;
  };
  return strip(terms_) == strip(o.terms_);
}

}  // namespace circulant
