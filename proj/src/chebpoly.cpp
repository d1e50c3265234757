#include "circulant/chebpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "circulant/errors.hpp"
#include "circulant/numeric/rootcert.hpp"

namespace circulant {

void PalindromicLaurentPoly::trim() {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

Interval PalindromicLaurentPoly::eval_on_circle(const Angle& t,
                                                mpfr_prec_t prec) const {
  Interval acc = coeffs.empty() ? Interval(0L, prec) : Interval(coeffs[0], prec);
  for (size_t j = 1; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    Interval c = angle_cos(t.times(mpz_class(static_cast<unsigned long>(j))), prec);
    acc += c.mul_q(2 * coeffs[j]);
  }
  return acc;
}

CInterval PalindromicLaurentPoly::eval(const CInterval& z) const {
  const mpfr_prec_t prec = z.precision();
  CInterval acc(coeffs.empty() ? mpq_class(0) : coeffs[0], prec);
  CInterval zp(1L, prec), zm(1L, prec);
  CInterval zinv = z.recip();
  for (size_t j = 1; j < coeffs.size(); ++j) {
    zp = zp * z;
    zm = zm * zinv;
    if (coeffs[j] == 0) continue;
    CInterval c(coeffs[j], prec);
    acc = acc + c * (zp + zm);
  }
  return acc;
}

mpq_class PalindromicLaurentPoly::eval_q(const mpq_class& z) const {
  mpq_class acc = coeffs.empty() ? mpq_class(0) : coeffs[0];
  mpq_class zp = 1, zm = 1, zinv = 1 / z;
  for (size_t j = 1; j < coeffs.size(); ++j) {
    zp *= z;
    zm *= zinv;
    acc += coeffs[j] * (zp + zm);
  }
  return acc;
}

std::vector<mpq_class> PalindromicLaurentPoly::ordinary_form() const {
  const unsigned s = half_degree();
  std::vector<mpq_class> out(2 * s + 1, mpq_class(0));
  out[s] = coeffs.empty() ? mpq_class(0) : coeffs[0];
  for (unsigned j = 1; j <= s; ++j) {
    out[s + j] += coeffs[j];
    out[s - j] += coeffs[j];
  }
  return out;
}

std::string PalindromicLaurentPoly::str() const {
  std::ostringstream os;
  os << (coeffs.empty() ? mpq_class(0) : coeffs[0]).get_str();
  for (size_t j = 1; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    os << (coeffs[j] > 0 ? " + " : " - ");
    mpq_class a = abs(coeffs[j]);
    if (a != 1) os << a.get_str() << "*";
    os << "(z^" << j << " + z^-" << j << ")";
  }
  return os.str();
}

Interval ShiftedPalindromic::eval_on_circle(const Angle& t,
                                            mpfr_prec_t prec) const {
  return base.eval_on_circle(t, prec) + shift.enclosure(prec);
}

PolyFamily build_family(const CirculantSpec& spec) {
  PolyFamily fam;

  fam.P.coeffs.assign(spec.s_jumps.back() + 1, mpq_class(0));
  fam.P.coeffs[0] = 2 * static_cast<long>(spec.k);
  for (auto s : spec.s_jumps) fam.P.coeffs[s] = -1;

  fam.p_alpha.coeffs.assign(
      spec.alpha_jumps.empty() ? 1 : spec.alpha_jumps.back() + 1, mpq_class(0));
  fam.p_alpha.coeffs[0] = 2 * static_cast<long>(spec.ell);
  for (auto a : spec.alpha_jumps) fam.p_alpha.coeffs[a] = -1;

  const std::uint64_t top =
      std::max(spec.s_jumps.back(),
               spec.alpha_jumps.empty() ? 0 : spec.alpha_jumps.back() * spec.n);
  fam.L.coeffs.assign(top + 1, mpq_class(0));
  fam.L.coeffs[0] = 2 * static_cast<long>(spec.k + spec.ell);
  for (auto s : spec.s_jumps) fam.L.coeffs[s] -= 1;
  for (auto a : spec.alpha_jumps) fam.L.coeffs[a * spec.n] -= 1;
  fam.L.trim();

  fam.members.reserve(spec.beta);
  for (std::uint64_t u = 0; u < spec.beta; ++u) {
    ShiftedPalindromic member;
    member.base = fam.P;
    member.u = u;
    for (auto a : spec.alpha_jumps) {
      // 4 sin^2(pi u a / beta) = 2 (1 - cos(2 pi u a / beta))
      member.shift.add(2, Angle(mpq_class(mpz_class(u) * a, mpz_class(spec.beta))));
    }
    fam.members.push_back(std::move(member));
  }
  return fam;
}

ChebyshevTransform chebyshev_transform(const PalindromicLaurentPoly& P) {
  const unsigned s = P.half_degree();
  if (s == 0)
    throw constant_poly_error("Chebyshev transform of a constant polynomial");
  // monomial coefficient rows of T_j via the three-term recurrence
  std::vector<std::vector<mpz_class>> T(s + 1);
  T[0] = {1};
  if (s >= 1) T[1] = {0, 1};
  for (unsigned j = 2; j <= s; ++j) {
    T[j].assign(j + 1, 0);
    for (size_t i = 0; i < T[j - 1].size(); ++i) T[j][i + 1] += 2 * T[j - 1][i];
    for (size_t i = 0; i < T[j - 2].size(); ++i) T[j][i] -= T[j - 2][i];
  }
  ChebyshevTransform out;
  out.coeffs.assign(s + 1, mpq_class(0));
  out.coeffs[0] = P.coeffs[0];
  for (unsigned j = 1; j <= s; ++j) {
    if (P.coeffs[j] == 0) continue;
    for (size_t i = 0; i < T[j].size(); ++i)
      out.coeffs[i] += 2 * P.coeffs[j] * T[j][i];
  }
  return out;
}

Interval ChebyshevTransform::eval(const Interval& w) const {
  Interval acc(0L, w.precision());
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = acc * w + Interval(coeffs[i], w.precision());
  return acc;
}

CInterval ChebyshevTransform::eval(const CInterval& w) const {
  CInterval acc(0L, w.precision());
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = acc * w + CInterval(coeffs[i], w.precision());
  return acc;
}

mpq_class ChebyshevTransform::eval_q(const mpq_class& w) const {
  mpq_class acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * w + coeffs[i];
  return acc;
}

namespace {

Interval interval_min(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max(a.precision(), b.precision());
  mpfr_t lo, hi;
  mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_min(lo, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(hi, a.hi(), b.hi(), MPFR_RNDU);
  Interval out = Interval::from_mpfr(lo, hi, prec);
  mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

// Circle pairs contributed by one division by (z^d - 1)^2.
void append_circle_pairs(std::vector<RootPair>& pairs, std::uint64_t d,
                         int copies, mpfr_prec_t prec) {
  for (std::uint64_t t = 0; 2 * t <= d; ++t) {
    Angle angle = Angle(mpq_class(static_cast<unsigned long>(t),
                                  static_cast<unsigned long>(d)));
    RootPair pair;
    pair.on_unit_circle = true;
    pair.circle_angle = angle;
    pair.z = unit_root(angle, prec);
    pair.z_inv = pair.z.conj();
    pair.w = {angle_cos(angle, prec), Interval(0L, prec)};
    const bool self_paired = (t == 0) || (2 * t == d);
    pair.multiplicity = self_paired ? copies : 2 * copies;
    pairs.push_back(std::move(pair));
  }
}

struct OffCircleRoots {
  std::vector<CInterval> rects;
  int multiplicity = 1;
};

// Classify and pair the certified rectangles of one square-free factor.
// Returns false when a rectangle touches the unit circle or the reciprocal
// matching is ambiguous at this precision.
bool pair_factor_roots(const OffCircleRoots& roots, mpfr_prec_t prec,
                       std::vector<RootPair>& pairs, Interval& margin,
                       bool& have_margin) {
  const size_t count = roots.rects.size();
  std::vector<Interval> mods;
  mods.reserve(count);
  std::vector<int> side(count);  // +1 outside, -1 inside
  Interval one(1L, prec);
  for (size_t i = 0; i < count; ++i) {
    Interval a = roots.rects[i].abs();
    if (a.certainly_greater(one)) side[i] = 1;
    else if (a.certainly_less(one)) side[i] = -1;
    else return false;
    mods.push_back(std::move(a));
  }

  std::vector<bool> used(count, false);
  for (size_t i = 0; i < count; ++i) {
    if (used[i]) continue;
    if (side[i] < 0) continue;  // handled from its outside partner
    CInterval rec = roots.rects[i].recip();
    size_t partner = count;
    for (size_t j = 0; j < count; ++j) {
      if (j == i || used[j]) continue;
      if (roots.rects[j].intersects(rec)) {
        if (partner != count) return false;  // ambiguous
        partner = j;
      }
    }
    if (partner == count || side[partner] > 0) return false;
    used[i] = used[partner] = true;

    RootPair pair;
    pair.z = roots.rects[i];
    pair.z_inv = roots.rects[partner];
    pair.w = (pair.z + pair.z_inv) * CInterval(mpq_class(1, 2), prec);
    pair.multiplicity = roots.multiplicity;
    Interval m_out = mods[i] - one;
    Interval m_in = one - mods[partner];
    Interval m = interval_min(m_out, m_in);
    margin = have_margin ? interval_min(margin, m) : m;
    have_margin = true;
    pairs.push_back(std::move(pair));
  }
  for (size_t i = 0; i < count; ++i)
    if (!used[i]) return false;
  return true;
}

CoeffOracle oracle_from_rationals(std::vector<mpq_class> low) {
  return [low = std::move(low)](mpfr_prec_t prec) {
    std::vector<CInterval> out;
    out.reserve(low.size());
    for (const auto& c : low) out.emplace_back(c, prec);
    return out;
  };
}

// Sort key: |z| descending, then argument ascending.
void order_pairs(std::vector<RootPair>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const RootPair& a, const RootPair& b) {
                     double ma = a.on_unit_circle ? 1.0 : a.z.abs().mid_double();
                     double mb = b.on_unit_circle ? 1.0 : b.z.abs().mid_double();
                     if (ma != mb) return ma > mb;
                     double aa = a.on_unit_circle
                                     ? 2.0 * M_PI * a.circle_angle.turns().get_d()
                                     : std::atan2(a.z.im.mid_double(),
                                                  a.z.re.mid_double());
                     double ab = b.on_unit_circle
                                     ? 2.0 * M_PI * b.circle_angle.turns().get_d()
                                     : std::atan2(b.z.im.mid_double(),
                                                  b.z.re.mid_double());
                     return aa < ab;
                   });
}

}  // namespace

RootBundle isolate_roots(const ShiftedPalindromic& poly, int target_bits,
                         int max_bits) {
  PalindromicLaurentPoly base = poly.base;
  base.trim();
  const unsigned s = base.half_degree();
  RootBundle bundle;
  bundle.degree = s;
  if (s == 0) {
    bundle.precision_bits = target_bits;
    bundle.off_circle_margin = Interval(0L, 64);
    return bundle;
  }

  const bool exact_shift_zero = poly.shift_is_zero();
  std::vector<mpq_class> ordinary = base.ordinary_form();
  const mpq_class lead = ordinary.back();
  if (lead == 0) throw std::logic_error("trimmed polynomial has a zero lead");

  // Exact structure: integer scaling, unit-circle factors, square-free split.
  poly::Z integer_form;
  std::vector<std::pair<poly::Z, int>> factors;  // square-free, monic, off circle
  int circle_copies = 0;
  std::uint64_t circle_order = 1;
  bool exact_path = false;
  if (exact_shift_zero) {
    mpz_class den_lcm = 1;
    for (const auto& c : ordinary)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              c.get_den().get_mpz_t());
    integer_form.reserve(ordinary.size());
    for (const auto& c : ordinary) {
      mpq_class scaled = c * den_lcm;
      integer_form.push_back(scaled.get_num());
    }
    if (integer_form.back() < 0)
      for (auto& c : integer_form) c = -c;
    if (integer_form.back() == 1) {
      exact_path = true;
      std::uint64_t d = 0;
      for (unsigned j = 1; j < base.coeffs.size(); ++j)
        if (base.coeffs[j] != 0) d = std::gcd<std::uint64_t>(d, j);
      if (d == 0) d = 1;
      circle_order = d;
      poly::Z rest = integer_form;
      poly::Z quot;
      while (poly::divide_exact(rest, poly::circle_factor_squared(d), quot)) {
        rest = quot;
        ++circle_copies;
      }
      factors = poly::squarefree_decomposition(rest);
    }
  }

  for (int target = target_bits; target <= max_bits; target *= 2) {
    const mpfr_prec_t prec = target + 64;
    std::vector<RootPair> pairs;
    Interval margin(0L, prec);
    bool have_margin = false;
    bool ok = true;

    if (exact_path) {
      if (circle_copies > 0)
        append_circle_pairs(pairs, circle_order, circle_copies, prec);
      for (const auto& [factor, multiplicity] : factors) {
        const int fdeg = poly::deg(factor);
        std::vector<mpq_class> low(fdeg);
        for (int i = 0; i < fdeg; ++i) low[i] = mpq_class(factor[i]);
        OffCircleRoots roots;
        roots.multiplicity = multiplicity;
        roots.rects = isolate_simple_roots(oracle_from_rationals(std::move(low)),
                                           fdeg, target, 128, max_bits);
        if (!pair_factor_roots(roots, prec, pairs, margin, have_margin)) {
          ok = false;
          break;
        }
      }
    } else {
      // Monicized coefficients; only the middle one carries the shift.
      std::vector<mpq_class> low(2 * s);
      for (unsigned i = 0; i < 2 * s; ++i) low[i] = ordinary[i] / lead;
      const CosineDeficitSum shift = poly.shift;
      const mpq_class lead_copy = lead;
      CoeffOracle oracle = [low, shift, lead_copy, s](mpfr_prec_t p) {
        std::vector<CInterval> out;
        out.reserve(low.size());
        for (unsigned i = 0; i < low.size(); ++i) {
          if (i == s) {
            Interval c = Interval(low[i], p) +
                         shift.enclosure(p).mul_q(1 / lead_copy);
            out.push_back({c, Interval(0L, p)});
          } else {
            out.emplace_back(low[i], p);
          }
        }
        return out;
      };
      OffCircleRoots roots;
      roots.multiplicity = 1;
      roots.rects =
          isolate_simple_roots(oracle, 2 * s, target, 128, max_bits);
      ok = pair_factor_roots(roots, prec, pairs, margin, have_margin);
    }

    if (ok) {
      int total = 0;
      for (const auto& p : pairs) total += p.multiplicity;
      if (total != static_cast<int>(s))
        throw error("root pairing lost roots for " + base.str());
      order_pairs(pairs);
      bundle.pairs = std::move(pairs);
      bundle.precision_bits = target;
      bundle.has_off_circle = have_margin;
      bundle.off_circle_margin =
          have_margin ? margin : Interval(0L, prec);
      return bundle;
    }
  }
  throw precision_error("could not separate roots from the unit circle for " +
                        base.str());
}

RootBundle isolate_roots(const PalindromicLaurentPoly& poly, int target_bits,
                         int max_bits) {
  ShiftedPalindromic wrapped;
  wrapped.base = poly;
  return isolate_roots(wrapped, target_bits, max_bits);
}

MarginReport unit_circle_margin(const RootBundle& bundle,
                                const CirculantSpec& spec, std::uint64_t u) {
  if (u == 0 || u >= spec.beta)
    throw std::invalid_argument("margin is defined for 0 < u < beta");
  std::uint64_t g = spec.beta;
  for (auto a : spec.alpha_jumps) g = std::gcd(g, a);
  if (spec.ell == 0 || g != 1)
    throw std::invalid_argument(
        "margin requires a spec with gcd(alpha..., beta) == 1; reduce first");
  for (const auto& pair : bundle.pairs)
    if (pair.on_unit_circle)
      throw circle_margin_error("unit-circle root in a shifted member for " +
                                spec.label());
  if (!bundle.has_off_circle || !bundle.off_circle_margin.is_strictly_positive())
    throw circle_margin_error("margin not certified positive for " +
                              spec.label());
  return {u, bundle.off_circle_margin};
}

}  // namespace circulant
