#include "circulant/numeric/rootcert.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "circulant/errors.hpp"

namespace circulant {

namespace {

// Zero-width rectangle at the midpoint of r.
CInterval collapse(const CInterval& r, mpfr_prec_t prec) {
  mpfr_t m;
  mpfr_init2(m, prec);
  Interval re(prec), im(prec);
  mpfr_add(m, r.re.lo(), r.re.hi(), MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  re = Interval::from_mpfr(m, m, prec);
  mpfr_add(m, r.im.lo(), r.im.hi(), MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  im = Interval::from_mpfr(m, m, prec);
  mpfr_clear(m);
  return {re, im};
}

// Horner evaluation of the monic polynomial with the given low coefficients.
CInterval eval_monic(const std::vector<CInterval>& low, const CInterval& z,
                     mpfr_prec_t prec) {
  CInterval acc(1L, prec);
  for (size_t j = low.size(); j-- > 0;) acc = acc * z + low[j];
  return acc;
}

struct Disc {
  CInterval center;  // point rectangle
  Interval radius;   // [0, r]
};

}  // namespace

std::vector<CInterval> isolate_simple_roots(const CoeffOracle& coeffs_at,
                                            int degree, int target_bits,
                                            int start_bits, int max_bits) {
  if (degree < 1) return {};
  std::vector<CInterval> seeds;

  for (int prec = std::max(start_bits, target_bits + 64); prec <= max_bits;
       prec *= 2) {
    std::vector<CInterval> coeffs = coeffs_at(prec);
    if (static_cast<int>(coeffs.size()) != degree)
      throw error("coefficient oracle returned wrong degree");

    // Cauchy-style starting radius: 1 + max |a_j|.
    double bound = 1.0;
    for (const auto& c : coeffs)
      bound = std::max(bound, 1.0 + std::abs(c.re.mid_double()) +
                                  std::abs(c.im.mid_double()));

    std::vector<CInterval> z(degree, CInterval(static_cast<mpfr_prec_t>(prec)));
    if (seeds.empty()) {
      for (int i = 0; i < degree; ++i) {
        double angle = (2.0 * M_PI * i + 0.7) / degree;
        z[i] = CInterval(
            Interval::from_doubles(bound * std::cos(angle), bound * std::cos(angle), prec),
            Interval::from_doubles(bound * std::sin(angle), bound * std::sin(angle), prec));
      }
    } else {
      for (int i = 0; i < degree; ++i) z[i] = collapse(seeds[i], prec);
    }

    // Simultaneous iteration on midpoints.
    const int max_sweeps = std::min(512, 64 + 4 * prec / std::max(1, degree));
    mpfr_t tol;
    mpfr_init2(tol, 32);
    mpfr_set_ui_2exp(tol, 1, -(prec - 16), MPFR_RNDN);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      bool moved = false;
      for (int i = 0; i < degree; ++i) {
        CInterval f = eval_monic(coeffs, z[i], prec);
        CInterval denom(1L, static_cast<mpfr_prec_t>(prec));
        for (int j = 0; j < degree; ++j)
          if (j != i) denom = denom * (z[i] - z[j]);
        if (denom.contains_zero()) {
          // coincident iterates: nudge apart
          CInterval nudge(Interval::from_doubles(1e-3 * bound * (i + 1), 1e-3 * bound * (i + 1), prec),
                          Interval(0L, static_cast<mpfr_prec_t>(prec)));
          z[i] = collapse(z[i] + nudge, prec);
          moved = true;
          continue;
        }
        CInterval w = f / denom;
        Interval step = w.abs();
        if (mpfr_cmp(step.hi(), tol) > 0) moved = true;
        z[i] = collapse(z[i] - w, prec);
      }
      if (!moved) break;
    }
    mpfr_clear(tol);

    // Weierstrass disc certification.
    std::vector<Disc> discs(degree);
    bool ok = true;
    mpfr_t rad_target;
    mpfr_init2(rad_target, 32);
    mpfr_set_ui_2exp(rad_target, 1, -target_bits, MPFR_RNDN);
    for (int i = 0; i < degree && ok; ++i) {
      CInterval f = eval_monic(coeffs, z[i], prec);
      CInterval denom(1L, static_cast<mpfr_prec_t>(prec));
      for (int j = 0; j < degree; ++j)
        if (j != i) denom = denom * (z[i] - z[j]);
      if (denom.contains_zero()) {
        ok = false;
        break;
      }
      Interval w_abs = (f / denom).abs();
      Interval radius = w_abs * static_cast<long>(degree);
      if (mpfr_cmp(radius.hi(), rad_target) > 0) ok = false;
      discs[i] = {z[i], radius};
    }
    mpfr_clear(rad_target);

    // pairwise disjoint
    for (int i = 0; i < degree && ok; ++i) {
      for (int j = i + 1; j < degree && ok; ++j) {
        Interval dist = (discs[i].center - discs[j].center).abs();
        Interval rsum = discs[i].radius + discs[j].radius;
        if (!(mpfr_cmp(dist.lo(), rsum.hi()) > 0)) ok = false;
      }
    }

    if (ok) {
      std::vector<CInterval> out;
      out.reserve(degree);
      for (const auto& d : discs) {
        Interval pad = Interval::from_mpfr(d.radius.lo(), d.radius.hi(), prec);
        Interval sym = Interval::hull(-pad, pad);
        out.push_back({d.center.re + sym, d.center.im + sym});
      }
      return out;
    }
    seeds = z;
  }
  throw precision_error("root isolation did not certify within the precision cap");
}

}  // namespace circulant
