#include "circulant/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "circulant/errors.hpp"

namespace circulant {

Interval mahler_roots(const ShiftedPalindromic& P, int target_bits,
                      int max_bits) {
  PalindromicLaurentPoly base = P.base;
  base.trim();
  if (base.is_constant()) {
    mpq_class c = base.coeffs.empty() ? mpq_class(0) : base.coeffs[0];
    if (P.shift_is_zero()) {
      if (c == 0)
        throw std::invalid_argument("Mahler measure of the zero polynomial");
      return Interval(abs(c), 64);
    }
    const mpfr_prec_t prec = target_bits + 64;
    return (Interval(c, prec) + P.shift.enclosure(prec)).abs();
  }
  mpq_class lead = abs(base.coeffs.back());
  RootBundle bundle = isolate_roots(P, target_bits, max_bits);
  const mpfr_prec_t prec = target_bits + 64;
  Interval acc(lead, prec);
  for (const auto& pair : bundle.pairs) {
    if (pair.on_unit_circle) continue;
    acc *= pair.z.abs().pow_ui(pair.multiplicity);
  }
  return acc;
}

Interval mahler_roots(const PalindromicLaurentPoly& P, int target_bits,
                      int max_bits) {
  ShiftedPalindromic wrapped;
  wrapped.base = P;
  return mahler_roots(wrapped, target_bits, max_bits);
}

namespace {

// log of the geometric-mean estimate over the shifted N-point grid:
// (1/N) sum_j log |P(e^{2 pi i (j + 1/2)/N})|.  Plain rounded arithmetic.
void log_mean_on_grid(const ShiftedPalindromic& P, unsigned long N,
                      mpfr_prec_t prec, mpfr_t out) {
  const auto& coeffs = P.base.coeffs;
  const size_t s = coeffs.empty() ? 0 : coeffs.size() - 1;

  mpfr_t shift, theta, c1, ck, ck1, ck2, val, term, acc, two_pi;
  mpfr_inits2(prec, shift, theta, c1, ck, ck1, ck2, val, term, acc, two_pi,
              static_cast<mpfr_ptr>(nullptr));
  {
    Interval sh = P.shift.enclosure(prec);
    mpfr_add(shift, sh.lo(), sh.hi(), MPFR_RNDN);
    mpfr_div_2ui(shift, shift, 1, MPFR_RNDN);
  }
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_2ui(two_pi, two_pi, 1, MPFR_RNDN);
  mpfr_set_zero(acc, 1);

  for (unsigned long j = 0; j < N; ++j) {
    // theta = 2 pi (j + 1/2) / N
    mpfr_set_ui(theta, 2 * j + 1, MPFR_RNDN);
    mpfr_div_ui(theta, theta, 2 * N, MPFR_RNDN);
    mpfr_mul(theta, theta, two_pi, MPFR_RNDN);
    mpfr_cos(c1, theta, MPFR_RNDN);

    // val = a_0 + shift + sum_k 2 a_k cos(k theta)
    mpfr_set_q(val, mpq_class(coeffs.empty() ? 0 : coeffs[0]).get_mpq_t(),
               MPFR_RNDN);
    mpfr_add(val, val, shift, MPFR_RNDN);
    mpfr_set_ui(ck2, 1, MPFR_RNDN);  // cos(0)
    mpfr_set(ck1, c1, MPFR_RNDN);    // cos(theta)
    for (size_t k = 1; k <= s; ++k) {
      const mpfr_t* ck_ptr = nullptr;
      if (k == 1) {
        ck_ptr = &c1;
      } else {
        mpfr_mul(ck, c1, ck1, MPFR_RNDN);
        mpfr_mul_2ui(ck, ck, 1, MPFR_RNDN);
        mpfr_sub(ck, ck, ck2, MPFR_RNDN);
        mpfr_set(ck2, ck1, MPFR_RNDN);
        mpfr_set(ck1, ck, MPFR_RNDN);
        ck_ptr = &ck;
      }
      if (coeffs[k] == 0) continue;
      mpfr_set_q(term, mpq_class(2 * coeffs[k]).get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term, term, *ck_ptr, MPFR_RNDN);
      mpfr_add(val, val, term, MPFR_RNDN);
    }
    mpfr_abs(val, val, MPFR_RNDN);
    mpfr_log(val, val, MPFR_RNDN);
    mpfr_add(acc, acc, val, MPFR_RNDN);
  }
  mpfr_div_ui(out, acc, N, MPFR_RNDN);
  mpfr_clears(shift, theta, c1, ck, ck1, ck2, val, term, acc, two_pi,
              static_cast<mpfr_ptr>(nullptr));
}

std::uint64_t support_gcd(const PalindromicLaurentPoly& base) {
  std::uint64_t d = 0;
  for (size_t j = 1; j < base.coeffs.size(); ++j)
    if (base.coeffs[j] != 0) d = std::gcd<std::uint64_t>(d, j);
  return d == 0 ? 1 : d;
}

}  // namespace

QuadratureResult mahler_integral(const ShiftedPalindromic& P,
                                 unsigned long min_points, double tol,
                                 unsigned long max_points) {
  QuadratureResult res;
  PalindromicLaurentPoly base = P.base;
  base.trim();
  if (base.is_constant() && P.shift_is_zero()) {
    res.estimate = Interval(abs(base.coeffs.empty() ? mpq_class(0) : base.coeffs[0]), 64);
    res.converged = true;
    res.points = 0;
    return res;
  }
  ShiftedPalindromic trimmed = P;
  trimmed.base = base;

  // Grid size stays a multiple of 2d so the 1/N correction from possible
  // unit-circle roots (at d-th roots of unity) is the same at N and 2N and
  // the Richardson step removes it exactly.
  const std::uint64_t d = support_gcd(base);
  const mpfr_prec_t prec = 128;
  unsigned long N = 2 * d;
  while (N < std::max<unsigned long>(min_points, 64)) N *= 2;

  mpfr_t m_n, m_2n, r_prev, r_cur;
  mpfr_inits2(prec, m_n, m_2n, r_prev, r_cur, static_cast<mpfr_ptr>(nullptr));
  log_mean_on_grid(trimmed, N, prec, m_n);
  bool have_prev = false;
  double delta = 0;

  while (true) {
    log_mean_on_grid(trimmed, 2 * N, prec, m_2n);
    // Richardson: R = 2 m_{2N} - m_N
    mpfr_mul_2ui(r_cur, m_2n, 1, MPFR_RNDN);
    mpfr_sub(r_cur, r_cur, m_n, MPFR_RNDN);
    if (have_prev) {
      mpfr_t diff;
      mpfr_init2(diff, prec);
      mpfr_sub(diff, r_cur, r_prev, MPFR_RNDN);
      delta = std::fabs(mpfr_get_d(diff, MPFR_RNDN));
      mpfr_clear(diff);
      if (delta < tol / 4) {
        res.converged = true;
      }
    }
    mpfr_set(r_prev, r_cur, MPFR_RNDN);
    have_prev = true;
    mpfr_set(m_n, m_2n, MPFR_RNDN);
    N *= 2;
    if (res.converged || 2 * N > max_points) break;
  }

  // estimate = exp(R) with the observed delta as the uncertainty
  mpfr_t lo, hi, pad;
  mpfr_inits2(prec, lo, hi, pad, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(pad, std::max(delta, 1e-30), MPFR_RNDN);
  mpfr_sub(lo, r_cur, pad, MPFR_RNDD);
  mpfr_add(hi, r_cur, pad, MPFR_RNDU);
  mpfr_exp(lo, lo, MPFR_RNDD);
  mpfr_exp(hi, hi, MPFR_RNDU);
  res.estimate = Interval::from_mpfr(lo, hi, prec);
  res.points = N;
  res.last_delta = delta;
  mpfr_clears(m_n, m_2n, r_prev, r_cur, lo, hi, pad,
              static_cast<mpfr_ptr>(nullptr));
  return res;
}

QuadratureResult mahler_integral(const PalindromicLaurentPoly& P,
                                 unsigned long min_points, double tol,
                                 unsigned long max_points) {
  ShiftedPalindromic wrapped;
  wrapped.base = P;
  return mahler_integral(wrapped, min_points, tol, max_points);
}

MahlerReport asymptotic_constant(const CirculantSpec& spec, int target_bits,
                                 bool with_quadrature) {
  MahlerReport report;
  report.q = spec.jump_square_sum();
  report.prefactor = mpq_class(
      mpz_class(spec.delta) * spec.delta * spec.d * spec.d,
      mpz_class(spec.beta) * report.q);
  report.prefactor.canonicalize();

  PolyFamily fam = build_family(spec);
  const mpfr_prec_t prec = target_bits + 64;
  Interval A(1L, prec);
  Interval logsum(0L, prec);
  for (std::uint64_t u = 0; u < spec.beta; ++u) {
    MahlerEntry entry;
    entry.u = u;
    entry.measure = mahler_roots(fam.members[u], target_bits);
    entry.log_measure = entry.measure.log();
    A *= entry.measure;
    logsum += entry.log_measure;
    if (with_quadrature) {
      QuadratureResult quad = mahler_integral(fam.members[u]);
      report.quadrature_converged &= quad.converged;
      report.quadrature_gap = std::max(
          report.quadrature_gap,
          midpoint_distance(entry.measure, quad.estimate));
    }
    report.per_u.push_back(std::move(entry));
  }
  report.growth_constant = A;
  report.thermodynamic =
      logsum.mul_q(mpq_class(1, static_cast<unsigned long>(spec.beta)));
  return report;
}

Interval thermodynamic_limit(const CirculantSpec& spec, int target_bits) {
  MahlerReport report = asymptotic_constant(spec, target_bits, false);
  return report.thermodynamic;
}

std::vector<ConvergenceRow> convergence_report(
    const CirculantSpec& spec, const std::vector<std::uint64_t>& n_list,
    int target_bits) {
  MahlerReport mr = asymptotic_constant(spec, target_bits, false);
  const mpfr_prec_t prec = target_bits + 64;
  std::vector<ConvergenceRow> rows;
  for (auto n : n_list) {
    ConvergenceRow row;
    row.n = n;
    try {
      CirculantSpec sn = validate_spec(spec.beta, spec.s_jumps,
                                       spec.alpha_jumps, n);
      TauResult tau = tau_chebyshev(sn);
      row.tau = tau.value;
      // ratio = tau * beta * q / (n * delta^2 * d^2 * A^n)
      Interval denom = mr.growth_constant.pow_ui(n).mul_q(
          mpq_class(mpz_class(n), 1) * mr.prefactor);
      row.ratio = Interval(row.tau, prec) / denom;
      row.applicable = true;
    } catch (const spec_error& e) {
      row.reason = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace circulant
