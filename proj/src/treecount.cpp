#include "circulant/treecount.hpp"

#include <numeric>

#include "circulant/eigen.hpp"
#include "circulant/errors.hpp"
#include "circulant/laplacian.hpp"
#include "circulant/numeric/chebyshev.hpp"

namespace circulant {

const char* to_string(TauMethod m) {
  switch (m) {
    case TauMethod::BruteForce: return "bruteforce";
    case TauMethod::EigenProduct: return "eigenproduct";
    case TauMethod::ChebyshevProduct: return "chebyshev";
    case TauMethod::ClosedFormS1: return "closed-form-s1";
    case TauMethod::ClosedFormS12: return "closed-form-s12";
  }
  return "?";
}

TauResult tau_bruteforce(const CirculantSpec& spec, std::uint64_t cap) {
  TauResult r;
  r.value = spanning_tree_count_bruteforce(spec, cap);
  r.method = TauMethod::BruteForce;
  return r;
}

namespace {

// Runs attempt at doubling precision until it certifies an integer.
template <class F>
TauResult certified_round(F&& attempt, TauMethod method, Precision opts,
                          const std::string& what) {
  for (int prec = opts.start; prec <= opts.max; prec *= 2) {
    Interval v = attempt(prec);
    mpz_class value;
    if (v.width_upper() < 0.5 && v.unique_integer(value))
      return {value, method, prec, true};
  }
  throw precision_error("certified rounding failed for " + what);
}

Angle residue_angle(std::uint64_t u, std::uint64_t beta) {
  return Angle(mpq_class(static_cast<unsigned long>(u),
                         static_cast<unsigned long>(beta)));
}

// Enclosure of the tau_1 product (n/q) prod_{w != 1} |2 T_n(w_j(0)) - 2|.
Interval fixed_factor_interval(const CirculantSpec& spec,
                               const RootBundle& bundle, int prec) {
  Interval acc(1L, static_cast<mpfr_prec_t>(prec));
  Angle zero;
  for (const auto& pair : bundle.pairs) {
    if (pair.w_is_one()) {
      if (pair.multiplicity != 1)
        throw error("unexpected multiplicity at the excluded root w = 1");
      continue;
    }
    Interval f = pair_factor_abs(pair, spec.n, zero, prec);
    acc *= f.pow_ui(pair.multiplicity);
  }
  return acc.mul_q(mpq_class(static_cast<unsigned long>(spec.n),
                             static_cast<unsigned long>(spec.jump_square_sum())));
}

Interval nonfixed_factor_interval(const CirculantSpec& spec,
                                  const PolyFamily& fam, int prec) {
  Interval acc(1L, static_cast<mpfr_prec_t>(prec));
  if (spec.beta == 1) return acc;
  for (std::uint64_t u = 1; u < spec.beta; ++u) {
    RootBundle bundle = isolate_roots(fam.members[u], prec);
    Angle omega = residue_angle(u, spec.beta);
    for (const auto& pair : bundle.pairs)
      acc *= pair_factor_abs(pair, spec.n, omega, prec).pow_ui(pair.multiplicity);
  }
  return acc.mul_q(mpq_class(1, static_cast<unsigned long>(spec.beta)));
}

}  // namespace

Interval pair_factor_abs(const RootPair& pair, unsigned long n,
                         const Angle& omega_turns, mpfr_prec_t prec) {
  if (pair.on_unit_circle) {
    // 2 cos(2 pi n a) - 2 cos(2 pi w), both angles exact
    Angle powered = pair.circle_angle.times(mpz_class(n));
    if (powered.cos_fold() == omega_turns.cos_fold())
      throw error("vanishing spectral factor: disconnected parameters slipped through validation");
    Interval diff =
        (angle_cos(powered, prec) - angle_cos(omega_turns, prec)) * 2L;
    return diff.abs();
  }
  CInterval t = chebyshev_T(n, pair.w);
  CInterval c(angle_cos(omega_turns, prec), Interval(0L, prec));
  CInterval two(2L, prec);
  return (t * two - c * two).abs();
}

TauResult tau_eigenproduct(const CirculantSpec& spec, Precision opts) {
  EigenvalueList list = laplacian_eigenvalues(spec);
  if (list.zero_count() != 1)
    throw error("eigenvalue zero count disagrees with the validator for " +
                spec.label());
  return certified_round(
      [&](int prec) {
        Interval acc(1L, static_cast<mpfr_prec_t>(prec));
        for (std::size_t j = 1; j < list.size(); ++j) {
          Interval lam = list.enclosure(j, prec);
          if (!lam.is_strictly_positive()) {
            // widen so the loop escalates instead of certifying a bogus value
            return Interval::from_doubles(0.0, 1.0, prec);
          }
          acc *= lam;
        }
        return acc.mul_q(mpq_class(1, static_cast<unsigned long>(spec.m)));
      },
      TauMethod::EigenProduct, opts, spec.label());
}

TauResult tau_fixed_jump_factor(const CirculantSpec& spec, Precision opts) {
  if (std::gcd(spec.d, spec.n) != 1)
    throw spec_error(spec_error::kind::disconnected,
                     "fixed-jump section is disconnected: gcd(d, n) > 1");
  PolyFamily fam = build_family(spec);
  return certified_round(
      [&](int prec) {
        RootBundle bundle = isolate_roots(fam.members[0], prec);
        return fixed_factor_interval(spec, bundle, prec);
      },
      TauMethod::ChebyshevProduct, opts, "tau1 of " + spec.label());
}

CertifiedProduct tau_nonfixed_jump_factor(const CirculantSpec& spec,
                                          int precision_bits) {
  PolyFamily fam = build_family(spec);
  return {nonfixed_factor_interval(spec, fam, precision_bits), precision_bits};
}

TauResult tau_chebyshev(const CirculantSpec& spec, Precision opts) {
  PolyFamily fam = build_family(spec);
  return certified_round(
      [&](int prec) {
        RootBundle b0 = isolate_roots(fam.members[0], prec);
        Interval t1 = fixed_factor_interval(spec, b0, prec);
        Interval t2 = nonfixed_factor_interval(spec, fam, prec);
        return t1 * t2;
      },
      TauMethod::ChebyshevProduct, opts, spec.label());
}

TauResult tau_closed_form_s1(const CirculantSpec& spec, Precision opts) {
  if (spec.s_jumps != std::vector<std::uint64_t>{1})
    throw std::invalid_argument("closed form requires s = {1}");
  PolyFamily fam = build_family(spec);
  mpq_class scale(mpz_class(spec.n) << (spec.beta - 1), mpz_class(spec.beta));
  scale.canonicalize();
  TauResult r = certified_round(
      [&](int prec) {
        Interval acc(1L, static_cast<mpfr_prec_t>(prec));
        for (std::uint64_t u = 1; u < spec.beta; ++u) {
          // T_n(1 + 2 sum sin^2(pi u a / beta)) - cos(2 pi u / beta)
          Interval arg = fam.members[u].shift.enclosure(prec).mul_q(
                             mpq_class(1, 2)) +
                         1L;
          Interval t = chebyshev_T(spec.n, arg);
          acc *= t - angle_cos(residue_angle(u, spec.beta), prec);
        }
        return acc.mul_q(scale);
      },
      TauMethod::ClosedFormS1, opts, spec.label());
  return r;
}

TauResult tau_closed_form_s12(const CirculantSpec& spec, Precision opts) {
  if (spec.s_jumps != std::vector<std::uint64_t>{1, 2})
    throw std::invalid_argument("closed form requires s = {1, 2}");
  PolyFamily fam = build_family(spec);
  mpz_class fib;
  mpz_fib_ui(fib.get_mpz_t(), spec.n);
  mpq_class scale(mpz_class(spec.n) * fib * fib, mpz_class(spec.beta));
  scale.canonicalize();
  return certified_round(
      [&](int prec) {
        Interval acc(1L, static_cast<mpfr_prec_t>(prec));
        for (std::uint64_t u = 1; u < spec.beta; ++u) {
          // w_{1,2}(u) = (-1 +- sqrt(25 + 16 sum sin^2(pi u a / beta))) / 4
          Interval disc =
              (fam.members[u].shift.enclosure(prec) * 4L + 25L).sqrt();
          Interval two_cos = angle_cos(residue_angle(u, spec.beta), prec) * 2L;
          for (int sgn : {1, -1}) {
            Interval w = (disc * sgn + (-1L)).mul_q(mpq_class(1, 4));
            Interval f = (chebyshev_T(spec.n, w) * 2L - two_cos).abs();
            acc *= f;
          }
        }
        return acc.mul_q(scale);
      },
      TauMethod::ClosedFormS12, opts, spec.label());
}

IdentitySides reciprocal_pair_product_identity(const std::vector<CInterval>& zs,
                                               const Angle& omega_turns,
                                               unsigned long n) {
  if (n == 0) throw std::invalid_argument("identity requires n >= 1");
  mpfr_prec_t prec = 128;
  for (const auto& z : zs) prec = std::max(prec, z.precision());

  IdentitySides sides;
  // direct: prod over the n-th roots offset by omega/n
  CInterval direct(1L, prec);
  std::vector<CInterval> inv;
  inv.reserve(zs.size());
  for (const auto& z : zs) inv.push_back(z.recip());
  for (unsigned long t = 0; t < n; ++t) {
    Angle point_angle((mpq_class(static_cast<unsigned long>(t)) +
                       omega_turns.turns()) /
                      mpq_class(n));
    CInterval point = unit_root(point_angle, prec);
    for (size_t i = 0; i < zs.size(); ++i)
      direct = direct * (point - zs[i]) * (point - inv[i]);
  }
  sides.direct = direct;

  // closed form: (-e^{iw})^m prod (2 T_n(w_s) - 2 cos w)
  CInterval closed = (-unit_root(omega_turns, prec)).pow_ui(zs.size());
  CInterval two(2L, prec);
  CInterval cosw(angle_cos(omega_turns, prec), Interval(0L, prec));
  for (size_t i = 0; i < zs.size(); ++i) {
    CInterval w = (zs[i] + inv[i]) * CInterval(mpq_class(1, 2), prec);
    closed = closed * (chebyshev_T(n, w) * two - cosw * two);
  }
  sides.closed_form = closed;
  return sides;
}

}  // namespace circulant
