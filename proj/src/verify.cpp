#include "circulant/verify.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "circulant/arith.hpp"
#include "circulant/chebpoly.hpp"
#include "circulant/errors.hpp"
#include "circulant/laplacian.hpp"
#include "circulant/mahler.hpp"
#include "circulant/numeric/chebyshev.hpp"
#include "circulant/numeric/rootcert.hpp"
#include "circulant/treecount.hpp"

namespace circulant {

namespace {

std::string family_key(std::uint64_t beta, const std::vector<std::uint64_t>& s,
                       const std::vector<std::uint64_t>& alpha) {
  std::ostringstream os;
  os << beta << "|";
  for (auto v : s) os << v << ",";
  os << "|";
  for (auto v : alpha) os << v << ",";
  return os.str();
}

mpz_class fibonacci(unsigned long n) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

// tau == c * n * a^2 for some integer a?
bool square_form_holds(const mpz_class& tau, std::uint64_t c, std::uint64_t n,
                       mpz_class* a_out = nullptr) {
  mpz_class cn = mpz_class(c) * n;
  if (tau % cn != 0) return false;
  mpz_class a;
  if (!exact_sqrt(tau / cn, a)) return false;
  if (a_out) *a_out = a;
  return true;
}

}  // namespace

Grid builtin_grid() {
  Grid grid;
  const std::vector<std::uint64_t> betas = {1, 2, 3, 4, 6};
  const std::vector<std::vector<std::uint64_t>> s_sets = {
      {1}, {1, 2}, {1, 2, 3}, {2, 3}, {1, 3}};
  for (auto beta : betas) {
    const std::uint64_t half = beta / 2;
    for (const auto& s : s_sets) {
      for (std::uint64_t mask = 0; mask < (1ULL << half); ++mask) {
        std::vector<std::uint64_t> alpha;
        for (std::uint64_t bit = 0; bit < half; ++bit)
          if (mask & (1ULL << bit)) alpha.push_back(bit + 1);
        for (std::uint64_t n = 2; n <= 8; ++n) {
          if (beta * n > 64) continue;
          try {
            grid.specs.push_back(validate_spec(beta, s, alpha, n));
          } catch (const spec_error& e) {
            CirculantSpec shell;
            shell.beta = beta;
            shell.s_jumps = s;
            shell.alpha_jumps = alpha;
            shell.n = n;
            grid.skipped.emplace_back(shell.label(), e.what());
          }
        }
      }
    }
  }
  return grid;
}

SuiteResult suite_oracle_equivalence(const Grid& grid) {
  SuiteResult suite;
  suite.name = "oracle-equivalence";
  for (const auto& spec : grid.specs) {
    try {
      TauResult brute = tau_bruteforce(spec);
      TauResult eigen = tau_eigenproduct(spec);
      TauResult cheb = tau_chebyshev(spec);
      if (brute.value == eigen.value && eigen.value == cheb.value) {
        ++suite.passed;
      } else {
        suite.fail(spec.label() + ": brute=" + brute.value.get_str() +
                   " eigen=" + eigen.value.get_str() +
                   " chebyshev=" + cheb.value.get_str());
      }
    } catch (const error& e) {
      suite.fail(spec.label() + ": " + e.what());
    }
  }
  return suite;
}

SuiteResult suite_decomposition(const Grid& grid) {
  SuiteResult suite;
  suite.name = "square-decomposition";
  for (const auto& spec : grid.specs) {
    try {
      TauResult tau = tau_chebyshev(spec);
      if (tau.value % (mpz_class(spec.beta) * spec.n) != 0) {
        suite.fail(spec.label() + ": tau not a multiple of beta*n");
        continue;
      }
      Decomposition dec = decompose_tau(spec, tau);
      mpz_class recon = mpz_class(dec.coefficient) * spec.n * dec.a_n * dec.a_n;
      if (recon != tau.value) {
        suite.fail(spec.label() + ": reconstruction mismatch");
        continue;
      }
      if (!dec.matches_prediction) ++suite.flagged;
      ++suite.passed;
    } catch (const error& e) {
      suite.fail(spec.label() + ": " + e.what());
    }
  }
  suite.extra = suite.flagged;
  suite.extra_label = "absorbed-square cases";
  return suite;
}

SuiteResult suite_margins(const Grid& grid) {
  SuiteResult suite;
  suite.name = "circle-margins";
  suite.extra = -1;
  suite.extra_label = "min margin";
  std::set<std::string> seen;
  for (const auto& spec : grid.specs) {
    CirculantSpec reduced = reduce_delta(spec);
    std::string key =
        family_key(reduced.beta, reduced.s_jumps, reduced.alpha_jumps);
    if (!seen.insert(key).second) continue;
    if (reduced.beta == 1) {
      ++suite.skipped;
      continue;
    }
    try {
      PolyFamily fam = build_family(reduced);
      for (std::uint64_t u = 1; u < reduced.beta; ++u) {
        RootBundle bundle = isolate_roots(fam.members[u], 64);
        MarginReport rep = unit_circle_margin(bundle, reduced, u);
        double lo = rep.margin.mid_double() - rep.margin.width_upper();
        if (suite.extra < 0 || lo < suite.extra) suite.extra = lo;
      }
      ++suite.passed;
    } catch (const error& e) {
      suite.fail(reduced.label() + ": " + e.what());
    }
  }
  return suite;
}

SuiteResult suite_measure_agreement(const Grid& grid, double tolerance) {
  SuiteResult suite;
  suite.name = "measure-agreement";
  suite.extra_label = "max gap";
  std::set<std::string> seen;
  for (const auto& spec : grid.specs) {
    std::string key = family_key(spec.beta, spec.s_jumps, spec.alpha_jumps);
    if (!seen.insert(key).second) continue;
    try {
      PolyFamily fam = build_family(spec);
      for (std::uint64_t u = 0; u < spec.beta; ++u) {
        Interval roots = mahler_roots(fam.members[u], 64);
        QuadratureResult quad = mahler_integral(fam.members[u], 64, 1e-11);
        double gap = midpoint_distance(roots, quad.estimate);
        suite.extra = std::max(suite.extra, gap);
        if (!quad.converged) {
          suite.fail(spec.label() + " u=" + std::to_string(u) +
                     ": quadrature did not converge");
        } else if (gap >= tolerance) {
          suite.fail(spec.label() + " u=" + std::to_string(u) +
                     ": |roots - quadrature| = " + std::to_string(gap));
        } else {
          ++suite.passed;
        }
      }
    } catch (const error& e) {
      suite.fail(spec.label() + ": " + e.what());
    }
  }
  return suite;
}

SuiteResult suite_product_identity(int instances, std::uint64_t seed) {
  SuiteResult suite;
  suite.name = "pair-product-identity";
  std::mt19937_64 rng(seed);
  const mpfr_prec_t prec = 320;
  const double rel_tol = std::ldexp(1.0, -64);

  auto sides_close = [&](const IdentitySides& s) {
    auto part_close = [&](const Interval& a, const Interval& b) {
      if (!a.intersects(b)) return false;
      Interval hull = Interval::hull(a, b);
      double scale = std::max(1.0, std::fabs(b.mid_double()));
      return hull.width_upper() / scale < rel_tol;
    };
    return part_close(s.direct.re, s.closed_form.re) &&
           part_close(s.direct.im, s.closed_form.im);
  };

  for (int i = 0; i < instances; ++i) {
    unsigned m = 1 + static_cast<unsigned>(rng() % 3);
    unsigned long n = 1 + rng() % 12;
    std::uint64_t beta = 1 + rng() % 6;
    std::uint64_t u = rng() % beta;
    std::vector<CInterval> zs;
    for (unsigned r = 0; r < m; ++r) {
      long re_num = 0, im_num = 0;
      unsigned long den = 1 + rng() % 4;
      while (re_num == 0 && im_num == 0) {
        re_num = static_cast<long>(rng() % 13) - 6;
        im_num = (rng() % 10 < 2) ? 0 : static_cast<long>(rng() % 13) - 6;
      }
      if (i == 0) { re_num = 1; im_num = 0; den = 1; }  // root on the grid
      zs.emplace_back(Interval(mpq_class(re_num, den), prec),
                      Interval(mpq_class(im_num, den), prec));
    }
    Angle omega(mpq_class(static_cast<unsigned long>(u),
                          static_cast<unsigned long>(beta)));
    IdentitySides sides = reciprocal_pair_product_identity(zs, omega, n);
    if (sides_close(sides)) {
      ++suite.passed;
    } else {
      suite.fail("instance " + std::to_string(i) + ": sides differ (m=" +
                 std::to_string(m) + ", n=" + std::to_string(n) + ")");
    }
  }
  return suite;
}

namespace {

// --- the seven worked families ---

void check_equal(SuiteResult& suite, const std::string& what,
                 const mpz_class& got, const mpz_class& want) {
  if (got == want) {
    ++suite.passed;
  } else {
    suite.fail(what + ": got " + got.get_str() + ", want " + want.get_str());
  }
}

void check(SuiteResult& suite, const std::string& what, bool ok) {
  if (ok) ++suite.passed;
  else suite.fail(what);
}

// Certified rounding of a product evaluated by `f` at doubling precision.
template <class F>
mpz_class round_to_integer(F&& f, const std::string& what) {
  for (int prec = 192; prec <= (1 << 15); prec *= 2) {
    Interval v = f(prec);
    mpz_class out;
    if (v.width_upper() < 0.5 && v.unique_integer(out)) return out;
  }
  throw precision_error("could not round " + what);
}

// C_{2n}(1, n): tau(n) = n (T_n(3) + 1)
void example_moebius_double(SuiteResult& suite) {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    CirculantSpec spec = validate_spec(2, {1}, {1}, n);
    mpz_class want = mpz_class(n) * (chebyshev_T(n, mpz_class(3)) + 1);
    check_equal(suite, "C_{2n}(1,n) n=" + std::to_string(n),
                tau_chebyshev(spec).value, want);
    if (n <= 12)
      check_equal(suite, "C_{2n}(1,n) brute n=" + std::to_string(n),
                  tau_bruteforce(spec).value, want);
  }
}

// C_{2n}(1,2,n): tau(n) = 2 n F_n^2 |T_n(w1) + 1| |T_n(w2) + 1| with
// w_{1,2} = (-1 -+ sqrt41)/4 (the u = 1 factors carry cos(pi) = -1);
// decomposes with constant 2 for even n and 1 for odd n.
void example_s12_scaled(SuiteResult& suite) {
  for (std::uint64_t n = 2; n <= 10; ++n) {
    CirculantSpec spec = validate_spec(2, {1, 2}, {1}, n);
    mpz_class tau = tau_chebyshev(spec).value;
    mpz_class fib2 = fibonacci(n) * fibonacci(n);
    mpz_class formula = round_to_integer(
        [&](int prec) {
          Interval root41 = Interval(41L, static_cast<mpfr_prec_t>(prec)).sqrt();
          Interval acc(mpz_class(mpz_class(2 * n) * fib2), prec);
          for (int sgn : {-1, 1}) {
            Interval w = (root41 * sgn + (-1L)).mul_q(mpq_class(1, 4));
            acc *= (chebyshev_T(n, w) + Interval(1L, prec)).abs();
          }
          return acc;
        },
        "C_{2n}(1,2,n) closed form");
    check_equal(suite, "C_{2n}(1,2,n) formula n=" + std::to_string(n), tau,
                formula);
    std::uint64_t c = (n % 2 == 0) ? 2 : 1;
    check(suite, "C_{2n}(1,2,n) constant n=" + std::to_string(n),
          square_form_holds(tau, c, n));
  }
}

// C_{2n}(1,2,3,n): constants 6 (n odd) / 4 (n even); growth constant near
// 42.4038; closed form with the roots of 2w^3 + w^2 - w - 3.
void example_s123_scaled(SuiteResult& suite) {
  for (std::uint64_t n = 3; n <= 9; ++n) {
    CirculantSpec spec = validate_spec(2, {1, 2, 3}, {1}, n);
    mpz_class tau = tau_chebyshev(spec).value;
    std::uint64_t c = (n % 2 == 0) ? 4 : 6;
    check(suite, "C_{2n}(1,2,3,n) constant n=" + std::to_string(n),
          square_form_holds(tau, c, n));

    if (n <= 6) {
      // (8n/7) (T_n(t1) - 1)(T_n(t2) - 1) prod_p (T_n(w_p) + 1),
      // t_{1,2} = (-3 +- i sqrt7)/4, w_p roots of 2w^3 + w^2 - w - 3.
      mpz_class formula = round_to_integer(
          [&](int prec) {
            CInterval prod(1L, static_cast<mpfr_prec_t>(prec));
            Interval root7 = Interval(7L, static_cast<mpfr_prec_t>(prec)).sqrt();
            for (int sgn : {-1, 1}) {
              CInterval t(Interval(mpq_class(-3, 4), prec),
                          (root7 * sgn).mul_q(mpq_class(1, 4)));
              prod = prod * (chebyshev_T(n, t) - CInterval(1L, prec));
            }
            auto cubic = isolate_simple_roots(
                [](mpfr_prec_t p) {
                  return std::vector<CInterval>{
                      CInterval(mpq_class(-3, 2), p),
                      CInterval(mpq_class(-1, 2), p),
                      CInterval(mpq_class(1, 2), p)};
                },
                3, prec);
            for (const auto& w : cubic)
              prod = prod * (chebyshev_T(n, w) + CInterval(1L, prec));
            return prod.re.mul_q(mpq_class(8 * n, 7));
          },
          "C_{2n}(1,2,3,n) closed form");
      check_equal(suite, "C_{2n}(1,2,3,n) formula n=" + std::to_string(n), tau,
                  formula);
    }
  }
  MahlerReport report =
      asymptotic_constant(validate_spec(2, {1, 2, 3}, {1}, 5), 64, false);
  double A = report.growth_constant.mid_double();
  check(suite, "C_{2n}(1,2,3,n) growth constant ~ 42.4038",
        std::fabs(A - 42.4038) < 5e-4);
}

// C_{3n}(1,n): tau(n) = (n/3)(2 T_n(5/2) + 1)^2; tau = 3 n a(n)^2 with
// a(n) = 6a(n-1) - 6a(n-2) + a(n-3), a(1..3) = 2, 8, 37.
void example_triple_step(SuiteResult& suite) {
  std::vector<mpz_class> a_seq;
  for (std::uint64_t n = 1; n <= 12; ++n) {
    CirculantSpec spec = validate_spec(3, {1}, {1}, n);
    mpz_class tau = tau_chebyshev(spec).value;
    mpq_class t = chebyshev_T(n, mpq_class(5, 2));
    mpq_class formula = mpq_class(static_cast<unsigned long>(n), 3) *
                        (2 * t + 1) * (2 * t + 1);
    check(suite, "C_{3n}(1,n) formula n=" + std::to_string(n),
          formula.get_den() == 1 && formula.get_num() == tau);
    Decomposition dec = decompose_tau(spec, {tau, TauMethod::ChebyshevProduct});
    check(suite, "C_{3n}(1,n) coefficient n=" + std::to_string(n),
          dec.coefficient == 3 && dec.matches_prediction);
    a_seq.push_back(dec.a_n);
  }
  RecurrenceReport rec = check_linear_recurrence(a_seq, {6, -6, 1}, {2, 8, 37});
  check(suite, "C_{3n}(1,n) recurrence seeds", rec.seeds_match);
  check(suite, "C_{3n}(1,n) recurrence", rec.recurrence_holds);
}

// C_{3n}(1,2,n): tau(n) = (n/3) F_n^2 (2T_n(w1)+1)^2 (2T_n(w2)+1)^2 with
// w_{1,2} = (-1 +- sqrt37)/4; tau = 3 n a(n)^2.
void example_s12_triple(SuiteResult& suite) {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    CirculantSpec spec = validate_spec(3, {1, 2}, {1}, n);
    mpz_class tau = tau_chebyshev(spec).value;
    mpz_class fib2 = fibonacci(n) * fibonacci(n);
    mpz_class formula = round_to_integer(
        [&](int prec) {
          Interval root37 = Interval(37L, static_cast<mpfr_prec_t>(prec)).sqrt();
          Interval acc = Interval(mpz_class(fib2 * n), prec).mul_q(mpq_class(1, 3));
          for (int sgn : {-1, 1}) {
            Interval w = (root37 * sgn + (-1L)).mul_q(mpq_class(1, 4));
            Interval f = chebyshev_T(n, w) * 2L + 1L;
            acc *= f.square();
          }
          return acc;
        },
        "C_{3n}(1,2,n) closed form");
    check_equal(suite, "C_{3n}(1,2,n) formula n=" + std::to_string(n), tau,
                formula);
    check(suite, "C_{3n}(1,2,n) coefficient n=" + std::to_string(n),
          square_form_holds(tau, 3, n));
  }
}

// C_{6n}(1,n,3n): tau(n) = (n/3)(2T_n(5/2)+1)^2 (2T_n(7/2)-1)^2 (T_n(5)+1);
// constants 6 (n even) / 18 (n odd).
void example_six_step(SuiteResult& suite) {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    CirculantSpec spec = validate_spec(6, {1}, {1, 3}, n);
    mpz_class tau = tau_chebyshev(spec).value;
    mpq_class t52 = chebyshev_T(n, mpq_class(5, 2));
    mpq_class t72 = chebyshev_T(n, mpq_class(7, 2));
    mpz_class t5 = chebyshev_T(n, mpz_class(5));
    mpq_class formula = mpq_class(static_cast<unsigned long>(n), 3) *
                        (2 * t52 + 1) * (2 * t52 + 1) * (2 * t72 - 1) *
                        (2 * t72 - 1) * (t5 + 1);
    check(suite, "C_{6n}(1,n,3n) formula n=" + std::to_string(n),
          formula.get_den() == 1 && formula.get_num() == tau);
    std::uint64_t c = (n % 2 == 0) ? 6 : 18;
    check(suite, "C_{6n}(1,n,3n) constant n=" + std::to_string(n),
          square_form_holds(tau, c, n));
  }
}

// C_{12n}(1,3n,4n): tau(n) = (2n/3) T_n(2)^2 (2T_n(5/2)+1)^2 (T_n(3)+1)
// (4T_n(7/2)^2-3)^2 (2T_n(9/2)-1)^2; constants 3 (n even) / 6 (n odd) with
// a(n) even.
void example_twelve_step(SuiteResult& suite) {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    CirculantSpec spec = validate_spec(12, {1}, {3, 4}, n);
    mpz_class tau = tau_chebyshev(spec).value;
    mpz_class t2 = chebyshev_T(n, mpz_class(2));
    mpz_class t3 = chebyshev_T(n, mpz_class(3));
    mpq_class t52 = chebyshev_T(n, mpq_class(5, 2));
    mpq_class t72 = chebyshev_T(n, mpq_class(7, 2));
    mpq_class t92 = chebyshev_T(n, mpq_class(9, 2));
    mpq_class f52 = 2 * t52 + 1;
    mpq_class f72 = 4 * t72 * t72 - 3;
    mpq_class f92 = 2 * t92 - 1;
    mpq_class formula = mpq_class(2 * static_cast<unsigned long>(n), 3) * t2 *
                        t2 * f52 * f52 * (t3 + 1) * f72 * f72 * f92 * f92;
    check(suite, "C_{12n}(1,3n,4n) formula n=" + std::to_string(n),
          formula.get_den() == 1 && formula.get_num() == tau);
    std::uint64_t c = (n % 2 == 0) ? 3 : 6;
    mpz_class a;
    check(suite, "C_{12n}(1,3n,4n) constant n=" + std::to_string(n),
          square_form_holds(tau, c, n, &a) && a % 2 == 0);
  }
}

}  // namespace

SuiteResult suite_reference_examples() {
  SuiteResult suite;
  suite.name = "reference-examples";
  example_moebius_double(suite);
  example_s12_scaled(suite);
  example_s123_scaled(suite);
  example_triple_step(suite);
  example_s12_triple(suite);
  example_six_step(suite);
  example_twelve_step(suite);
  return suite;
}

std::vector<SuiteResult> run_verification(bool include_examples) {
  Grid grid = builtin_grid();
  std::vector<SuiteResult> out;
  out.push_back(suite_oracle_equivalence(grid));
  out.push_back(suite_decomposition(grid));
  out.push_back(suite_margins(grid));
  out.push_back(suite_measure_agreement(grid));
  out.push_back(suite_product_identity(200));
  if (include_examples) out.push_back(suite_reference_examples());
  return out;
}

}  // namespace circulant
