#include "circulant/arith.hpp"

#include <array>

#include "circulant/errors.hpp"

namespace circulant {

ParityProfile parity_profile(const CirculantSpec& spec) {
  ParityProfile prof;
  for (auto s : spec.s_jumps)
    if (s % 2 == 1) ++prof.p_odd_s;
  for (auto a : spec.alpha_jumps)
    if (a % 2 == 1) ++prof.q_odd_alpha;
  if (prof.p_odd_s > 0) prof.r = squarefree_part(prof.p_odd_s);
  if (prof.p_odd_s + prof.q_odd_alpha > 0)
    prof.s_sf = squarefree_part(prof.p_odd_s + prof.q_odd_alpha);
  return prof;
}

std::uint64_t squarefree_part(std::uint64_t m) {
  if (m == 0)
    throw undefined_squarefree_error("square-free part of 0 is undefined");
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out * m;  // leftover m is prime (or 1)
}

const char* to_string(ParityCase c) {
  switch (c) {
    case ParityCase::OddOdd: return "n odd, beta odd";
    case ParityCase::EvenN: return "n even";
    case ParityCase::OddNEvenBeta: return "n odd, beta even";
  }
  return "?";
}

bool exact_sqrt(const mpz_class& v, mpz_class& root) {
  if (v < 0) return false;
  mpz_class r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  if (rem != 0) return false;
  root = r;
  return true;
}

Decomposition decompose_tau(const CirculantSpec& spec, const TauResult& tau) {
  ParityProfile prof = parity_profile(spec);
  Decomposition dec;
  const bool n_odd = spec.n % 2 == 1;
  const bool beta_odd = spec.beta % 2 == 1;
  if (n_odd && beta_odd) {
    dec.case_tag = ParityCase::OddOdd;
    dec.predicted_c = spec.beta;
  } else if (!n_odd) {
    dec.case_tag = ParityCase::EvenN;
    if (!prof.r)
      throw undefined_squarefree_error(
          "no odd fixed jump: the even-n coefficient is undefined for " +
          spec.label());
    dec.predicted_c = spec.beta * *prof.r;
  } else {
    dec.case_tag = ParityCase::OddNEvenBeta;
    if (!prof.s_sf)
      throw undefined_squarefree_error(
          "no odd jump at all: the odd-n coefficient is undefined for " +
          spec.label());
    dec.predicted_c = spec.beta * *prof.s_sf;
  }

  mpz_class by_n = tau.value;
  if (by_n % spec.n != 0)
    throw not_perfect_square_error("tau not divisible by n for " + spec.label());
  by_n /= spec.n;

  // Try the predicted coefficient first, then absorb square factors g^2 of
  // it (largest g first would under-report; smallest keeps c maximal).
  for (std::uint64_t g = 1; g * g <= dec.predicted_c; ++g) {
    if (dec.predicted_c % (g * g)) continue;
    std::uint64_t c = dec.predicted_c / (g * g);
    if (by_n % c != 0) continue;
    mpz_class square = by_n / c;
    mpz_class root;
    if (exact_sqrt(square, root)) {
      dec.coefficient = c;
      dec.a_n = root;
      dec.absorbed_square = g;
      dec.matches_prediction = (g == 1);
      return dec;
    }
  }
  throw not_perfect_square_error(
      "no square decomposition with the parity coefficient for " +
      spec.label() + " (tau = " + tau.value.get_str() + ")");
}

RecurrenceReport check_linear_recurrence(const std::vector<mpz_class>& values,
                                         const std::array<long, 3>& coeffs,
                                         const std::array<long, 3>& seeds) {
  RecurrenceReport report;
  if (values.size() < 3) return report;
  report.seeds_match = values[0] == seeds[0] && values[1] == seeds[1] &&
                       values[2] == seeds[2];
  report.recurrence_holds = true;
  for (size_t i = 3; i < values.size(); ++i) {
    mpz_class expect = coeffs[0] * values[i - 1] + coeffs[1] * values[i - 2] +
                       coeffs[2] * values[i - 3];
    if (values[i] != expect) {
      report.recurrence_holds = false;
      report.first_violation = static_cast<std::ptrdiff_t>(i);
      break;
    }
  }
  return report;
}

}  // namespace circulant
