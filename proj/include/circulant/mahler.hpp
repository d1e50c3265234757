#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circulant/chebpoly.hpp"
#include "circulant/spec.hpp"
#include "circulant/treecount.hpp"

namespace circulant {

// Mahler measure by the root-product definition: |lead| * prod_{|z|>1} |z|,
// certified from the root bundle.  Enclosure width below about
// 2^-target_bits relative.
Interval mahler_roots(const ShiftedPalindromic& P, int target_bits = 64,
                      int max_bits = 1 << 16);
Interval mahler_roots(const PalindromicLaurentPoly& P, int target_bits = 64,
                      int max_bits = 1 << 16);

// Mahler measure as the geometric mean of |P| on the unit circle, by a
// shifted-grid periodic trapezoid rule with Richardson-style doubling.  The
// grid never touches a unit-circle root.  Independent numerical cross-check
// of the root route; the returned interval is estimate +- observed error,
// not a certified enclosure.
struct QuadratureResult {
  Interval estimate;
  bool converged = false;
  unsigned long points = 0;
  double last_delta = 0.0;
};
QuadratureResult mahler_integral(const ShiftedPalindromic& P,
                                 unsigned long min_points = 64,
                                 double tol = 1e-11,
                                 unsigned long max_points = 1UL << 22);
QuadratureResult mahler_integral(const PalindromicLaurentPoly& P,
                                 unsigned long min_points = 64,
                                 double tol = 1e-11,
                                 unsigned long max_points = 1UL << 22);

struct MahlerEntry {
  std::uint64_t u = 0;
  Interval measure;      // M(P_u)
  Interval log_measure;  // m(P_u)
};

struct MahlerReport {
  std::vector<MahlerEntry> per_u;
  Interval growth_constant;     // prod_u M(P_u)
  Interval thermodynamic;       // (1/beta) sum_u m(P_u)
  mpq_class prefactor;          // delta^2 d^2 / (beta q); growth is prefactor*n*A^n
  std::uint64_t q = 0;          // sum of squared fixed jumps
  double quadrature_gap = 0.0;  // max_u |roots - quadrature| (midpoints)
  bool quadrature_converged = true;
};

// Per-u measures, the growth constant A and the asymptotic prefactor.
MahlerReport asymptotic_constant(const CirculantSpec& spec,
                                 int target_bits = 64,
                                 bool with_quadrature = true);

// (1/beta) sum_u m(P_u): the limit of log tau / (beta n).
Interval thermodynamic_limit(const CirculantSpec& spec, int target_bits = 64);

struct ConvergenceRow {
  std::uint64_t n = 0;
  bool applicable = false;
  std::string reason;
  mpz_class tau;
  Interval ratio;  // tau * beta * q / (n * delta^2 * d^2 * A^n)
};

// Empirical approach of the exact counts to the predicted growth.  Rows
// whose n fails validation are reported as skipped with the reason.
std::vector<ConvergenceRow> convergence_report(
    const CirculantSpec& spec, const std::vector<std::uint64_t>& n_list,
    int target_bits = 96);

}  // namespace circulant
