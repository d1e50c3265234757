#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "circulant/numeric/complex_interval.hpp"
#include "circulant/numeric/intpoly.hpp"
#include "circulant/numeric/trig.hpp"
#include "circulant/spec.hpp"

namespace circulant {

// Laurent polynomial invariant under z -> 1/z, stored as the coefficients
// a_0..a_s with a_j multiplying z^j + z^-j for j >= 1.  The representation
// cannot express an asymmetric polynomial.
struct PalindromicLaurentPoly {
  std::vector<mpq_class> coeffs;  // size s+1; trimmed so coeffs.back() != 0

  unsigned half_degree() const {
    return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size()) - 1;
  }
  bool is_constant() const { return half_degree() == 0; }
  void trim();

  // P(e^{2 pi i t}) = a_0 + sum_j 2 a_j cos(2 pi j t); real on the circle.
  Interval eval_on_circle(const Angle& t, mpfr_prec_t prec) const;
  CInterval eval(const CInterval& z) const;
  mpq_class eval_q(const mpq_class& z) const;  // z != 0

  // Ordinary-polynomial form z^s P(z), ascending coefficients, degree 2s.
  std::vector<mpq_class> ordinary_form() const;
  std::string str() const;
};

// Family member P_u = base + shift, where the shift is the nonnegative
// constant 4 sum_m sin^2(pi u alpha_m / beta) kept as an exact descriptor.
struct ShiftedPalindromic {
  PalindromicLaurentPoly base;
  CosineDeficitSum shift;
  std::uint64_t u = 0;

  bool shift_is_zero() const { return shift.exactly_zero(); }
  Interval eval_on_circle(const Angle& t, mpfr_prec_t prec) const;
};

// The polynomials attached to a spec: the fixed-jump symbol P, the scaled
// jump symbol p, the full Laplacian symbol L (at this n), and the members
// P_u for u = 0..beta-1.
struct PolyFamily {
  PalindromicLaurentPoly P;
  PalindromicLaurentPoly p_alpha;
  PalindromicLaurentPoly L;
  std::vector<ShiftedPalindromic> members;
};

PolyFamily build_family(const CirculantSpec& spec);

// Q(w) with Q(cos t) = P(e^{it}): coefficients of the degree-s ordinary
// polynomial a_0 + 2 a_1 T_1 + ... + 2 a_s T_s expanded in the monomial
// basis.  Throws constant_poly_error for constant input.
struct ChebyshevTransform {
  std::vector<mpq_class> coeffs;  // ascending, degree = half degree of source

  unsigned degree() const {
    return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size()) - 1;
  }
  Interval eval(const Interval& w) const;
  CInterval eval(const CInterval& w) const;
  mpq_class eval_q(const mpq_class& w) const;
};

ChebyshevTransform chebyshev_transform(const PalindromicLaurentPoly& P);

// One reciprocal pair of roots of z^s P_u(z) together with the w-image
// w = (z + 1/z)/2.  Unit-circle roots are exact angles; everything else is a
// certified rectangle whose radius is below the requested tolerance.
struct RootPair {
  CInterval z;      // representative, |z| >= 1
  CInterval z_inv;
  CInterval w;
  int multiplicity = 1;
  bool on_unit_circle = false;
  Angle circle_angle;  // set when on_unit_circle: z = e^{2 pi i angle}

  bool w_is_one() const {
    return on_unit_circle && circle_angle.is_zero();
  }
};

struct RootBundle {
  std::vector<RootPair> pairs;  // sum of multiplicities == s_k
  unsigned degree = 0;          // s_k
  int precision_bits = 0;       // certified enclosure radius <= 2^-precision_bits
  bool has_off_circle = false;
  Interval off_circle_margin;   // certified lower bound of min | |z|-1 |, off-circle roots
};

// Isolates all 2 s_k roots of z^{s_k} P_u(z), paired (z, 1/z), with exact
// handling of unit-circle roots when the shift vanishes (rational
// coefficients).  Deterministic order: |z| descending, then argument
// ascending.  Throws precision_error when isolation cannot be certified.
RootBundle isolate_roots(const ShiftedPalindromic& poly, int target_bits,
                         int max_bits = 1 << 16);
RootBundle isolate_roots(const PalindromicLaurentPoly& poly, int target_bits,
                         int max_bits = 1 << 16);

// Certified lower bound of min over roots of | |z| - 1 | for the member
// polynomial at 0 < u < beta of a spec with gcd(alpha..., beta) == 1.
// Throws circle_margin_error if any enclosure touches the unit circle.
struct MarginReport {
  std::uint64_t u = 0;
  Interval margin;
};
MarginReport unit_circle_margin(const RootBundle& bundle,
                                const CirculantSpec& spec, std::uint64_t u);

}  // namespace circulant
