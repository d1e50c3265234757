#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "circulant/chebpoly.hpp"
#include "circulant/numeric/trig.hpp"
#include "circulant/spec.hpp"

namespace circulant {

enum class TauMethod {
  BruteForce,
  EigenProduct,
  ChebyshevProduct,
  ClosedFormS1,   // fast path for s = {1}
  ClosedFormS12,  // fast path for s = {1, 2}
};
const char* to_string(TauMethod m);

struct TauResult {
  mpz_class value;
  TauMethod method = TauMethod::BruteForce;
  int precision_bits = 0;   // 0 for exact integer routes
  bool certified = true;    // final enclosure width < 1/2 around the integer
};

// Escalation policy for certified rounding: working precision doubles from
// `start` until the enclosure width drops below 1/2, up to `max`.
struct Precision {
  int start = 128;
  int max = 1 << 15;
};

TauResult tau_bruteforce(const CirculantSpec& spec, std::uint64_t cap = 4096);
TauResult tau_eigenproduct(const CirculantSpec& spec, Precision opts = {});

// Spanning trees of the fixed-jump section C_n(s_1..s_k); requires
// gcd(d, n) == 1.
TauResult tau_fixed_jump_factor(const CirculantSpec& spec, Precision opts = {});

// The residue-class product over u = 1..beta-1 at a fixed working precision;
// exactly [1, 1] when beta == 1.
struct CertifiedProduct {
  Interval value;
  int precision_bits = 0;
};
CertifiedProduct tau_nonfixed_jump_factor(const CirculantSpec& spec,
                                          int precision_bits);

// Full count as the jointly rounded product of the two factors above.
TauResult tau_chebyshev(const CirculantSpec& spec, Precision opts = {});

TauResult tau_closed_form_s1(const CirculantSpec& spec, Precision opts = {});
TauResult tau_closed_form_s12(const CirculantSpec& spec, Precision opts = {});

// |2 T_n(w_j(u)) - 2 cos(2 pi u / beta)| for one root pair, as a certified
// enclosure; exact-angle arithmetic on unit-circle pairs.
Interval pair_factor_abs(const RootPair& pair, unsigned long n,
                         const Angle& omega_turns, mpfr_prec_t prec);

// Both sides of
//   prod_{t=0}^{n-1} H(e^{i(2 pi t + w)/n})
//     = (-e^{iw})^m prod_s (2 T_n(w_s) - 2 cos w),
// where H(z) = prod_s (z - z_s)(z - 1/z_s) and w_s = (z_s + 1/z_s)/2.
// Property-test oracle; not used by the production counting paths.
struct IdentitySides {
  CInterval direct;
  CInterval closed_form;
};
IdentitySides reciprocal_pair_product_identity(const std::vector<CInterval>& zs,
                                               const Angle& omega_turns,
                                               unsigned long n);

}  // namespace circulant
