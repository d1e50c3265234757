#pragma once

#include <functional>
#include <vector>

#include "circulant/numeric/complex_interval.hpp"

namespace circulant {

// Coefficient oracle: enclosures of the low-order coefficients (ascending,
// constant first) of a monic polynomial, re-evaluable at any precision.
using CoeffOracle = std::function<std::vector<CInterval>(mpfr_prec_t)>;

// Isolates all roots of a monic polynomial with simple roots.  Runs
// simultaneous (Weierstrass/Durand-Kerner) iteration on midpoint values and
// certifies the result with interval Weierstrass discs: the returned
// rectangles are pairwise disjoint, each contains exactly one root, and each
// has radius at most 2^-target_bits.  Precision doubles from `start_bits`
// until certification succeeds; throws precision_error past `max_bits`
// (multiple roots or an inconsistent oracle).
std::vector<CInterval> isolate_simple_roots(const CoeffOracle& coeffs_at,
                                            int degree, int target_bits,
                                            int start_bits = 128,
                                            int max_bits = 1 << 16);

}  // namespace circulant
