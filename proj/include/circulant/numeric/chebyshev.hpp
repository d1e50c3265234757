#pragma once

#include <gmpxx.h>

#include "circulant/numeric/complex_interval.hpp"
#include "circulant/numeric/interval.hpp"

namespace circulant {

// Chebyshev polynomial of the first kind, T_n.  Exact over integers and
// rationals; certified enclosures over real and complex intervals.  All
// variants use binary powering of the recurrence matrix [[2w, -1], [1, 0]],
// so large n costs O(log n) multiplications.
mpz_class chebyshev_T(unsigned long n, const mpz_class& w);
mpq_class chebyshev_T(unsigned long n, const mpq_class& w);
Interval chebyshev_T(unsigned long n, const Interval& w);
CInterval chebyshev_T(unsigned long n, const CInterval& w);

}  // namespace circulant
