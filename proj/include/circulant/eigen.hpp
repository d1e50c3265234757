#pragma once

#include <cstdint>
#include <vector>

#include "circulant/numeric/trig.hpp"
#include "circulant/spec.hpp"

namespace circulant {

// Laplacian spectrum of a circulant graph, kept as exact cosine descriptors:
// lambda_j = sum_i 2(1 - cos(2 pi j s_i / m)) + sum_r 2(1 - cos(2 pi j a_r / beta)).
// Descriptors can be re-evaluated at any precision and decide "exactly zero"
// by rational arithmetic alone.
struct EigenvalueList {
  std::vector<CosineDeficitSum> values;  // index j = 0 .. m-1

  std::size_t size() const { return values.size(); }
  bool exactly_zero(std::size_t j) const { return values[j].exactly_zero(); }
  Interval enclosure(std::size_t j, mpfr_prec_t prec) const {
    return values[j].enclosure(prec);
  }
  std::size_t zero_count() const;
};

EigenvalueList laplacian_eigenvalues(const CirculantSpec& spec);

// Enclosures of the full spectrum with widths at most 2^-(precision/2).
std::vector<Interval> eigenvalue_enclosures(const CirculantSpec& spec,
                                            int precision);

}  // namespace circulant
