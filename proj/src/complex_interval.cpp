#include "circulant/numeric/complex_interval.hpp"

namespace circulant {

CInterval CInterval::pow_ui(unsigned long e) const {
  CInterval acc(1L, precision());
  CInterval base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1UL;
    if (e > 0) base = base.square();
  }
  return acc;
}

}  // namespace circulant
