#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "circulant/spec.hpp"

namespace circulant {

// Dense square matrix of big integers, row-major.
struct IntegerMatrix {
  std::size_t order = 0;
  std::vector<mpz_class> entries;

  mpz_class& at(std::size_t i, std::size_t j) { return entries[i * order + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return entries[i * order + j];
  }
};

// Circulant matrix whose first row accumulates -1 at every offset +-j for
// each jump j (mod m); coincident offsets stack, so jump m/2 contributes -2
// (a double edge).  Diagonal is the vertex degree.
IntegerMatrix circulant_laplacian(std::uint64_t m,
                                  const std::vector<std::uint64_t>& jumps);

IntegerMatrix build_laplacian(const CirculantSpec& spec);

// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class bareiss_determinant(IntegerMatrix mat);

// Exact spanning-tree count: determinant of the Laplacian with row and
// column 0 removed.  Throws too_large_error when m exceeds the cap.
mpz_class spanning_tree_count_bruteforce(const CirculantSpec& spec,
                                         std::uint64_t cap = 4096);

// Same, for an arbitrary jump multiset on m vertices (offsets taken mod m;
// jumps congruent to 0 are loops and are ignored).  Test oracle for the
// fixed-jump section counts.
mpz_class spanning_tree_count_of_jumps(std::uint64_t m,
                                       const std::vector<std::uint64_t>& jumps);

}  // namespace circulant
