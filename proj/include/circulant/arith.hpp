#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "circulant/spec.hpp"
#include "circulant/treecount.hpp"

namespace circulant {

// Parity counts of the jump lists and the square-free parts they induce.
// r is undefined when no fixed jump is odd; s_sf when no jump at all is odd.
struct ParityProfile {
  unsigned p_odd_s = 0;      // odd fixed jumps
  unsigned q_odd_alpha = 0;  // odd scaled jumps
  std::optional<std::uint64_t> r;     // square-free part of p_odd_s
  std::optional<std::uint64_t> s_sf;  // square-free part of p_odd_s + q_odd_alpha
};

ParityProfile parity_profile(const CirculantSpec& spec);

// The unique square-free q with m = q * r^2.  Throws for m == 0.
std::uint64_t squarefree_part(std::uint64_t m);

enum class ParityCase { OddOdd, EvenN, OddNEvenBeta };
const char* to_string(ParityCase c);

// tau == coefficient * n * a_n^2 exactly.  `predicted_c` is the coefficient
// selected by the parity case (beta, beta*r, or beta*s_sf);
// `matches_prediction` records whether that exact coefficient worked.  When
// it does not, the decomposition absorbs a square factor g^2 of the
// predicted coefficient instead (coefficient == predicted_c / g^2) and the
// mismatch is flagged rather than silently corrected.
struct Decomposition {
  ParityCase case_tag = ParityCase::OddOdd;
  std::uint64_t coefficient = 1;
  mpz_class a_n;
  std::uint64_t predicted_c = 1;
  bool matches_prediction = true;
  std::uint64_t absorbed_square = 1;  // g with coefficient = predicted_c / g^2
};

Decomposition decompose_tau(const CirculantSpec& spec, const TauResult& tau);

// Integer square root when exact.
bool exact_sqrt(const mpz_class& v, mpz_class& root);

// Order-3 linear recurrence check: values[i] = c0*values[i-1] +
// c1*values[i-2] + c2*values[i-3], with prescribed seeds.
struct RecurrenceReport {
  bool seeds_match = false;
  bool recurrence_holds = false;
  std::ptrdiff_t first_violation = -1;  // index into values, -1 if none
};
RecurrenceReport check_linear_recurrence(const std::vector<mpz_class>& values,
                                         const std::array<long, 3>& coeffs,
                                         const std::array<long, 3>& seeds);

}  // namespace circulant
