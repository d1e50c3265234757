#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace circulant {

// Parameters of the circulant graph C_{beta*n}(s_1..s_k, alpha_1*n..alpha_l*n).
// Instances are only created through validate_spec, so a CirculantSpec in
// hand is always connected and in range.
struct CirculantSpec {
  std::uint64_t beta = 1;
  std::vector<std::uint64_t> s_jumps;      // strictly increasing, nonempty
  std::vector<std::uint64_t> alpha_jumps;  // strictly increasing, may be empty
  std::uint64_t n = 1;

  // derived
  std::uint64_t d = 1;      // gcd of the fixed jumps
  std::uint64_t delta = 1;  // gcd(alpha..., beta); beta when no alpha jumps
  std::uint64_t m = 1;      // vertex count beta * n
  std::uint64_t k = 0;      // number of fixed jumps
  std::uint64_t ell = 0;    // number of scaled jumps

  // sum of squares of the fixed jumps
  std::uint64_t jump_square_sum() const;
  std::string label() const;  // e.g. "C_{2n}(1,2|1) n=5"
};

// Checks ranges and connectivity (gcd(d, n*delta) == 1) and fills the
// derived fields.  Throws spec_error otherwise.
CirculantSpec validate_spec(std::uint64_t beta,
                            const std::vector<std::uint64_t>& s_jumps,
                            const std::vector<std::uint64_t>& alpha_jumps,
                            std::uint64_t n);

// The isomorphic spec with gcd(alpha..., beta) == 1: beta' = beta/delta,
// alpha' = alpha/delta, n' = delta*n.  Identity when delta == 1 or ell == 0.
CirculantSpec reduce_delta(const CirculantSpec& spec);

}  // namespace circulant
