#include "circulant/spec.hpp"

#include <numeric>
#include <sstream>

#include "circulant/errors.hpp"

namespace circulant {

std::uint64_t CirculantSpec::jump_square_sum() const {
  std::uint64_t q = 0;
  for (auto s : s_jumps) q += s * s;
  return q;
}

std::string CirculantSpec::label() const {
  std::ostringstream os;
  os << "C_{" << beta << "n}(";
  for (size_t i = 0; i < s_jumps.size(); ++i)
    os << (i ? "," : "") << s_jumps[i];
  if (!alpha_jumps.empty()) {
    os << "|";
    for (size_t i = 0; i < alpha_jumps.size(); ++i)
      os << (i ? "," : "") << alpha_jumps[i] << "n";
  }
  os << ") n=" << n;
  return os.str();
}

CirculantSpec validate_spec(std::uint64_t beta,
                            const std::vector<std::uint64_t>& s_jumps,
                            const std::vector<std::uint64_t>& alpha_jumps,
                            std::uint64_t n) {
  if (beta == 0 || n == 0)
    throw spec_error(spec_error::kind::jump_out_of_range,
                     "beta and n must be positive");
  if (beta > (std::uint64_t{1} << 32) / n)
    throw spec_error(spec_error::kind::jump_out_of_range,
                     "vertex count beta*n exceeds 2^32");
  if (s_jumps.empty())
    throw spec_error(spec_error::kind::empty_jumps,
                     "at least one fixed jump is required");

  CirculantSpec spec;
  spec.beta = beta;
  spec.s_jumps = s_jumps;
  spec.alpha_jumps = alpha_jumps;
  spec.n = n;
  spec.m = beta * n;
  spec.k = s_jumps.size();
  spec.ell = alpha_jumps.size();

  std::uint64_t prev = 0;
  for (auto s : s_jumps) {
    if (s == 0 || s <= prev)
      throw spec_error(spec_error::kind::jump_out_of_range,
                       "fixed jumps must be strictly increasing and positive");
    prev = s;
  }
  if (s_jumps.back() > spec.m / 2)
    throw spec_error(spec_error::kind::jump_out_of_range,
                     "largest fixed jump exceeds floor(beta*n/2)");
  prev = 0;
  for (auto a : alpha_jumps) {
    if (a == 0 || a <= prev)
      throw spec_error(spec_error::kind::jump_out_of_range,
                       "scaled jumps must be strictly increasing and positive");
    prev = a;
  }
  if (!alpha_jumps.empty() && alpha_jumps.back() > beta / 2)
    throw spec_error(spec_error::kind::jump_out_of_range,
                     "largest scaled jump exceeds floor(beta/2)");

  spec.d = 0;
  for (auto s : s_jumps) spec.d = std::gcd(spec.d, s);
  spec.delta = beta;
  for (auto a : alpha_jumps) spec.delta = std::gcd(spec.delta, a);

  if (std::gcd(spec.d, n * spec.delta) != 1)
    throw spec_error(spec_error::kind::disconnected,
                     "graph is disconnected: gcd(d, n*delta) > 1 for " +
                         spec.label());
  return spec;
}

CirculantSpec reduce_delta(const CirculantSpec& spec) {
  if (spec.delta == 1) return spec;
  std::vector<std::uint64_t> alpha;
  alpha.reserve(spec.alpha_jumps.size());
  for (auto a : spec.alpha_jumps) alpha.push_back(a / spec.delta);
  return validate_spec(spec.beta / spec.delta, spec.s_jumps, alpha,
                       spec.n * spec.delta);
}

}  // namespace circulant
