#include "circulant/eigen.hpp"

namespace circulant {

std::size_t EigenvalueList::zero_count() const {
  std::size_t c = 0;
  for (const auto& v : values)
    if (v.exactly_zero()) ++c;
  return c;
}

EigenvalueList laplacian_eigenvalues(const CirculantSpec& spec) {
  EigenvalueList list;
  list.values.reserve(spec.m);
  for (std::uint64_t j = 0; j < spec.m; ++j) {
    CosineDeficitSum sum;
    for (auto s : spec.s_jumps)
      sum.add(2, Angle(mpq_class(mpz_class(j) * s, mpz_class(spec.m))));
    for (auto a : spec.alpha_jumps)
      sum.add(2, Angle(mpq_class(mpz_class(j) * a, mpz_class(spec.beta))));
    list.values.push_back(std::move(sum));
  }
  return list;
}

std::vector<Interval> eigenvalue_enclosures(const CirculantSpec& spec,
                                            int precision) {
  EigenvalueList list = laplacian_eigenvalues(spec);
  std::vector<Interval> out;
  out.reserve(list.size());
  const mpfr_prec_t prec = precision + 16;
  for (std::size_t j = 0; j < list.size(); ++j) {
    if (list.exactly_zero(j)) {
      out.emplace_back(0L, prec);
    } else {
      out.push_back(list.enclosure(j, prec));
    }
  }
  return out;
}

}  // namespace circulant
