#include "circulant/laplacian.hpp"

#include <utility>

#include "circulant/errors.hpp"

namespace circulant {

IntegerMatrix circulant_laplacian(std::uint64_t m,
                                  const std::vector<std::uint64_t>& jumps) {
  std::vector<mpz_class> first_row(m, mpz_class(0));
  for (auto j : jumps) {
    std::uint64_t off = j % m;
    if (off == 0) continue;  // loop: no effect on the Laplacian
    first_row[off] -= 1;
    first_row[m - off] -= 1;
    first_row[0] += 2;
  }
  IntegerMatrix mat;
  mat.order = m;
  mat.entries.resize(m * m);
  for (std::uint64_t r = 0; r < m; ++r)
    for (std::uint64_t c = 0; c < m; ++c)
      mat.at(r, c) = first_row[(c + m - r) % m];
  return mat;
}

IntegerMatrix build_laplacian(const CirculantSpec& spec) {
  std::vector<std::uint64_t> jumps = spec.s_jumps;
  for (auto a : spec.alpha_jumps) jumps.push_back(a * spec.n);
  return circulant_laplacian(spec.m, jumps);
}

mpz_class bareiss_determinant(IntegerMatrix mat) {
  const std::size_t n = mat.order;
  if (n == 0) return 1;
  mpz_class prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (mat.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && mat.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(mat.at(k, c), mat.at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = mat.at(k, k) * mat.at(i, j) - mat.at(i, k) * mat.at(k, j);
        mpz_divexact(mat.at(i, j).get_mpz_t(), t.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      mat.at(i, k) = 0;
    }
    prev_pivot = mat.at(k, k);
  }
  return sign > 0 ? mat.at(n - 1, n - 1) : mpz_class(-mat.at(n - 1, n - 1));
}

namespace {

mpz_class tree_count_from_laplacian(const IntegerMatrix& lap) {
  const std::size_t m = lap.order;
  if (m <= 1) return 1;
  IntegerMatrix minor;
  minor.order = m - 1;
  minor.entries.resize((m - 1) * (m - 1));
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) minor.at(i - 1, j - 1) = lap.at(i, j);
  return bareiss_determinant(std::move(minor));
}

}  // namespace

mpz_class spanning_tree_count_bruteforce(const CirculantSpec& spec,
                                         std::uint64_t cap) {
  if (spec.m > cap)
    throw too_large_error("vertex count " + std::to_string(spec.m) +
                          " exceeds the brute-force cap " + std::to_string(cap));
  return tree_count_from_laplacian(build_laplacian(spec));
}

mpz_class spanning_tree_count_of_jumps(std::uint64_t m,
                                       const std::vector<std::uint64_t>& jumps) {
  return tree_count_from_laplacian(circulant_laplacian(m, jumps));
}

}  // namespace circulant
