#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "circulant/eigen.hpp"
#include "circulant/errors.hpp"
#include "circulant/laplacian.hpp"
#include "circulant/spec.hpp"

using namespace circulant;

TEST_CASE("validation accepts and derives") {
  CirculantSpec s = validate_spec(2, {1}, {1}, 5);
  CHECK(s.d == 1);
  CHECK(s.delta == 1);
  CHECK(s.m == 10);

  CirculantSpec t = validate_spec(2, {1, 2, 3}, {1}, 4);
  CHECK(t.m == 8);
  CHECK(t.k == 3);
  CHECK(t.ell == 1);
}

TEST_CASE("validation rejects") {
  CHECK_THROWS_AS(validate_spec(1, {2, 4}, {}, 6), spec_error);  // gcd(2,6)=2
  CHECK_THROWS_AS(validate_spec(1, {}, {}, 5), spec_error);
  CHECK_THROWS_AS(validate_spec(1, {3}, {}, 4), spec_error);   // 3 > 2
  CHECK_THROWS_AS(validate_spec(2, {1}, {2}, 5), spec_error);  // 2 > 1
  CHECK_THROWS_AS(validate_spec(2, {2, 1}, {}, 5), spec_error);
  CHECK_THROWS_AS(validate_spec(0, {1}, {}, 5), spec_error);
}

TEST_CASE("delta reduction") {
  CirculantSpec s = validate_spec(4, {1}, {2}, 3);
  CHECK(s.delta == 2);
  CirculantSpec r = reduce_delta(s);
  CHECK(r.beta == 2);
  CHECK(r.alpha_jumps == std::vector<std::uint64_t>{1});
  CHECK(r.n == 6);
  CHECK(r.m == s.m);

  // no scaled jumps: delta = beta, reduction flattens to a fixed-jump spec
  CirculantSpec f = reduce_delta(validate_spec(3, {1}, {}, 4));
  CHECK(f.beta == 1);
  CHECK(f.m == 12);
}

TEST_CASE("laplacian first rows") {
  auto first_row = [](const IntegerMatrix& m) {
    std::vector<long> row;
    for (std::size_t j = 0; j < m.order; ++j) row.push_back(m.at(0, j).get_si());
    return row;
  };
  CHECK(first_row(build_laplacian(validate_spec(1, {1}, {}, 3))) ==
        std::vector<long>{2, -1, -1});
  CHECK(first_row(build_laplacian(validate_spec(1, {1, 2}, {}, 4))) ==
        std::vector<long>{4, -1, -2, -1});
  CHECK(first_row(build_laplacian(validate_spec(3, {1}, {1}, 1))) ==
        std::vector<long>{4, -2, -2});
}

TEST_CASE("laplacian is circulant with zero row sums") {
  CirculantSpec spec = validate_spec(2, {1, 2, 3}, {1}, 4);
  IntegerMatrix lap = build_laplacian(spec);
  for (std::size_t i = 0; i < lap.order; ++i) {
    mpz_class sum = 0;
    for (std::size_t j = 0; j < lap.order; ++j) sum += lap.at(i, j);
    CHECK(sum == 0);
  }
  for (std::size_t i = 1; i < lap.order; ++i)
    for (std::size_t j = 0; j < lap.order; ++j)
      CHECK(lap.at(i, j) == lap.at(0, (j + lap.order - i) % lap.order));
  CHECK(lap.at(0, 0) == 2 * (spec.k + spec.ell));
}

TEST_CASE("brute-force counts") {
  CHECK(spanning_tree_count_bruteforce(validate_spec(1, {1}, {}, 5)) == 5);
  CHECK(spanning_tree_count_bruteforce(validate_spec(1, {1, 2}, {}, 4)) == 36);
  CHECK(spanning_tree_count_bruteforce(validate_spec(3, {1}, {1}, 1)) == 12);
  CHECK_THROWS_AS(
      spanning_tree_count_bruteforce(validate_spec(1, {1}, {}, 50), 32),
      too_large_error);
}

TEST_CASE("bareiss determinant on the reduced laplacian") {
  IntegerMatrix m;
  m.order = 3;
  m.entries = {mpz_class(4),  mpz_class(-1), mpz_class(-2),
               mpz_class(-1), mpz_class(4),  mpz_class(-1),
               mpz_class(-2), mpz_class(-1), mpz_class(4)};
  CHECK(bareiss_determinant(m) == 36);

  // pivot-swap path: singular leading minor, regular matrix
  IntegerMatrix p;
  p.order = 2;
  p.entries = {mpz_class(0), mpz_class(1), mpz_class(1), mpz_class(0)};
  CHECK(bareiss_determinant(p) == -1);
}

TEST_CASE("count is a function of the jump multiset mod m") {
  mpz_class a = spanning_tree_count_bruteforce(validate_spec(2, {1}, {1}, 2));
  mpz_class b = spanning_tree_count_bruteforce(validate_spec(1, {1, 2}, {}, 4));
  CHECK(a == b);
}

TEST_CASE("eigenvalues of known graphs") {
  auto vals = [](const CirculantSpec& s) {
    std::vector<double> v;
    for (const auto& e : eigenvalue_enclosures(s, 64)) v.push_back(e.mid_double());
    return v;
  };
  auto v4 = vals(validate_spec(1, {1, 2}, {}, 4));
  REQUIRE(v4.size() == 4);
  CHECK(v4[0] == doctest::Approx(0));
  CHECK(v4[1] == doctest::Approx(6));
  CHECK(v4[2] == doctest::Approx(4));
  CHECK(v4[3] == doctest::Approx(6));

  auto v6 = vals(validate_spec(2, {1}, {1}, 3));
  std::vector<double> want = {0, 5, 3, 8, 3, 5};
  REQUIRE(v6.size() == 6);
  for (size_t i = 0; i < 6; ++i) CHECK(v6[i] == doctest::Approx(want[i]));
}

TEST_CASE("spectrum symmetry lambda_{m-j} = lambda_j as descriptors") {
  for (auto spec : {validate_spec(2, {1, 2, 3}, {1}, 4),
                    validate_spec(3, {1, 2}, {1}, 5),
                    validate_spec(6, {1}, {1, 3}, 3)}) {
    EigenvalueList list = laplacian_eigenvalues(spec);
    for (std::size_t j = 1; j < list.size(); ++j)
      CHECK(list.values[j] == list.values[list.size() - j]);
  }
}

TEST_CASE("eigenvalue enclosure widths meet the precision contract") {
  CirculantSpec spec = validate_spec(2, {1, 2}, {1}, 5);
  for (int precision : {64, 128, 256}) {
    for (const auto& e : eigenvalue_enclosures(spec, precision))
      CHECK(e.width_upper() <= std::ldexp(1.0, -precision / 2));
  }
}

TEST_CASE("validator verdict matches the exact zero-eigenvalue count") {
  // enumerate raw parameters, including ones the validator rejects
  for (std::uint64_t beta : {1, 2, 3, 4}) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      for (std::uint64_t s1 = 1; s1 <= beta * n / 2; ++s1) {
        for (std::uint64_t s2 = s1; s2 <= beta * n / 2; ++s2) {
          std::vector<std::uint64_t> s = {s1};
          if (s2 > s1) s.push_back(s2);
          for (std::uint64_t a1 = 0; a1 <= beta / 2; ++a1) {
            std::vector<std::uint64_t> alpha;
            if (a1 > 0) alpha.push_back(a1);

            CirculantSpec shell;
            shell.beta = beta;
            shell.s_jumps = s;
            shell.alpha_jumps = alpha;
            shell.n = n;
            shell.m = beta * n;
            shell.k = s.size();
            shell.ell = alpha.size();
            std::size_t zeros = laplacian_eigenvalues(shell).zero_count();

            bool valid = true;
            try {
              validate_spec(beta, s, alpha, n);
            } catch (const spec_error& e) {
              if (e.which() != spec_error::kind::disconnected) continue;
              valid = false;
            }
            CHECK(valid == (zeros == 1));
          }
        }
      }
    }
  }
}

TEST_CASE("astronomic vertex counts are rejected up front") {
  CHECK_THROWS_AS(validate_spec(1, {1}, {}, std::uint64_t{1} << 40),
                  spec_error);
}
