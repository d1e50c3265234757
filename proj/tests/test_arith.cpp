#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circulant/arith.hpp"
#include "circulant/errors.hpp"
#include "circulant/treecount.hpp"

using namespace circulant;

TEST_CASE("square-free parts") {
  CHECK(squarefree_part(12) == 3);
  CHECK(squarefree_part(1) == 1);
  CHECK(squarefree_part(18) == 2);
  CHECK(squarefree_part(36) == 1);
  CHECK(squarefree_part(7) == 7);
  CHECK_THROWS_AS(squarefree_part(0), undefined_squarefree_error);
}

TEST_CASE("parity profiles") {
  ParityProfile p1 = parity_profile(validate_spec(2, {1, 2, 3}, {1}, 4));
  CHECK(p1.p_odd_s == 2);
  CHECK(p1.q_odd_alpha == 1);
  CHECK(*p1.r == 2);
  CHECK(*p1.s_sf == 3);

  ParityProfile p2 = parity_profile(validate_spec(2, {1, 2}, {1}, 4));
  CHECK(p2.p_odd_s == 1);
  CHECK(p2.q_odd_alpha == 1);
  CHECK(*p2.r == 1);
  CHECK(*p2.s_sf == 2);

  // no odd fixed jump: r is undefined
  ParityProfile p3 = parity_profile(validate_spec(1, {2}, {}, 5));
  CHECK(p3.p_odd_s == 0);
  CHECK_FALSE(p3.r.has_value());
  CHECK_FALSE(p3.s_sf.has_value());
}

TEST_CASE("exact integer square root") {
  mpz_class root;
  CHECK(exact_sqrt(mpz_class(1369), root));
  CHECK(root == 37);
  CHECK_FALSE(exact_sqrt(mpz_class(1370), root));
  CHECK(exact_sqrt(mpz_class(0), root));
  CHECK_FALSE(exact_sqrt(mpz_class(-4), root));
}

TEST_CASE("decomposition on the worked values") {
  // C_3(1,1): tau = 12 = 3 * 1 * 2^2
  CirculantSpec c3 = validate_spec(3, {1}, {1}, 1);
  Decomposition d3 = decompose_tau(c3, tau_chebyshev(c3));
  CHECK(d3.case_tag == ParityCase::OddOdd);
  CHECK(d3.coefficient == 3);
  CHECK(d3.a_n == 2);
  CHECK(d3.matches_prediction);

  // C_5(1): tau = 5 = 1 * 5 * 1
  CirculantSpec c5 = validate_spec(1, {1}, {}, 5);
  Decomposition d5 = decompose_tau(c5, tau_bruteforce(c5));
  CHECK(d5.coefficient == 1);
  CHECK(d5.a_n == 1);

  // C_{2n}(1,2,3,n): coefficient 4 at even n, 6 at odd n
  CirculantSpec even = validate_spec(2, {1, 2, 3}, {1}, 4);
  CHECK(decompose_tau(even, tau_chebyshev(even)).coefficient == 4);
  CirculantSpec odd = validate_spec(2, {1, 2, 3}, {1}, 5);
  CHECK(decompose_tau(odd, tau_chebyshev(odd)).coefficient == 6);
}

TEST_CASE("undefined square-free regimes are rejected loudly") {
  // hand-built shell: all jumps even with n odd and beta even cannot pass
  // validation, but the decomposition contract still rejects it
  CirculantSpec shell;
  shell.beta = 2;
  shell.s_jumps = {2};
  shell.alpha_jumps = {};
  shell.n = 3;
  shell.d = 2;
  shell.delta = 2;
  shell.m = 6;
  shell.k = 1;
  TauResult fake;
  fake.value = 36;
  CHECK_THROWS_AS(decompose_tau(shell, fake), undefined_squarefree_error);
}

TEST_CASE("non-square decomposition is a loud failure") {
  CirculantSpec spec = validate_spec(1, {1}, {}, 5);
  TauResult fake;
  fake.value = 35;  // 35/5 = 7 is not a square
  CHECK_THROWS_AS(decompose_tau(spec, fake), not_perfect_square_error);
}

TEST_CASE("recurrence checking") {
  std::vector<mpz_class> good = {2, 8, 37, 176, 842, 4033};
  RecurrenceReport rep = check_linear_recurrence(good, {6, -6, 1}, {2, 8, 37});
  CHECK(rep.seeds_match);
  CHECK(rep.recurrence_holds);
  CHECK(rep.first_violation == -1);

  std::vector<mpz_class> corrupted = {2, 8, 37, 177};
  RecurrenceReport bad = check_linear_recurrence(corrupted, {6, -6, 1}, {2, 8, 37});
  CHECK(bad.seeds_match);
  CHECK_FALSE(bad.recurrence_holds);
  CHECK(bad.first_violation == 3);

  std::vector<mpz_class> shifted = {8, 37, 176};
  CHECK_FALSE(check_linear_recurrence(shifted, {6, -6, 1}, {2, 8, 37}).seeds_match);
}

TEST_CASE("decomposition sequence of C_{3n}(1,n) gives 2, 8, 37, 176") {
  std::vector<mpz_class> a;
  for (std::uint64_t n = 1; n <= 4; ++n) {
    CirculantSpec spec = validate_spec(3, {1}, {1}, n);
    Decomposition dec = decompose_tau(spec, tau_chebyshev(spec));
    CHECK(dec.coefficient == 3);
    a.push_back(dec.a_n);
  }
  CHECK(a == std::vector<mpz_class>{2, 8, 37, 176});
  // brute-force route gives the same decomposition
  CirculantSpec s4 = validate_spec(3, {1}, {1}, 4);
  CHECK(decompose_tau(s4, tau_bruteforce(s4)).a_n == 176);
}

TEST_CASE("square-free part of large inputs avoids overflow traps") {
  // 2^61 = squarefree part 2; 65537^2 is a square of a prime
  CHECK(squarefree_part(std::uint64_t{1} << 61) == 2);
  std::uint64_t p = 65537;  // prime
  CHECK(squarefree_part(p * p) == 1);
  CHECK(squarefree_part(p * p * p) == p);
}
