#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "circulant/numeric/complex_interval.hpp"
#include "circulant/numeric/interval.hpp"

namespace circulant::poly {

// Dense univariate polynomial with integer coefficients, ascending order,
// trailing zeros trimmed.  Degrees stay tiny here (at most twice the largest
// fixed jump), so the algorithms favor clarity over asymptotics.
using Z = std::vector<mpz_class>;

int deg(const Z& f);
void trim(Z& f);
Z derivative(const Z& f);
Z mul(const Z& a, const Z& b);
Z sub(const Z& a, const Z& b);

// Quotient of an exact division; returns false when the division leaves a
// remainder or the divisor is zero.
bool divide_exact(const Z& num, const Z& den, Z& quot);

// (z^d - 1)^2
Z circle_factor_squared(unsigned long d);

// Yun square-free decomposition of a monic polynomial: f = prod f_i^i with
// the f_i monic, square-free and pairwise coprime.  Factors of degree 0 are
// omitted.
std::vector<std::pair<Z, int>> squarefree_decomposition(const Z& monic);

mpz_class eval(const Z& f, const mpz_class& x);
mpq_class eval_q(const Z& f, const mpq_class& x);
Interval eval(const Z& f, const Interval& x);
CInterval eval(const Z& f, const CInterval& x);

}  // namespace circulant::poly
