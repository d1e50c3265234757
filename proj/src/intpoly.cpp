#include "circulant/numeric/intpoly.hpp"

#include <stdexcept>

namespace circulant::poly {

namespace {

using Q = std::vector<mpq_class>;

int qdeg(const Q& f) { return static_cast<int>(f.size()) - 1; }

void qtrim(Q& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Q to_q(const Z& f) {
  Q out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = mpq_class(f[i]);
  return out;
}

Q qderivative(const Q& f) {
  Q out;
  for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  qtrim(out);
  return out;
}

void qmake_monic(Q& f) {
  qtrim(f);
  if (f.empty()) return;
  mpq_class lead = f.back();
  for (auto& c : f) c /= lead;
}

// Remainder of a by b (b nonzero), in place of a.
Q qrem(Q a, const Q& b) {
  qtrim(a);
  while (qdeg(a) >= qdeg(b) && !a.empty()) {
    mpq_class factor = a.back() / b.back();
    int shift = qdeg(a) - qdeg(b);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= factor * b[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

Q qdivide(const Q& num, const Q& den, Q& rem) {
  Q a = num, q(num.size(), mpq_class(0));
  qtrim(a);
  while (qdeg(a) >= qdeg(den) && !a.empty()) {
    mpq_class factor = a.back() / den.back();
    int shift = qdeg(a) - qdeg(den);
    q[shift] = factor;
    for (size_t i = 0; i < den.size(); ++i)
      a[i + shift] -= factor * den[i];
    a.pop_back();
    qtrim(a);
  }
  rem = a;
  qtrim(q);
  return q;
}

// Monic gcd over the rationals.
Q qgcd(Q a, Q b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    Q r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  qmake_monic(a);
  return a;
}

Z q_to_monic_z(const Q& f) {
  Z out(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].get_den() != 1)
      throw std::logic_error("square-free factor of a monic integer polynomial must be integral");
    out[i] = f[i].get_num();
  }
  return out;
}

}  // namespace

int deg(const Z& f) { return static_cast<int>(f.size()) - 1; }

void trim(Z& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Z derivative(const Z& f) {
  Z out;
  for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  trim(out);
  return out;
}

Z mul(const Z& a, const Z& b) {
  if (a.empty() || b.empty()) return {};
  Z out(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Z sub(const Z& a, const Z& b) {
  Z out(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

bool divide_exact(const Z& num, const Z& den, Z& quot) {
  Q d = to_q(den);
  qtrim(d);
  if (d.empty()) return false;
  Q rem;
  Q q = qdivide(to_q(num), d, rem);
  if (!rem.empty()) return false;
  quot.assign(q.size(), mpz_class(0));
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return false;
    quot[i] = q[i].get_num();
  }
  trim(quot);
  return true;
}

Z circle_factor_squared(unsigned long d) {
  Z f(2 * d + 1, mpz_class(0));
  f[0] = 1;
  f[d] = -2;
  f[2 * d] = 1;
  return f;
}

namespace {

Q qsub(const Q& a, const Q& b) {
  Q out(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  qtrim(out);
  return out;
}

}  // namespace

std::vector<std::pair<Z, int>> squarefree_decomposition(const Z& monic) {
  std::vector<std::pair<Z, int>> out;
  Q f = to_q(monic);
  qtrim(f);
  if (qdeg(f) < 1) return out;
  if (f.back() != 1)
    throw std::logic_error("square-free decomposition requires a monic input");

  // Yun's algorithm.
  Q fp = qderivative(f);
  Q g = qgcd(f, fp);
  Q rem;
  Q c = qdivide(f, g, rem);
  Q y = qdivide(fp, g, rem);
  if (!rem.empty()) throw std::logic_error("gcd does not divide its source");
  Q d = qsub(y, qderivative(c));

  int multiplicity = 1;
  while (qdeg(c) > 0) {
    Q a = qgcd(c, d);
    if (qdeg(a) > 0) out.emplace_back(q_to_monic_z(a), multiplicity);
    c = qdivide(c, a, rem);
    if (!rem.empty()) throw std::logic_error("gcd does not divide its source");
    y = qdivide(d, a, rem);
    if (!rem.empty()) throw std::logic_error("gcd does not divide its source");
    d = qsub(y, qderivative(c));
    ++multiplicity;
  }
  return out;
}

mpz_class eval(const Z& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

mpq_class eval_q(const Z& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

Interval eval(const Z& f, const Interval& x) {
  Interval acc(0L, x.precision());
  for (size_t i = f.size(); i-- > 0;)
    acc = acc * x + Interval(f[i], x.precision());
  return acc;
}

CInterval eval(const Z& f, const CInterval& x) {
  CInterval acc(0L, x.precision());
  for (size_t i = f.size(); i-- > 0;)
    acc = acc * x + CInterval(mpq_class(f[i]), x.precision());
  return acc;
}

}  // namespace circulant::poly
