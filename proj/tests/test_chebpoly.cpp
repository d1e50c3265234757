#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circulant/chebpoly.hpp"
#include "circulant/errors.hpp"
#include "circulant/numeric/chebyshev.hpp"

using namespace circulant;

namespace {

PalindromicLaurentPoly make_poly(std::vector<mpq_class> coeffs) {
  PalindromicLaurentPoly p;
  p.coeffs = std::move(coeffs);
  return p;
}

}  // namespace

TEST_CASE("family polynomials of C_{2n}(1,n) and C_{3n}(1,n)") {
  PolyFamily fam2 = build_family(validate_spec(2, {1}, {1}, 5));
  CHECK(fam2.P.coeffs == std::vector<mpq_class>{2, -1});
  CHECK(fam2.members[0].shift_is_zero());
  // P_1 = P + 4 sin^2(pi/2) = 6 - z - 1/z
  CHECK(fam2.members[1].shift.enclosure(96).contains(mpq_class(4)));

  PolyFamily fam3 = build_family(validate_spec(3, {1}, {1}, 2));
  // P_1 constant shift = 4 sin^2(pi/3) = 3
  CHECK(fam3.members[1].shift.enclosure(96).contains(mpq_class(3)));

  // L accumulates coincident offsets: C_{3n}(1,n) at n=1 has L = 4 - 2(z + 1/z)
  PolyFamily fam1 = build_family(validate_spec(3, {1}, {1}, 1));
  CHECK(fam1.L.coeffs == std::vector<mpq_class>{4, -2});
}

TEST_CASE("chebyshev transform: known images") {
  ChebyshevTransform q1 = chebyshev_transform(make_poly({2, -1}));
  CHECK(q1.coeffs == std::vector<mpq_class>{2, -2});

  // s = {1,2}: roots of the transform are 1 and -3/2
  ChebyshevTransform q2 = chebyshev_transform(make_poly({4, -1, -1}));
  CHECK(q2.eval_q(1) == 0);
  CHECK(q2.eval_q(mpq_class(-3, 2)) == 0);

  CHECK_THROWS_AS(chebyshev_transform(make_poly({5})), constant_poly_error);
}

TEST_CASE("transform consistency: Q(cos t) = P(e^{it}) at random angles") {
  std::mt19937_64 rng(7);
  std::vector<PalindromicLaurentPoly> polys = {
      make_poly({4, -1, -1}), make_poly({6, -1, 0, -1}),
      make_poly({2, mpq_class(3, 2), -2})};
  const mpfr_prec_t prec = 192;
  for (const auto& p : polys) {
    ChebyshevTransform q = chebyshev_transform(p);
    for (int i = 0; i < 32; ++i) {
      Angle t(mpq_class(static_cast<unsigned long>(rng() % 10007),
                        static_cast<unsigned long>(1 + rng() % 9973)));
      Interval lhs = p.eval_on_circle(t, prec);
      Interval rhs = q.eval(angle_cos(t, prec));
      CHECK(lhs.intersects(rhs));
      CHECK(Interval::hull(lhs, rhs).width_upper() <
            std::ldexp(1.0, -static_cast<int>(prec) / 2));
    }
    // exact rational spot check at t = 1/6 (cos = 1/2)
    CHECK(p.eval_on_circle(Angle::of(1, 6), prec)
              .contains(q.eval_q(mpq_class(1, 2))));
  }
}

TEST_CASE("root isolation: shifted member with the quadratic pair") {
  // 6 - z - 1/z: roots 3 +- 2 sqrt2, w = 3
  PolyFamily fam = build_family(validate_spec(2, {1}, {1}, 5));
  RootBundle bundle = isolate_roots(fam.members[1], 128);
  REQUIRE(bundle.pairs.size() == 1);
  const RootPair& pair = bundle.pairs[0];
  CHECK_FALSE(pair.on_unit_circle);
  CHECK(pair.w.re.contains(mpq_class(3)));
  CHECK(pair.w.im.contains(mpq_class(0)));
  // z + 1/z = 6 exactly
  CHECK((pair.z + pair.z_inv).re.contains(mpq_class(6)));
  // margin = min(|z|-1, 1-|1/z|) = 2 sqrt2 - 2
  CHECK(bundle.off_circle_margin.mid_double() ==
        doctest::Approx(2 * std::sqrt(2.0) - 2).epsilon(1e-9));
}

TEST_CASE("root isolation: exact unit-circle pair at w = 1") {
  PolyFamily fam = build_family(validate_spec(2, {1}, {1}, 5));
  RootBundle bundle = isolate_roots(fam.members[0], 128);
  REQUIRE(bundle.pairs.size() == 1);
  CHECK(bundle.pairs[0].on_unit_circle);
  CHECK(bundle.pairs[0].w_is_one());
  CHECK(bundle.pairs[0].multiplicity == 1);
}

TEST_CASE("root isolation: w-roots (-1 +- sqrt37)/4 for C_{3n}(1,2,n) at u=1") {
  PolyFamily fam = build_family(validate_spec(3, {1, 2}, {1}, 2));
  RootBundle bundle = isolate_roots(fam.members[1], 128);
  REQUIRE(bundle.pairs.size() == 2);
  double r37 = std::sqrt(37.0);
  std::vector<double> ws;
  for (const auto& pair : bundle.pairs) ws.push_back(pair.w.re.mid_double());
  std::sort(ws.begin(), ws.end());
  CHECK(ws[0] == doctest::Approx((-1 - r37) / 4).epsilon(1e-12));
  CHECK(ws[1] == doctest::Approx((-1 + r37) / 4).epsilon(1e-12));
}

TEST_CASE("bundle invariants over family members") {
  std::vector<CirculantSpec> specs = {
      validate_spec(2, {1, 2, 3}, {1}, 4), validate_spec(3, {1, 2}, {1}, 3),
      validate_spec(6, {1}, {1, 3}, 2), validate_spec(1, {2, 3}, {}, 7)};
  for (const auto& spec : specs) {
    PolyFamily fam = build_family(spec);
    for (std::uint64_t u = 0; u < spec.beta; ++u) {
      RootBundle bundle = isolate_roots(fam.members[u], 96);
      int total = 0;
      for (const auto& pair : bundle.pairs) total += pair.multiplicity;
      CHECK(total == static_cast<int>(spec.s_jumps.back()));

      ChebyshevTransform q = chebyshev_transform(fam.P);
      for (const auto& pair : bundle.pairs) {
        // reciprocal pairing: z * (1/z) = 1
        CInterval prod = pair.z * pair.z_inv;
        CHECK(prod.re.contains(mpq_class(1)));
        CHECK(prod.im.contains(mpq_class(0)));

        // each w is a root of the transform shifted by the member constant
        CInterval qv = q.eval(pair.w);
        Interval shift = fam.members[u].shift.enclosure(96);
        CHECK((qv.re + shift).contains_zero());
        CHECK(qv.im.contains(mpq_class(0)));

        // equivalently sum_i T_{s_i}(w) = k + shift/2
        CInterval lhs(Interval(0L, 96), Interval(0L, 96));
        for (auto s : spec.s_jumps)
          lhs = lhs + chebyshev_T(s, pair.w);
        Interval rhs = shift.mul_q(mpq_class(1, 2)) +
                       Interval(static_cast<long>(spec.k), 96);
        CHECK(lhs.re.intersects(rhs));
      }
    }
  }
}

TEST_CASE("deterministic ordering and repeatability") {
  PolyFamily fam = build_family(validate_spec(2, {1, 2, 3}, {1}, 4));
  RootBundle a = isolate_roots(fam.members[1], 96);
  RootBundle b = isolate_roots(fam.members[1], 96);
  REQUIRE(a.pairs.size() == b.pairs.size());
  for (size_t i = 0; i < a.pairs.size(); ++i) {
    CHECK(a.pairs[i].z.re.str() == b.pairs[i].z.re.str());
    CHECK(a.pairs[i].z.im.str() == b.pairs[i].z.im.str());
  }
  for (size_t i = 1; i < a.pairs.size(); ++i) {
    double prev = a.pairs[i - 1].z.abs().mid_double();
    double cur = a.pairs[i].z.abs().mid_double();
    CHECK(prev >= cur - 1e-12);
  }
}

TEST_CASE("vieta: root sum matches the transform coefficients") {
  // members[1] of C_{2n}(1,2,3,n): roots of 2w^3 + w^2 - w - 3, sum = -1/2
  PolyFamily fam = build_family(validate_spec(2, {1, 2, 3}, {1}, 4));
  RootBundle bundle = isolate_roots(fam.members[1], 96);
  CInterval sum(Interval(0L, 96), Interval(0L, 96));
  for (const auto& pair : bundle.pairs)
    for (int c = 0; c < pair.multiplicity; ++c) sum = sum + pair.w;
  CHECK(sum.re.contains(mpq_class(-1, 2)));
  CHECK(sum.im.contains(mpq_class(0)));
}

TEST_CASE("multiple circle roots when the jumps share a divisor") {
  // s = {3}: z^3 P(z) = (z^3 - 1)^2, pairs w = 1 and w = -1/2 (doubled)
  PalindromicLaurentPoly p = make_poly({2, 0, 0, -1});
  RootBundle bundle = isolate_roots(p, 96);
  REQUIRE(bundle.pairs.size() == 2);
  int total = 0;
  for (const auto& pair : bundle.pairs) {
    CHECK(pair.on_unit_circle);
    total += pair.multiplicity;
    if (pair.w_is_one()) CHECK(pair.multiplicity == 1);
    else CHECK(pair.w.re.contains(mpq_class(-1, 2)));
  }
  CHECK(total == 3);
}

TEST_CASE("unit-circle margins") {
  CirculantSpec spec = validate_spec(2, {1}, {1}, 5);
  PolyFamily fam = build_family(spec);
  RootBundle bundle = isolate_roots(fam.members[1], 96);
  MarginReport rep = unit_circle_margin(bundle, spec, 1);
  CHECK(rep.margin.is_strictly_positive());
  CHECK(rep.margin.mid_double() ==
        doctest::Approx(2 * std::sqrt(2.0) - 2).epsilon(1e-9));

  CHECK_THROWS_AS(unit_circle_margin(bundle, spec, 0), std::invalid_argument);
  CHECK_THROWS_AS(unit_circle_margin(bundle, spec, 2), std::invalid_argument);

  // unreduced spec: gcd(alpha, beta) = 2
  CirculantSpec unreduced = validate_spec(4, {1}, {2}, 3);
  RootBundle b2 = isolate_roots(build_family(unreduced).members[1], 96);
  CHECK_THROWS_AS(unit_circle_margin(b2, unreduced, 1), std::invalid_argument);
}

TEST_CASE("isolation refuses inputs it cannot separate from the circle") {
  // 1 - z - 1/z vanishes at the primitive 6th roots of unity, which the
  // exact factor split does not cover; the precision cap turns that into a
  // loud failure instead of an unsound bundle.
  PalindromicLaurentPoly p = make_poly({1, -1});
  CHECK_THROWS_AS(isolate_roots(p, 64, 2048), precision_error);
}

TEST_CASE("isolation round-trips constructed reciprocal pairs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned m = 1 + rng() % 3;
    std::vector<mpq_class> zs;
    while (zs.size() < m) {
      // real rational roots away from the unit circle
      mpq_class z(5 + static_cast<long>(rng() % 28), 1 + rng() % 4);
      if (rng() % 2) z = -z;
      if (abs(z) <= 1) continue;
      bool clash = false;
      for (const auto& other : zs)
        if (other == z || other == 1 / z) clash = true;
      if (!clash) zs.push_back(z);
    }
    // H(z) = prod (z - z_j)(z - 1/z_j), palindromic with rational coeffs
    std::vector<mpq_class> h = {1};
    for (const auto& z : zs) {
      mpq_class trace = z + 1 / z;
      std::vector<mpq_class> next(h.size() + 2, mpq_class(0));
      for (size_t i = 0; i < h.size(); ++i) {
        next[i] += h[i];
        next[i + 1] -= trace * h[i];
        next[i + 2] += h[i];
      }
      h = std::move(next);
    }
    PalindromicLaurentPoly p;
    p.coeffs.assign(m + 1, mpq_class(0));
    for (unsigned j = 0; j <= m; ++j) p.coeffs[j] = -h[m + j];

    RootBundle bundle = isolate_roots(p, 128);
    REQUIRE(bundle.pairs.size() == m);
    std::vector<mpq_class> expected = zs;
    std::sort(expected.begin(), expected.end(),
              [](const mpq_class& a, const mpq_class& b) {
                return abs(a) == abs(b) ? a < b : abs(a) > abs(b);
              });
    for (size_t i = 0; i < m; ++i) {
      mpq_class z = expected[i];
      if (abs(z) < 1) z = 1 / z;
      bool found = false;
      for (const auto& pair : bundle.pairs)
        if (pair.z.re.contains(z) && pair.z.im.contains(mpq_class(0)) &&
            pair.z_inv.re.contains(1 / z))
          found = true;
      CHECK(found);
    }
    CHECK(bundle.off_circle_margin.is_strictly_positive());
  }
}
