#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpm/ring.hpp"

using namespace fpm;

namespace {

RingContext z_ctx() { return make_context(RingKind::Integers, {}, {}); }

RingContext zn_ctx(long long n) {
  return make_context(RingKind::Integers, {}, Element::integer(n));
}

RingContext f2x_ctx() {
  return make_context(RingKind::PolynomialsOverPrimeField, 2, {});
}

Element zi(long long n) { return Element::integer(n); }

}  // namespace

TEST_CASE("context construction and validation") {
  CHECK(z_ctx().to_string() == "Z");
  CHECK(zn_ctx(6).to_string() == "Z/(6)");
  CHECK(f2x_ctx().to_string() == "F2[x]");

  CHECK_THROWS_AS(make_context(RingKind::PolynomialsOverPrimeField, 4, {}), Error);
  CHECK_THROWS_AS(make_context(RingKind::Integers, {}, Element::integer(0)), Error);
  CHECK_THROWS_AS(make_context(RingKind::Integers, {}, Element::integer(1)), Error);
  CHECK_THROWS_AS(make_context(RingKind::Integers, {}, Element::integer(-1)), Error);
  // negative modulus is stored as its canonical associate
  CHECK(make_context(RingKind::Integers, {}, Element::integer(-6)).modulus ==
        Element::integer(6));
}

TEST_CASE("integer euclidean arithmetic") {
  BaseRing R = BaseRing::integers();
  auto dm = R.divmod(zi(-7), zi(3));
  CHECK(dm.quot == zi(-3));
  CHECK(dm.rem == zi(2));
  dm = R.divmod(zi(7), zi(-3));
  CHECK(R.add(R.mul(dm.quot, zi(-3)), dm.rem) == zi(7));
  CHECK(R.pivot_norm(dm.rem) < R.pivot_norm(zi(3)));

  CHECK(R.gcd(zi(12), zi(-18)) == zi(6));
  CHECK(R.gcd(zi(0), zi(0)) == zi(0));
  CHECK(R.lcm(zi(4), zi(6)) == zi(12));

  auto eg = R.ext_gcd(zi(240), zi(46));
  CHECK(eg.g == zi(2));
  CHECK(R.add(R.mul(zi(240), eg.x), R.mul(zi(46), eg.y)) == eg.g);

  CHECK(R.valuation(zi(12), zi(2)) == 2);
  CHECK(R.valuation(zi(12), zi(5)) == 0);
}

TEST_CASE("polynomial arithmetic over F2 and F5") {
  BaseRing R2 = BaseRing::polynomials(2);
  Element x2 = R2.poly_from_coeffs({0, 0, 1});
  Element xp1 = R2.poly_from_coeffs({1, 1});
  // (x+1)^2 = x^2 + 1 over F2
  CHECK(R2.mul(xp1, xp1) == R2.poly_from_coeffs({1, 0, 1}));
  auto dm = R2.divmod(x2, xp1);
  CHECK(R2.add(R2.mul(dm.quot, xp1), dm.rem) == x2);
  CHECK(R2.gcd(R2.poly_from_coeffs({1, 0, 1}), xp1) == xp1);

  BaseRing R5 = BaseRing::polynomials(5);
  Element a = R5.poly_from_coeffs({3, 4, 2});
  Element b = R5.poly_from_coeffs({1, 2});
  auto dm5 = R5.divmod(a, b);
  CHECK(R5.add(R5.mul(dm5.quot, b), dm5.rem) == a);
  // canonical associates are monic
  CHECK(R5.canonical(a) == R5.poly_from_coeffs({4, 2, 1}));
  // trailing zeros trimmed
  CHECK(R5.poly_from_coeffs({0, 0, 0}) == R5.zero());
  CHECK(R5.poly_from_coeffs({5, 10}) == R5.zero());
}

TEST_CASE("ideal_from_generators collapses by gcd") {
  CHECK(ideal_from_generators(z_ctx(), {zi(4), zi(6)}).gen == zi(2));
  CHECK(ideal_from_generators(zn_ctx(6), {zi(4)}).gen == zi(2));
  CHECK(ideal_from_generators(z_ctx(), {zi(0)}).gen == zi(0));
  CHECK(ideal_from_generators(z_ctx(), {zi(0)}).is_zero());
  CHECK_THROWS_AS(ideal_from_generators(z_ctx(), {}), Error);
  CHECK_THROWS_AS(ideal_from_generators(z_ctx(), {Element::polynomial({})}), Error);
  // zero ideal of a quotient is the modulus itself
  CHECK(ideal_from_generators(zn_ctx(6), {zi(0)}).gen == zi(6));
  CHECK(ideal_from_generators(zn_ctx(6), {zi(0)}).is_zero());
}

TEST_CASE("ideal combine") {
  auto Z = z_ctx();
  auto I2 = ideal_from_generators(Z, {zi(2)});
  auto I3 = ideal_from_generators(Z, {zi(3)});
  CHECK(ideal_product(I2, I3).gen == zi(6));
  CHECK(ideal_sum(I2, I3).gen == zi(1));
  CHECK(ideal_intersection(I2, I3).gen == zi(6));

  auto F2 = f2x_ctx();
  auto Ix = ideal_from_generators(F2, {F2.base.poly_from_coeffs({0, 1})});
  CHECK(ideal_power(Ix, 2).gen == F2.base.poly_from_coeffs({0, 0, 1}));

  auto Z6 = zn_ctx(6);
  auto J2 = ideal_from_generators(Z6, {zi(2)});
  auto J3 = ideal_from_generators(Z6, {zi(3)});
  auto prod = ideal_product(J2, J3);
  CHECK(prod.gen == zi(6));
  CHECK(prod.is_zero());

  CHECK_THROWS_AS(ideal_product(I2, J2), Error);
  CHECK_THROWS_AS(ideal_power(I2, 0), Error);
}

TEST_CASE("ideal_combine dispatch") {
  auto Z = z_ctx();
  auto I2 = ideal_from_generators(Z, {zi(2)});
  auto I3 = ideal_from_generators(Z, {zi(3)});
  CHECK(ideal_combine(IdealOp::Product, I2, I3) == ideal_product(I2, I3));
  CHECK(ideal_combine(IdealOp::Sum, I2, I3) == ideal_sum(I2, I3));
  CHECK(ideal_combine(IdealOp::Intersection, I2, I3) ==
        ideal_intersection(I2, I3));
  CHECK(ideal_combine(IdealOp::Power, I2, 3) == ideal_power(I2, 3));
  CHECK_THROWS_AS(ideal_combine(IdealOp::Power, I2, I3), Error);
  CHECK_THROWS_AS(ideal_combine(IdealOp::Sum, I2, 2), Error);
}

TEST_CASE("ideal compare") {
  auto Z = z_ctx();
  auto I2 = ideal_from_generators(Z, {zi(2)});
  auto I3 = ideal_from_generators(Z, {zi(3)});
  auto I6 = ideal_from_generators(Z, {zi(6)});
  CHECK(ideal_compare(I2, I6) == Containment::FirstContainsSecond);
  CHECK(ideal_compare(I6, I2) == Containment::SecondContainsFirst);
  CHECK(ideal_compare(I2, I3) == Containment::Incomparable);
  auto Z6 = zn_ctx(6);
  CHECK(ideal_compare(ideal_from_generators(Z6, {zi(3)}),
                      ideal_from_generators(Z6, {zi(3)})) == Containment::Equal);
  // product is contained in both factors
  CHECK(ideal_compare(I2, ideal_product(I2, I3)) == Containment::FirstContainsSecond);
}

TEST_CASE("enumerate_ideals over quotient contexts") {
  auto ideals = enumerate_ideals(zn_ctx(6));
  REQUIRE(ideals.size() == 4);
  CHECK(ideals[0].gen == zi(1));
  CHECK(ideals[1].gen == zi(2));
  CHECK(ideals[2].gen == zi(3));
  CHECK(ideals[3].gen == zi(6));

  auto i4 = enumerate_ideals(zn_ctx(4));
  REQUIRE(i4.size() == 3);
  CHECK(i4[2].gen == zi(4));

  auto F2q = make_context(RingKind::PolynomialsOverPrimeField, 2,
                          BaseRing::polynomials(2).poly_from_coeffs({0, 0, 1}));
  auto pid = enumerate_ideals(F2q);
  REQUIRE(pid.size() == 3);
  CHECK(pid[0].gen == F2q.base.one());
  CHECK(pid[1].gen == F2q.base.poly_from_coeffs({0, 1}));
  CHECK(pid[2].gen == F2q.base.poly_from_coeffs({0, 0, 1}));

  CHECK_THROWS_AS(enumerate_ideals(z_ctx()), Error);
}

TEST_CASE("reduction ideal set") {
  // exponent 1 (torsion-free case): {(0), (1), (2)}
  auto set = reduction_ideals(z_ctx(), zi(1));
  REQUIRE(set.size() == 3);
  CHECK(set[0].gen == zi(0));
  CHECK(set[1].gen == zi(1));
  CHECK(set[2].gen == zi(2));

  auto set6 = reduction_ideals(z_ctx(), zi(6));
  // (0), 1, 2, 3, 6, then smallest prime coprime to 6 = 5
  REQUIRE(set6.size() == 6);
  CHECK(set6[5].gen == zi(5));

  auto F2 = f2x_ctx();
  auto setx = reduction_ideals(F2, F2.base.poly_from_coeffs({0, 0, 1}));
  // (0), 1, x, x^2, then lowest-degree irreducible coprime to x^2 = x+1
  REQUIRE(setx.size() == 5);
  CHECK(setx[4].gen == F2.base.poly_from_coeffs({1, 1}));
}

TEST_CASE("is_prime_element") {
  CHECK(is_prime_element(z_ctx(), zi(5)));
  CHECK(!is_prime_element(z_ctx(), zi(6)));
  CHECK(is_prime_element(z_ctx(), zi(2)));
  // x^2 + x + 1 has no roots in F2 and degree 2, hence irreducible
  auto F2 = f2x_ctx();
  CHECK(is_prime_element(F2, F2.base.poly_from_coeffs({1, 1, 1})));
  CHECK(!is_prime_element(F2, F2.base.poly_from_coeffs({1, 0, 1})));  // (x+1)^2
  CHECK_THROWS_AS(is_prime_element(z_ctx(), zi(1)), Error);
  CHECK_THROWS_AS(is_prime_element(z_ctx(), zi(0)), Error);
  CHECK_THROWS_AS(is_prime_element(zn_ctx(6), zi(5)), Error);
}

TEST_CASE("ideal properties on random data") {
  // product contained in both factors; power laws; canonical idempotence
  auto Z = z_ctx();
  std::vector<long long> samples = {0, 1, 2, 3, 4, 6, 9, 10, 15, 24};
  for (long long a : samples)
    for (long long b : samples) {
      auto I = ideal_from_generators(Z, {zi(a)});
      auto J = ideal_from_generators(Z, {zi(b)});
      auto P = ideal_product(I, J);
      auto cmp_i = ideal_compare(I, P);
      CHECK((cmp_i == Containment::FirstContainsSecond || cmp_i == Containment::Equal));
      auto cmp_j = ideal_compare(J, P);
      CHECK((cmp_j == Containment::FirstContainsSecond || cmp_j == Containment::Equal));
      CHECK(ideal_from_generators(Z, {I.gen}) == I);
      if (a != 0 || b != 0) {
        // power(I,1) = I and power(I,a+b) = product(power a, power b)
        CHECK(ideal_power(I, 1) == I);
        CHECK(ideal_power(I, 3) == ideal_product(I, ideal_power(I, 2)));
      }
    }
}

TEST_CASE("enumerated ideals are pairwise distinct and cover divisors") {
  auto ctx = zn_ctx(12);
  auto ideals = enumerate_ideals(ctx);
  for (size_t i = 0; i < ideals.size(); ++i)
    for (size_t j = i + 1; j < ideals.size(); ++j)
      CHECK(ideal_compare(ideals[i], ideals[j]) != Containment::Equal);
  // every singly generated ideal equals one of them
  for (long long v = 0; v < 12; ++v) {
    auto I = ideal_from_generators(ctx, {zi(v)});
    bool found = false;
    for (const auto& J : ideals)
      if (ideal_compare(I, J) == Containment::Equal) found = true;
    CHECK(found);
  }
}
