#include "doctest.h"

#include "hcw/cyclotomic.hpp"
#include "hcw/error.hpp"
#include "hcw/laurent.hpp"
#include "hcw/primes.hpp"

using namespace hcw;

TEST_CASE("cyclotomic polynomials")
{
  CHECK(cyclotomic_poly(1) == LaurentPoly(0, {-1, 1}));
  CHECK(cyclotomic_poly(6) == LaurentPoly(0, {1, -1, 1}));
  CHECK(cyclotomic_poly(12) == LaurentPoly(0, {1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(15).coeffs().size() == 9);
  CHECK(cyclotomic_poly(30) == LaurentPoly(0, {1, 1, 0, -1, -1, -1, 0, 1, 1}));
}

TEST_CASE("laurent arithmetic")
{
  auto const q = LaurentPoly::q();
  auto const p = LaurentPoly::monomial(2, -1) + LaurentPoly(3) - q.pow(2);
  CHECK(p.low() == -1);
  CHECK(p.high() == 2);
  CHECK(p.to_string() == "2*q^-1 + 3 - q^2");
  CHECK(LaurentPoly::from_json(p.to_json()) == p);
  CHECK(p.eval(2) == Rational(0));
  CHECK(cyclotomic_poly(3).substitute_power(2) == LaurentPoly(0, {1, 0, 1, 0, 1}));
  CHECK(cyclotomic_poly(3).substitute_power(0) == LaurentPoly(3));

  auto const prod = cyclotomic_poly(3) * cyclotomic_poly(6);
  auto const quot = prod.divide_exact(cyclotomic_poly(6));
  REQUIRE(quot);
  CHECK(*quot == cyclotomic_poly(3));
  CHECK_FALSE(cyclotomic_poly(3).divide_exact(cyclotomic_poly(2)));
}

TEST_CASE("cyclotomic factorization")
{
  // Phi_3(q^2) = Phi_3 Phi_6
  auto f = cyclo_factor(cyclotomic_poly(3).substitute_power(2), 12);
  CHECK(f.fully_factored());
  CHECK(f.multiplicity(3) == 1);
  CHECK(f.multiplicity(6) == 1);
  CHECK(f.to_compact_string() == "Phi_3(q)Phi_6(q)");

  auto g = cyclo_factor(LaurentPoly::monomial(-2, -3) * cyclotomic_poly(2).pow(2), 4);
  CHECK(g.unit_constant == -2);
  CHECK(g.unit_exponent == -3);
  CHECK(g.multiplicity(2) == 2);
  CHECK(g.expand() == LaurentPoly::monomial(-2, -3) * cyclotomic_poly(2).pow(2));
}

TEST_CASE("zsigmondy primes")
{
  CHECK_FALSE(zsigmondy(2, 6));
  CHECK(*zsigmondy(3, 6) == 7);
  CHECK(*zsigmondy(2, 12) == 13);
  CHECK(*zsigmondy(2, 5) == 31);
  CHECK(multiplicative_order(2, 31) == 5);
  CHECK_THROWS_AS(zsigmondy(1, 4), ValidationError);
  CHECK_THROWS_AS(zsigmondy(2, 200), CapacityError);
  CHECK(prime_divisors(BigInt("1000000016000000063")) ==
        std::vector<BigInt>{BigInt(1000000007), BigInt(1000000009)});
}

TEST_CASE("cyclotomic field arithmetic")
{
  auto const w = Cyclotomic::zeta(3);
  CHECK(w + w * w == Cyclotomic(-1));
  auto const s = Cyclotomic(2) * w + Cyclotomic(1);
  CHECK(s * s == Cyclotomic(-3));

  auto const r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, -1);
  CHECK(r2 * r2 == Cyclotomic(2));
  CHECK(r2.conj() == r2);

  auto const i12 = Cyclotomic::zeta(4).lift(12);
  CHECK(i12.conductor() == 12);
  auto const back = i12.descend(4);
  REQUIRE(back);
  CHECK(*back == Cyclotomic::zeta(4));
  CHECK_FALSE(Cyclotomic::zeta(12).descend(4));
  CHECK_THROWS_AS(Cyclotomic::zeta(12).in_conductor(6), InvariantViolation);

  auto const x = Cyclotomic(1) + Cyclotomic::zeta(5);
  CHECK(x * x.inverse() == Cyclotomic(1));
  CHECK((Cyclotomic::zeta(4) * Cyclotomic::zeta(3)).conductor() == 12);
  CHECK(Cyclotomic(Rational(1, 2)).to_string() == "1/2");
  // non-reduced input
  CHECK(Cyclotomic(Rational(2, 4)) == Cyclotomic(Rational(1, 2)));
  CHECK(Cyclotomic(Rational(0, 3)).is_zero());
  CHECK(Cyclotomic(3, {Rational(3, 6), Rational(0, 2)}) == Cyclotomic(Rational(1, 2)));
}
