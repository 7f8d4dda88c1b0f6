#include "doctest.h"

#include "hcw/error.hpp"
#include "hcw/hecke_schur.hpp"

using namespace hcw;

TEST_CASE("A1 Schur elements")
{
  auto const [c1, ce] = schur_a1(1);
  CHECK(c1.value == LaurentPoly(0, {1, 1}));
  CHECK(ce.value == LaurentPoly(-1, {1, 1}));
  auto const [d1, de] = schur_a1(2);
  CHECK(d1.value == LaurentPoly(0, {1, 0, 1}));
  CHECK(de.value == LaurentPoly(-2, {1, 0, 1}));
  CHECK(schur_ratio(c1, ce, 3) == 3);
  CHECK(schur_ratio(c1, ce, 5) == 5);
  CHECK(schur_ratio(c1, c1, 7) == 1);
  CHECK(laurent_eval(ce.value, 3) == Rational(4, 3));
  auto const deg = predicted_degrees(4, {c1, ce}, 3);
  CHECK(deg == std::vector<Rational>{1, 3});
}

TEST_CASE("G2 Schur elements")
{
  CHECK(schur_g2(1, 1).value == LaurentPoly::monomial(6, -1) * cyclotomic_poly(6));
  CHECK(schur_g2(1, 2).value == LaurentPoly::monomial(2, -1) * cyclotomic_poly(3));
  CHECK(schur_g2(2, 1).value ==
        LaurentPoly::monomial(2, -3) * cyclotomic_poly(3) * cyclotomic_poly(12));
  CHECK_THROWS_AS(schur_g2(3, 1), ValidationError);
  CHECK_THROWS_AS(schur_g2(1, 3), ValidationError);
  for (unsigned k : {1u, 2u, 5u})
    for (unsigned q0 : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
      CHECK(laurent_eval(schur_g2(k, 1).value, q0) != laurent_eval(schur_g2(k, 2).value, q0));
}

TEST_CASE("G2 table")
{
  CHECK(g2_table_tsv() ==
        "k\tPhi_3(q^(k-1))Phi_6(q^k)\tPhi_3(q^k)Phi_6(q^(k-1))\n"
        "1\t3Phi_6(q)\tPhi_3(q)\n"
        "2\tPhi_3(q)Phi_12(q)\tPhi_3(q)Phi_6(q)^2\n"
        "5\tPhi_3(q)Phi_6(q)^2Phi_12(q)Phi_30(q)\tPhi_3(q)Phi_15(q)Phi_24(q)\n");
  auto const r2 = g2_row(2);
  CHECK(r2.lhs_at_2 == 91);
  CHECK(r2.rhs_at_2 == 63);
  for (unsigned k : {1u, 2u, 5u})
    CHECK(g2_row(k).certified());
}
