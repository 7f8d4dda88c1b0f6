#include <algorithm>

#include "doctest.h"

#include "hcw/char_table.hpp"
#include "hcw/error.hpp"

using namespace hcw;

namespace
{

PermGroup gl32()
{
  return PermGroup(7, {Perm::parse("(1 2 3 4 5 6 7)", 7), Perm::parse("(2 3)(4 7)", 7)});
}

PermGroup quaternion()
{
  return PermGroup(8, {Perm::parse("(1 2 3 4)(5 6 7 8)", 8), Perm::parse("(1 5 3 7)(2 8 4 6)", 8)});
}

} // namespace

TEST_CASE("permutation parsing and products")
{
  auto const a = Perm::parse("(1 2 3)", 3);
  auto const b = Perm::parse("(1,2)", 3);
  CHECK(a.order() == 3);
  CHECK((a * b).to_string() == "(2 3)");
  CHECK(a.conjugate_by(b) == a.inverse());
  CHECK(Perm::parse("()", 4).is_identity());
  auto const c6 = Perm::parse("(1 2 3 4 5 6)", 6);
  CHECK(c6.pow(3).to_string() == "(1 4)(2 5)(3 6)");
  CHECK(c6.pow(-1) == c6.inverse());
  CHECK(c6.pow(6).is_identity());
  CHECK_THROWS_AS(Perm::parse("(1 2 2)", 3), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1 5)", 3), ParseError);
}

TEST_CASE("group orders and classes")
{
  CHECK(symmetric_group(5).order() == 120);
  CHECK(symmetric_group(5).num_classes() == 7);
  CHECK(cyclic_group(6).num_classes() == 6);
  CHECK(gl32().order() == 168);
  CHECK(gl32().num_classes() == 6);
  CHECK(quaternion().order() == 8);
  CHECK(direct_product({symmetric_group(3), cyclic_group(2)}).order() == 12);
  CHECK(symmetric_group(4).exponent() == 12);
}

TEST_CASE("character tables")
{
  CharTable s3(symmetric_group(3));
  CHECK(s3.degrees() == std::vector<unsigned long>{1, 1, 2});
  CHECK(s3.check_orthogonality().ok());

  CharTable q8(quaternion());
  CHECK(q8.degrees() == std::vector<unsigned long>{1, 1, 1, 1, 2});
  CHECK(q8.check_orthogonality().ok());

  CharTable g(gl32());
  CHECK(g.degrees() == std::vector<unsigned long>{1, 3, 3, 6, 7, 8});
  CHECK(g.check_orthogonality().ok());
  // The two degree-3 characters are complex conjugates with values
  // (-1 +- sqrt(-7))/2 on elements of order 7.
  CHECK(g[1].conj() == g[2]);

  CharTable c6(cyclic_group(6));
  CHECK(c6.degrees() == std::vector<unsigned long>(6, 1));
  CHECK(c6.check_orthogonality().ok());

  CharTable s5(symmetric_group(5));
  CHECK(s5.degrees() == std::vector<unsigned long>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("induction and restriction")
{
  auto const g = symmetric_group(3);
  PermGroup const h(3, {Perm::parse("(1 2 3)", 3)});
  auto const ind = induce(ClassFunction::trivial(h), g);
  CharTable t(g);
  auto const parts = t.constituents(ind);
  REQUIRE(parts.size() == 2);
  CHECK(ind.degree() == Cyclotomic(2));
  CHECK(restrict(t[2], h).degree() == Cyclotomic(2));
  // Frobenius reciprocity
  for (auto const &chi : t.rows())
    CHECK(inner_product(ind, chi) == inner_product(ClassFunction::trivial(h), restrict(chi, h)));
}
