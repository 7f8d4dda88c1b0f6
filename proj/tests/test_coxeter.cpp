#include <algorithm>

#include "doctest.h"

#include "hcw/coxeter.hpp"
#include "hcw/error.hpp"

using namespace hcw;

TEST_CASE("small Coxeter groups")
{
  auto const a2 = coxeter_group("A2");
  CHECK(a2.group.order() == 6);
  CHECK(a2.parabolics.size() == 3);
  CHECK(inner_product(a2.reflection, a2.reflection) == Cyclotomic(1));
  CHECK(separation_report(a2).empty());

  auto const g2 = coxeter_group("G2");
  CHECK(g2.group.order() == 12);
  CHECK(g2.group.num_classes() == 6);
  CHECK(num_reflections(g2) == 6);
  auto const rep = separation_report(g2);
  REQUIRE(rep.size() == 1);
  auto const b = b_invariants(g2);
  std::vector<unsigned> pair_b{b[rep[0].first], b[rep[0].second]};
  std::sort(pair_b.begin(), pair_b.end());
  CHECK(pair_b == std::vector<unsigned>{1, 2});
  CHECK(verify_separation(g2, rep));
  CHECK(std::count(b.begin(), b.end(), 6u) == 1);
  CHECK(std::count(b.begin(), b.end(), 0u) == 1);

  for (auto const &t : {"A3", "A4", "B2", "B3", "D4", "I2(5)", "I2(8)"}) {
    auto const w = coxeter_group(t);
    CHECK(w.group.order() == coxeter_order(t));
    CHECK(w.reflection.degree() == Cyclotomic(static_cast<long>(w.rank)));
    CHECK(inner_product(w.reflection, w.reflection) == Cyclotomic(1));
  }
  CHECK_THROWS_AS(coxeter_group("E6"), ValidationError);
  CHECK_THROWS_AS(coxeter_group("A7"), ValidationError);
}

TEST_CASE("separation for A3, A4, B2, B3, D4")
{
  for (auto const &t : {"A3", "A4", "B2", "B3", "D4"}) {
    auto const w = coxeter_group(t);
    auto const rep = separation_report(w);
    INFO(t);
    CHECK(rep.empty());
    CHECK(verify_separation(w, rep));
  }
}

TEST_CASE("dihedral separation")
{
  // I2(m) for m >= 5 has several degree-2 characters that agree on the
  // reflections and the identity.
  auto const w = coxeter_group("I2(5)");
  CHECK(separation_report(w).size() == 1);
  auto const w8 = coxeter_group("I2(8)");
  CHECK(separation_report(w8).size() == 3);
}

TEST_CASE("F4")
{
  auto const w = coxeter_group("F4");
  CHECK(w.group.order() == 1152);
  CHECK(w.group.num_classes() == 25);
  CHECK(w.table->check_orthogonality().ok());
  CHECK(num_reflections(w) == 24);
  CHECK(inner_product(w.reflection, w.reflection) == Cyclotomic(1));
  auto const rep = separation_report(w);
  CHECK(rep.empty());
  CHECK(verify_separation(w, rep));
}
