#include <algorithm>

#include "doctest.h"

#include "hcw/algebra.hpp"
#include "hcw/char_table.hpp"
#include "hcw/error.hpp"

using namespace hcw;

TEST_CASE("group algebra of C2 has two central idempotents")
{
  PermGroup const c2 = cyclic_group(2);
  auto const a = twisted_group_algebra(Cocycle2::trivial(c2));
  CHECK(a.dim() == 2);
  CHECK(center(a).size() == 2);

  CharTable const t(c2);
  auto const es = central_idempotents_abelian(t);
  REQUIRE(es.size() == 2);
  for (auto const &e : es)
    CHECK(a.is_idempotent(e));
  CHECK(is_zero(a.multiply(es[0], es[1])));
  CHECK(add(es[0], es[1]) == a.unit());
}

TEST_CASE("twisted C2 x C2 is a matrix algebra")
{
  PermGroup const v = direct_product({cyclic_group(2), cyclic_group(2)});
  auto bit = [](Perm const &p, unsigned point) { return p.images()[point] != point; };
  Cocycle2 const alpha(v, [&](Perm const &x, Perm const &y) {
    return Cyclotomic(bit(x, 2) && bit(y, 0) ? -1 : 1);
  });
  auto const a = twisted_group_algebra(alpha);
  CHECK(a.dim() == 4);
  CHECK(center(a).size() == 1);

  CHECK(center(twisted_group_algebra(Cocycle2::trivial(v))).size() == 4);
}

TEST_CASE("invalid cocycles are rejected")
{
  PermGroup const c2 = cyclic_group(2);
  CHECK_THROWS_AS(Cocycle2(c2, [](Perm const &, Perm const &) { return Cyclotomic(2); }),
                  ValidationError);
}

TEST_CASE("idempotents of C3 and C6 are orthogonal and complete")
{
  for (unsigned n : {3u, 6u}) {
    PermGroup const c = cyclic_group(n);
    auto const a = twisted_group_algebra(Cocycle2::trivial(c));
    CharTable const t(c);
    auto const es = central_idempotents_abelian(t);
    REQUIRE(es.size() == n);
    AlgElement sum = a.zero();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(a.is_idempotent(es[i]));
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          CHECK(is_zero(a.multiply(es[i], es[j])));
      sum = add(sum, es[i]);
    }
    CHECK(sum == a.unit());
  }
}

TEST_CASE("skew group algebra C3 x| C2")
{
  auto const s = named_skew_algebra("C3", "C2", "invert");
  CHECK(s.algebra.dim() == 6);
  CHECK(s.data->model().order() == 6);
  CHECK_FALSE(s.data->model().is_abelian());

  CharTable const t(s.omega());
  std::vector<std::size_t> dims;
  for (std::size_t eta = 0; eta < t.size(); ++eta) {
    auto const r = corner_report(s, t, eta);
    CHECK(r.corner_dim == r.stabilizer_order);
    CHECK(r.isomorphism());
    dims.push_back(r.corner_dim);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 1, 2});

  auto const whole = corner(s.algebra, s.algebra.unit());
  CHECK(whole.basis.size() == 6);
}

TEST_CASE("swap action on C2 x C2")
{
  auto const s = named_skew_algebra("C2xC2", "C2", "swap");
  CHECK(s.algebra.dim() == 8);
  CharTable const t(s.omega());
  std::size_t total = 0;
  std::size_t peirce = 0;
  auto const es = central_idempotents_abelian(t);
  for (std::size_t eta = 0; eta < t.size(); ++eta) {
    auto const r = corner_report(s, t, eta);
    CHECK(r.isomorphism());
    total += r.corner_dim;
    for (std::size_t mu = 0; mu < t.size(); ++mu)
      peirce += peirce_dimension(s.algebra, s.embed(es[eta]), s.embed(es[mu]));
  }
  CHECK(total == 6);
  CHECK(peirce == 8);
}

TEST_CASE("trivial action gives commutative corners")
{
  auto const s = named_skew_algebra("C3", "C2", "trivial");
  CharTable const t(s.omega());
  for (std::size_t eta = 0; eta < t.size(); ++eta)
    CHECK(corner_report(s, t, eta).corner_dim == 2);
  CHECK_THROWS_AS(named_skew_algebra("C3", "C2", "swap"), ValidationError);
  CHECK_THROWS_AS(named_skew_algebra("C3", "C2", "twist"), ValidationError);
  CHECK_THROWS_AS(named_skew_algebra("Q8", "C2", "invert"), ValidationError);
}
