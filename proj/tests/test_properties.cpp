#include <algorithm>
#include <optional>
#include <random>

#include "doctest.h"

#include "corpus.hpp"
#include "hcw/char_table.hpp"
#include "hcw/clifford.hpp"
#include "hcw/cyclotomic.hpp"
#include "hcw/error.hpp"
#include "hcw/group_io.hpp"

using namespace hcw;

namespace
{

Cyclotomic random_element(std::mt19937 &rng, unsigned n)
{
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  Cyclotomic x(0);
  for (unsigned k = 0; k < n; ++k)
    x += Cyclotomic(Rational(num(rng), den(rng))) * Cyclotomic::zeta(n, static_cast<long>(k));
  return x;
}

std::vector<unsigned long> sorted_degrees(CharTable const &t)
{
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

} // namespace

TEST_CASE("cyclotomic field axioms on random elements")
{
  std::mt19937 rng(20240611);
  for (unsigned n : {5u, 8u, 12u, 15u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto const a = random_element(rng, n);
      auto const b = random_element(rng, n);
      auto const c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Cyclotomic(0));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a * a.conj()).conj() == a * a.conj());
      if (!a.is_zero())
        CHECK(a * a.inverse() == Cyclotomic(1));
      CHECK(a.galois(1) == a);
    }
  }
}

TEST_CASE("semidirect products")
{
  PermGroup const c3 = cyclic_group(3);
  PermGroup const c2 = cyclic_group(2);
  SemidirectGroup const s3(c3, c2, {{c3.generators()[0].inverse()}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.model().is_abelian());
  CHECK(s3.model().num_classes() == 3);

  SemidirectGroup const direct(c3, c2, {{c3.generators()[0]}});
  CHECK(direct.model().is_abelian());

  // the identity map on the first generator but not an automorphism
  PermGroup const c4 = cyclic_group(4);
  CHECK_THROWS_AS(SemidirectGroup(c4, c2, {{c4.generators()[0].pow(2)}}), ValidationError);
  // an automorphism of order 2 cannot be the image of a generator of C3
  CHECK_THROWS_AS(SemidirectGroup(c3, c3, {{c3.generators()[0].inverse()}}), ValidationError);

  auto const sd = corpus("s3xs3_c2");
  auto const wr = corpus("s3_wr_c2");
  CHECK(sd.group.order() == 72);
  CHECK(sd.group.num_classes() == wr.group.num_classes());
  CHECK(sorted_degrees(CharTable(sd.group)) == sorted_degrees(CharTable(wr.group)));
}

TEST_CASE("coset quotients")
{
  auto const s4 = corpus("s4");
  auto const q = coset_quotient(s4.group, s4.subgroup("V4"));
  CHECK(q.group.order() == 6);
  CHECK_FALSE(q.group.is_abelian());
  CHECK(q.coset_reps.size() == 6);
  for (auto const &g : s4.group.generators())
    CHECK(q.group.contains(q.map(g)));

  auto const a4 = coset_quotient(s4.group, s4.subgroup("A4"));
  CHECK(a4.group.order() == 2);
  CHECK_THROWS_AS(coset_quotient(s4.group, s4.subgroup("D8")), ValidationError);
}

TEST_CASE("regular sum is constant on orbits")
{
  auto const s4 = corpus("s4");
  CharTable const m(s4.group);
  CharTable const n(s4.subgroup("V4"));
  for (std::size_t th = 0; th < n.size(); ++th) {
    auto const rep = clifford_decomposition(m, n, th);
    CHECK(rep.orbit.size() * rep.inertia.order() == s4.group.order());
    for (auto other : rep.orbit)
      CHECK(regular_sum_check(m, n, th) == regular_sum_check(m, n, other));
  }
}

TEST_CASE("extension gluing")
{
  SUBCASE("direct product C3 x C2 x C2")
  {
    PermGroup const i(7, {Perm::parse("(1 2 3)", 7), Perm::parse("(4 5)", 7), Perm::parse("(6 7)", 7)});
    PermGroup const n = PermGroup(i.degree(), {Perm::parse("(1 2 3)", 7)});
    PermGroup const ig = PermGroup(i.degree(), {Perm::parse("(1 2 3)", 7), Perm::parse("(4 5)", 7)});
    PermGroup const ip = PermGroup(i.degree(), {Perm::parse("(1 2 3)", 7), Perm::parse("(6 7)", 7)});
    CharTable const it(i), nt(n), gt(ig), pt(ip);
    std::size_t th = 0;
    while (nt[th] == ClassFunction::trivial(n))
      ++th;

    auto trivial_twist = [&](CharTable const &t, Perm const &x) {
      for (auto const &row : t.rows())
        if (restrict(row, n) == nt[th] && row.at(x) == Cyclotomic(1))
          return row;
      throw InvariantViolation("no extension");
    };
    auto const ug = trivial_twist(gt, Perm::parse("(4 5)", 7));
    auto const up = trivial_twist(pt, Perm::parse("(6 7)", 7));
    auto const chi = it[extension_gluing(it, nt, th, ug, up)];
    CHECK(restrict(chi, n) == nt[th]);
    CHECK(chi.at(Perm::parse("(4 5)", 7)) == Cyclotomic(1));
    CHECK(chi.at(Perm::parse("(6 7)", 7)) == Cyclotomic(1));
  }

  SUBCASE("faithful character of the center of D8 does not extend")
  {
    auto const d8 = corpus("d8");
    PermGroup const &i = d8.group;
    PermGroup const z = d8.subgroup("Z");
    CharTable const it(i), nt(z);
    std::size_t th = 0;
    while (nt[th] == ClassFunction::trivial(z))
      ++th;
    // the two Klein four subgroups containing Z
    std::vector<PermGroup> kleins;
    for (auto const &c : i.classes())
      if (c.order == 2 && c.size == 2)
        kleins.push_back(PermGroup(i.degree(), {z.generators()[0], c.representative}));
    REQUIRE(kleins.size() == 2);
    CharTable const at(kleins[0]), bt(kleins[1]);
    ClassFunction ua, ub;
    for (auto const &row : at.rows())
      if (restrict(row, z) == nt[th])
        ua = row;
    for (auto const &row : bt.rows())
      if (restrict(row, z) == nt[th])
        ub = row;
    CHECK_THROWS_AS(extension_gluing(it, nt, th, ua, ub), HypothesisViolation);
  }

  SUBCASE("distinct inputs give distinct outputs on C4 x| (C2 x C2)")
  {
    auto const f = corpus("c4_c2c2");
    PermGroup const n = f.subgroup("N");
    PermGroup const ig = f.subgroup("Gamma");
    PermGroup const ip = f.subgroup("Phi");
    CharTable const it(f.group), nt(n), gt(ig), pt(ip);
    // the order-2 character of C4 is invariant under inversion
    std::size_t th = 0;
    while (!(nt[th].at(n.generators()[0]) == Cyclotomic(-1)))
      ++th;

    std::vector<std::size_t> outputs;
    for (auto const &ug : gt.rows()) {
      if (restrict(ug, n) != nt[th])
        continue;
      for (auto const &up : pt.rows()) {
        if (restrict(up, n) != nt[th])
          continue;
        auto const idx = extension_gluing(it, nt, th, ug, up);
        CHECK(restrict(it[idx], ig) == ug);
        CHECK(restrict(it[idx], ip) == up);
        outputs.push_back(idx);
      }
    }
    CHECK(outputs.size() == 4);
    std::sort(outputs.begin(), outputs.end());
    CHECK(std::adjacent_find(outputs.begin(), outputs.end()) == outputs.end());
  }
}

TEST_CASE("wreath cycle products do not depend on the starting block")
{
  for (auto const &[k, m] : std::vector<std::pair<PermGroup, unsigned>>{
           {symmetric_group(3), 2u}, {cyclic_group(2), 3u}, {symmetric_group(3), 3u}}) {
    CharTable const t(k);
    unsigned const d = k.degree();
    for (auto const &theta : t.rows()) {
      auto const w = wreath_extension(theta, m);
      for (auto const &x : w.wreath.elements()) {
        Cyclotomic value(1);
        std::vector<bool> seen(m, false);
        for (unsigned b = 0; b < m; ++b) {
          if (seen[b])
            continue;
          std::vector<unsigned> cycle;
          for (unsigned cur = b; !seen[cur]; cur = x[cur * d] / d) {
            seen[cur] = true;
            cycle.push_back(cur);
          }
          Perm const y = x.pow(static_cast<long>(cycle.size()));
          std::optional<Cyclotomic> first;
          for (auto start : cycle) {
            std::vector<std::uint32_t> img(d);
            for (unsigned p = 0; p < d; ++p)
              img[p] = y[start * d + p] % d;
            auto const v = theta.at(Perm(std::move(img)));
            if (!first)
              first = v;
            CHECK(v == *first);
          }
          value *= *first;
        }
        CHECK(value == w.character.at(x));
      }
    }
  }
}
