#include "doctest.h"

#include "corpus.hpp"
#include "hcw/clifford.hpp"
#include "hcw/error.hpp"
#include "hcw/hc_series.hpp"

using namespace hcw;

namespace
{

std::size_t nontrivial_row(CharTable const &t)
{
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != ClassFunction::trivial(t.group()))
      return i;
  return 0;
}

} // namespace

TEST_CASE("clifford decomposition examples")
{
  auto s3 = corpus("s3");
  CharTable const m(s3.group);
  CharTable const n(s3.subgroup("C3"));
  // rows of C3: trivial first, then the two nontrivial linear characters
  auto rep = clifford_decomposition(m, n, nontrivial_row(n));
  CHECK(rep.orbit.size() == 2);
  CHECK(rep.inertia.order() == 3);
  CHECK(rep.omega_order == 1);
  CHECK(rep.label_dims == std::vector<long>{1});
  CHECK(m.degrees()[rep.above[0]] == 2);

  auto d8 = corpus("d8");
  CharTable const md(d8.group);
  CharTable const nz(d8.subgroup("Z"));
  auto const th = nontrivial_row(nz);
  auto rd = clifford_decomposition(md, nz, th);
  CHECK(rd.inertia.order() == 8);
  CHECK(rd.omega_order == 4);
  CHECK_FALSE(rd.extendable);
  CHECK(rd.label_dims == std::vector<long>{2});
  CHECK(regular_sum_check(md, nz, th) == Cyclotomic(2) * md[4]);

  auto s4 = corpus("s4");
  CharTable const m4(s4.group);
  CharTable const v4(s4.subgroup("V4"));
  auto r4 = clifford_decomposition(m4, v4, nontrivial_row(v4));
  CHECK(r4.orbit.size() == 3);
  CHECK(r4.inertia.order() == 8);
  CHECK(r4.extendable);
  CHECK(r4.extensions.size() == 2);
  CHECK(r4.label_dims == std::vector<long>{1, 1});
  for (auto i : r4.above)
    CHECK(m4.degrees()[i] == 3);
  CHECK(r4.gallagher_bijective);
}

TEST_CASE("wreath extension")
{
  auto const c2 = cyclic_group(2);
  CharTable const t(c2);
  auto w = wreath_extension(t[1], 2);
  CHECK(w.wreath.order() == 8);
  CHECK(inner_product(w.character, w.character) == Cyclotomic(1));
  CHECK(restrict(w.character, w.base) == outer_tensor_power(t[1], w.base, 2));

  CharTable const s3(symmetric_group(3));
  auto w3 = wreath_extension(s3[2], 2);
  CHECK(w3.wreath.order() == 72);
  CHECK(w3.character.degree() == Cyclotomic(4));
  CHECK(is_irreducible(w3.character));
}

TEST_CASE("HC partition of GL2(3)")
{
  auto const datum = BNDatum::from_group_file(corpus("gl2_3"));
  CHECK(datum.group().order() == 48);
  CHECK(datum.group().num_classes() == 8);
  auto const b = datum.record_index("B");
  auto const r = hc_induce(datum, b, ClassFunction::trivial(datum.record(b).l));
  CHECK(inner_product(r, r) == Cyclotomic(2));
  CHECK(*q_parameter(r, datum.table()) == Rational(3));

  auto const map = hc_partition(datum);
  std::size_t cusp = 0;
  for (auto const &s : map.series)
    if (datum.record(s.pair.record).improper) {
      ++cusp;
      CHECK(datum.table().degrees()[s.members[0]] == 2);
    }
  CHECK(cusp == 3);
  CHECK(map.warnings.empty());
}

TEST_CASE("HC partition of GL3(2)")
{
  auto const datum = BNDatum::from_group_file(corpus("gl3_2"));
  auto const map = hc_partition(datum);
  CHECK(map.series.size() == 4);
  auto const degrees = datum.table().degrees();
  std::vector<std::vector<unsigned long>> census;
  for (auto const &s : map.series) {
    std::vector<unsigned long> d;
    for (auto m : s.members)
      d.push_back(degrees[m]);
    census.push_back(d);
  }
  CHECK(census == std::vector<std::vector<unsigned long>>{{1, 6, 8}, {7}, {3}, {3}});
  CHECK(map.series[0].weyl_order == 6);
  CHECK(map.series[0].endo_dim == Cyclotomic(6));
}

TEST_CASE("disconnected restriction")
{
  auto const file = corpus("sl2_3_c2");
  CHECK(file.group.order() == 48);
  CHECK(file.group.num_classes() == 8);
  auto const datum = BNDatum::from_group_file(file);
  for (auto const &name : {"B", "B0"}) {
    auto const r = datum.record_index(name);
    for (auto const &phi : datum.levi_table(r).rows()) {
      auto const c = disconnected_restriction_check(datum, r, phi);
      CHECK(c.terms == (std::string(name) == "B" ? 1u : 2u));
      CHECK(c.restriction);
      CHECK(c.adjoint);
      CHECK(c.contains);
    }
  }
}

TEST_CASE("HC induction and restriction are adjoint")
{
  for (auto const &name : {"gl2_3", "gl3_2"}) {
    auto const datum = BNDatum::from_group_file(corpus(name));
    auto const &gt = datum.table();
    for (std::size_t r = 0; r < datum.records().size(); ++r) {
      auto const &lt = datum.levi_table(r);
      for (auto const &tau : lt.rows())
        for (auto const &rho : gt.rows())
          CHECK(inner_product(hc_induce(datum, r, tau), rho) ==
                inner_product(tau, hc_restrict(datum, r, rho)));
    }
  }
}

TEST_CASE("HC induction is transitive through P21 in GL3(2)")
{
  auto const datum = BNDatum::from_group_file(corpus("gl3_2"));
  auto const b = datum.record_index("B");
  auto const m = datum.record_index("P21");
  auto const &rb = datum.record(b);
  auto const &rm = datum.record(m);
  // B cap L21 is a Borel subgroup of L21 with unipotent radical U cap L21
  PermGroup const pb = intersection(rb.p, rm.l);
  PermGroup const ub = intersection(rb.u, rm.l);
  for (auto const &tau : datum.levi_table(b).rows()) {
    auto const step = parabolic_induce(restrict(tau, rb.l), pb, ub, rm.l);
    auto const two_step = hc_induce(datum, m, ClassFunction(datum.levi_table(m).group(), step.values()));
    CHECK(two_step == hc_induce(datum, b, tau));
  }
}

TEST_CASE("disconnected restriction on GL2(3) over SL2(3)")
{
  auto const file = corpus("gl2_3");
  auto const base = BNDatum::from_group_file(file);
  PermGroup const sl2 = file.subgroup("SL2");
  auto const &b = base.record(base.record_index("B"));
  ParabolicRecord b0{"B0", intersection(b.p, sl2), intersection(b.l, sl2), b.u, std::nullopt, false};
  BNDatum const datum(file.group, {b, b0}, sl2);

  auto const rb = datum.record_index("B");
  for (auto const &phi : datum.levi_table(rb).rows()) {
    auto const c = disconnected_restriction_check(datum, rb, phi);
    CHECK(c.terms == 1);
    CHECK(c.restriction);
    CHECK(c.adjoint);
    CHECK(c.contains);
  }
  auto const r0 = datum.record_index("B0");
  for (auto const &phi : datum.levi_table(r0).rows()) {
    auto const c = disconnected_restriction_check(datum, r0, phi);
    CHECK(c.terms == 2);
    CHECK(c.restriction);
    CHECK(c.adjoint);
    CHECK(c.contains);
  }
}
