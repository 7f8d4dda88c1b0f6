#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "hcw/acceptance.hpp"
#include "hcw/algebra.hpp"
#include "hcw/clifford.hpp"
#include "hcw/coxeter.hpp"
#include "hcw/error.hpp"
#include "hcw/group_io.hpp"
#include "hcw/hc_series.hpp"
#include "hcw/hecke_schur.hpp"

namespace hcw
{

namespace
{

// Accumulates failures; a criterion passes when none were recorded.
class Checker
{
public:
  void check(bool ok, std::string const &what)
  {
    ++checks_;
    if (!ok)
      failures_.push_back(what);
  }

  void note(std::string const &text)
  { notes_.push_back(text); }

  bool ok() const
  { return failures_.empty(); }

  std::string detail() const
  {
    std::ostringstream os;
    os << checks_ << " checks";
    for (auto const &n : notes_)
      os << "; " << n;
    if (!failures_.empty()) {
      os << "; failed: " << failures_.front();
      if (failures_.size() > 1)
        os << " (+" << failures_.size() - 1 << " more)";
    }
    return os.str();
  }

private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Context
{
  std::filesystem::path dir;
  std::map<std::string, GroupFile> files;

  GroupFile const &file(std::string const &name)
  {
    auto it = files.find(name);
    if (it == files.end())
      it = files.emplace(name, load_group_file(dir / (name + ".json"))).first;
    return it->second;
  }
};

std::size_t trivial_index(CharTable const &t)
{
  auto const triv = ClassFunction::trivial(t.group());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == triv)
      return i;
  throw InvariantViolation("character table has no trivial row");
}


// ---- 1, 2: G2 Schur elements ------------------------------------------

void g2_table(Context &, Checker &c)
{
  std::string const expected =
      "k\tPhi_3(q^(k-1))Phi_6(q^k)\tPhi_3(q^k)Phi_6(q^(k-1))\n"
      "1\t3Phi_6(q)\tPhi_3(q)\n"
      "2\tPhi_3(q)Phi_12(q)\tPhi_3(q)Phi_6(q)^2\n"
      "5\tPhi_3(q)Phi_6(q)^2Phi_12(q)Phi_30(q)\tPhi_3(q)Phi_15(q)Phi_24(q)\n";
  c.check(g2_table_tsv() == expected, "table text");

  auto phi = [](unsigned d) { return cyclotomic_poly(d); };
  std::vector<std::pair<LaurentPoly, LaurentPoly>> const rows = {
      {LaurentPoly(3) * phi(6), phi(3)},
      {phi(3) * phi(12), phi(3) * phi(6) * phi(6)},
      {phi(3) * phi(6) * phi(6) * phi(12) * phi(30), phi(3) * phi(15) * phi(24)}};
  unsigned const ks[] = {1, 2, 5};
  for (std::size_t i = 0; i < 3; ++i) {
    std::string const k = "k=" + std::to_string(ks[i]);
    c.check(g2_product(ks[i], 1) == rows[i].first, k + " left product");
    c.check(g2_product(ks[i], 2) == rows[i].second, k + " right product");
  }
}

void g2_distinct(Context &, Checker &c)
{
  for (unsigned k : {1u, 2u, 5u}) {
    std::string const tag = "k=" + std::to_string(k);
    for (unsigned q0 : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
      c.check(laurent_eval(schur_g2(k, 1).value, q0) != laurent_eval(schur_g2(k, 2).value, q0),
              tag + " q0=" + std::to_string(q0) + " equal");
    auto const row = g2_row(k);
    c.check(row.witnesses.size() == 6, tag + " witness count");
    for (auto const &w : row.witnesses) {
      std::string const at = tag + " q0=" + std::to_string(w.q0);
      c.check(w.divides_lhs != w.divides_rhs, at + " witness divides both or neither");
      BigInt const l = laurent_eval(g2_product(k, 1), w.q0).get_num();
      BigInt const r = laurent_eval(g2_product(k, 2), w.q0).get_num();
      c.check((l % w.prime == 0) == w.divides_lhs && (r % w.prime == 0) == w.divides_rhs,
              at + " witness flags");
    }
    c.check(row.certified(), tag + " certificate");
  }
}

// ---- 3, 4: Clifford theory ---------------------------------------------

std::vector<std::pair<std::string, std::string>> const clifford_cases = {
    {"s3", "C3"}, {"a4", "V4"}, {"s4", "V4"}, {"d8", "Z"},
    {"q8", "Z"},  {"s3_wr_c2", "base"}, {"gl2_3", "SL2"}};

void clifford_regular(Context &ctx, Checker &c)
{
  for (auto const &[g, n] : clifford_cases) {
    auto const &f = ctx.file(g);
    CharTable const mt(f.group);
    CharTable const nt(f.subgroup(n));
    for (std::size_t th = 0; th < nt.size(); ++th) {
      std::string const tag = g + "/" + n + " theta=" + std::to_string(th);
      try {
        auto const sum = regular_sum_check(mt, nt, th);
        c.check(is_character(sum, mt), tag + " not a character");
      } catch (InvariantViolation const &e) {
        c.check(false, tag + ": " + e.what());
      }
    }
  }
}

void clifford_counts(Context &ctx, Checker &c)
{
  std::size_t gallagher_cases = 0;
  for (auto const &[g, n] : clifford_cases) {
    auto const &f = ctx.file(g);
    CharTable const mt(f.group);
    CharTable const nt(f.subgroup(n));
    for (std::size_t th = 0; th < nt.size(); ++th) {
      std::string const tag = g + "/" + n + " theta=" + std::to_string(th);
      auto const rep = clifford_decomposition(mt, nt, th);
      c.check(rep.induced_norm == Cyclotomic(Rational(rep.omega_order)), tag + " induced norm");

      ClassFunction const ind = induce(nt[th], f.group);
      c.check(inner_product(ind, ind) == Cyclotomic(Rational(rep.omega_order)),
              tag + " independent induced norm");

      if (rep.extendable && rep.omega_abelian) {
        ++gallagher_cases;
        c.check(rep.above.size() == rep.omega_order, tag + " |Irr(M|theta)|");
        c.check(rep.gallagher_bijective, tag + " Gallagher map");
      }
    }
  }
  c.note(std::to_string(gallagher_cases) + " extendable abelian cases");
}

// ---- 5: wreath extension -----------------------------------------------

void wreath(Context &, Checker &c)
{
  for (auto const &[name, k] : std::vector<std::pair<std::string, PermGroup>>{
           {"C2", cyclic_group(2)}, {"S3", symmetric_group(3)}}) {
    CharTable const t(k);
    for (unsigned m : {2u, 3u})
      for (std::size_t th = 0; th < t.size(); ++th) {
        std::string const tag = name + " m=" + std::to_string(m) + " theta=" + std::to_string(th);
        auto const w = wreath_extension(t[th], m);
        c.check(inner_product(w.character, w.character) == Cyclotomic(1), tag + " not irreducible");
        c.check(restrict(w.character, w.base) == outer_tensor_power(t[th], w.base, m),
                tag + " restriction");
      }
  }
}

// ---- 6, 7, 8: Harish-Chandra series ------------------------------------

void hc_series(Context &ctx, Checker &c)
{
  for (std::string const name : {"gl2_3", "gl2_5", "gl3_2"}) {
    auto const datum = BNDatum::from_group_file(ctx.file(name));
    auto const &gt = datum.table();
    auto const degrees = gt.degrees();
    auto const map = hc_partition(datum);
    c.check(map.warnings.empty(), name + " warnings");

    std::vector<unsigned> hits(gt.size(), 0);
    std::vector<ClassFunction> induced;
    for (auto const &s : map.series) {
      auto const r = hc_induce(datum, s.pair.record, datum.levi_table(s.pair.record)[s.pair.tau]);
      std::vector<std::size_t> members;
      for (auto const &[i, mult] : gt.constituents(r)) {
        (void)mult;
        members.push_back(i);
        ++hits[i];
      }
      c.check(members == s.members, name + " series members");
      induced.push_back(r);
    }
    for (std::size_t i = 0; i < hits.size(); ++i)
      c.check(hits[i] == 1, name + " irreducible " + std::to_string(i) + " in " +
                                std::to_string(hits[i]) + " series");
    for (std::size_t a = 0; a < induced.size(); ++a)
      for (std::size_t b = a + 1; b < induced.size(); ++b)
        c.check(inner_product(induced[a], induced[b]).is_zero(), name + " Mackey disjointness");

    if (name == "gl3_2") {
      std::vector<std::vector<unsigned long>> census;
      for (auto const &s : map.series) {
        std::vector<unsigned long> d;
        for (auto i : s.members)
          d.push_back(degrees[i]);
        std::sort(d.begin(), d.end());
        census.push_back(d);
      }
      std::sort(census.begin(), census.end());
      c.check(census == std::vector<std::vector<unsigned long>>{{1, 6, 8}, {3}, {3}, {7}},
              name + " census");
    } else {
      unsigned long const q = name == "gl2_3" ? 3 : 5;
      std::size_t cusp = 0;
      for (auto const &s : map.series)
        if (datum.record(s.pair.record).improper) {
          ++cusp;
          c.check(s.members.size() == 1 && degrees[s.members[0]] == q - 1,
                  name + " cuspidal degree");
        }
      c.check(cusp == (q * q - q) / 2, name + " cuspidal count");
      c.note(name + ": " + std::to_string(cusp) + " cuspidals of degree " + std::to_string(q - 1));
    }
  }
}

void howlett_lehrer(Context &ctx, Checker &c)
{
  for (auto const &[name, expected] : std::vector<std::pair<std::string, unsigned>>{
           {"gl2_3", 2}, {"gl2_5", 2}, {"gl3_2", 6}}) {
    auto const datum = BNDatum::from_group_file(ctx.file(name));
    auto const b = datum.record_index("B");
    auto const tau = trivial_index(datum.levi_table(b));
    auto const w = relative_weyl(datum, b, tau);
    auto const r = hc_induce(datum, b, datum.levi_table(b)[tau]);
    c.check(inner_product(r, r) == Cyclotomic(expected), name + " <R,R>");
    c.check(w.order == expected, name + " |W_tau|");
    c.check(w.matches, name + " relative Weyl agreement");

    for (std::size_t t = 0; t < datum.levi_table(b).size(); ++t) {
      auto const wt = relative_weyl(datum, b, t);
      c.check(wt.endo_dim == Cyclotomic(Rational(wt.order)),
              name + " tau=" + std::to_string(t) + " <R,R> = |W_tau|");
    }
  }
}

void q_param(Context &ctx, Checker &c)
{
  auto const [c1, ce] = schur_a1(1);
  for (auto const &[name, q0] : std::vector<std::pair<std::string, unsigned>>{{"gl2_3", 3}, {"gl2_5", 5}}) {
    auto const datum = BNDatum::from_group_file(ctx.file(name));
    auto const b = datum.record_index("B");
    auto const &lt = datum.levi_table(b);
    auto const r = hc_induce(datum, b, lt[trivial_index(lt)]);
    auto const q = q_parameter(r, datum.table());
    c.check(q && *q == Rational(q0), name + " q-parameter");
    c.check(schur_ratio(c1, ce, q0) == Rational(q0), name + " A1 Schur ratio");

    auto const dim = r.degree().rational_value();
    auto const pred = predicted_degrees(*dim, {c1, ce}, q0);
    std::vector<Rational> actual;
    for (auto const &[i, mult] : datum.table().constituents(r)) {
      c.check(mult == 1, name + " multiplicity free");
      actual.push_back(Rational(datum.table().degrees()[i]));
    }
    std::sort(actual.begin(), actual.end());
    auto sorted = pred;
    std::sort(sorted.begin(), sorted.end());
    c.check(actual == sorted, name + " constituent degrees");
  }
}

// ---- 9: disconnected restriction ---------------------------------------

void disconnected(Context &ctx, Checker &c)
{
  auto const datum = BNDatum::from_group_file(ctx.file("sl2_3_c2"));
  bool two_term = false;
  for (std::size_t r = 0; r < datum.records().size(); ++r) {
    if (datum.record(r).improper)
      continue;
    auto const &name = datum.record(r).name;
    for (std::size_t i = 0; i < datum.levi_table(r).size(); ++i) {
      auto const chk = disconnected_restriction_check(datum, r, datum.levi_table(r)[i]);
      std::string const tag = name + " phi=" + std::to_string(i);
      c.check(chk.restriction, tag + " restriction identity");
      c.check(chk.adjoint, tag + " adjoint identity");
      c.check(chk.contains, tag + " containment");
      two_term = two_term || chk.terms == 2;
    }
  }
  c.check(two_term, "no two-term case exercised");
}

// ---- 10: corners of skew group algebras --------------------------------

void corners(Context &, Checker &c)
{
  for (auto const &[omega, action] : std::vector<std::pair<std::string, std::string>>{
           {"C3", "invert"}, {"C2xC2", "swap"}}) {
    auto const s = named_skew_algebra(omega, "C2", action);
    CharTable const t(s.omega());
    auto const es = central_idempotents_abelian(t);
    std::size_t total = 0;
    std::size_t peirce = 0;
    for (std::size_t eta = 0; eta < t.size(); ++eta) {
      auto const r = corner_report(s, t, eta);
      std::string const tag = omega + " eta=" + std::to_string(eta);
      c.check(r.corner_dim == r.stabilizer_order, tag + " corner dimension");
      c.check(r.isomorphism(), tag + " group-law isomorphism");
      total += r.corner_dim;
      for (std::size_t mu = 0; mu < t.size(); ++mu)
        peirce += peirce_dimension(s.algebra, s.embed(es[eta]), s.embed(es[mu]));
    }
    std::size_t const full = s.omega().order() * s.weyl().order();
    c.check(peirce == full, omega + " Peirce decomposition");
    c.check(total == full, omega + ": sum of corner dimensions " + std::to_string(total) +
                               " != |Omega||W| = " + std::to_string(full));
    c.note(omega + ": sum_eta dim = " + std::to_string(total) + ", sum_{eta,mu} dim = " +
           std::to_string(peirce) + ", |Omega||W| = " + std::to_string(full));
  }
}

// ---- 11: Coxeter separation --------------------------------------------

void coxeter(Context &, Checker &c)
{
  for (std::string const type : {"A2", "A3", "A4", "B2", "B3", "D4", "F4"}) {
    auto const w = coxeter_group(type);
    auto const rep = separation_report(w);
    c.check(rep.empty(), type + " report not empty");
    c.check(verify_separation(w, rep), type + " scan verification");
  }
  auto const g2 = coxeter_group("G2");
  auto const rep = separation_report(g2);
  c.check(verify_separation(g2, rep), "G2 scan verification");
  c.check(rep.size() == 1, "G2 report size");
  if (rep.size() == 1) {
    auto const labels = character_labels(g2);
    auto const b = b_invariants(g2);
    std::vector<std::string> got = {labels[rep[0].first], labels[rep[0].second]};
    std::sort(got.begin(), got.end());
    c.check(got == std::vector<std::string>{"phi_{2,1}", "phi_{2,2}"}, "G2 pair labels");
    std::vector<unsigned> bs = {b[rep[0].first], b[rep[0].second]};
    std::sort(bs.begin(), bs.end());
    c.check(bs == std::vector<unsigned>{1, 2}, "G2 b-invariants");
  }
}

// ---- 12: character tables ----------------------------------------------

using IntTable = std::vector<std::vector<long>>;

// Known tables with columns ordered by (element order, class size); classes
// sharing that key may appear in any order.
struct KnownTable
{
  std::string file;
  std::vector<std::pair<unsigned long, std::uint64_t>> keys;
  IntTable rows;
};

std::vector<KnownTable> const known_tables = {
    {"s4",
     {{1, 1}, {2, 3}, {2, 6}, {3, 8}, {4, 6}},
     {{1, 1, 1, 1, 1}, {1, 1, -1, 1, -1}, {2, 2, 0, -1, 0}, {3, -1, 1, 0, -1}, {3, -1, -1, 0, 1}}},
    {"s5",
     {{1, 1}, {2, 10}, {2, 15}, {3, 20}, {4, 30}, {5, 24}, {6, 20}},
     {{1, 1, 1, 1, 1, 1, 1},
      {1, -1, 1, 1, -1, 1, -1},
      {4, 2, 0, 1, 0, -1, -1},
      {4, -2, 0, 1, 0, -1, 1},
      {5, 1, 1, -1, -1, 0, 1},
      {5, -1, 1, -1, 1, 0, -1},
      {6, 0, -2, 0, 0, 1, 0}}},
    {"d8",
     {{1, 1}, {2, 1}, {2, 2}, {2, 2}, {4, 2}},
     {{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {2, -2, 0, 0, 0}}},
    {"q8",
     {{1, 1}, {2, 1}, {4, 2}, {4, 2}, {4, 2}},
     {{1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}}}};

// Some column bijection preserving the keys maps the computed rows onto
// the known rows as sets.
bool matches_known(CharTable const &t, KnownTable const &k)
{
  auto const &cls = t.group().classes();
  if (cls.size() != k.keys.size() || t.size() != k.rows.size())
    return false;

  IntTable computed;
  for (auto const &row : t.rows()) {
    std::vector<long> r;
    for (auto const &v : row.values()) {
      auto const q = v.rational_value();
      if (!q || q->get_den() != 1)
        return false;
      r.push_back(q->get_num().get_si());
    }
    computed.push_back(r);
  }

  std::vector<std::size_t> perm(cls.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  auto const known = [&] {
    auto r = k.rows;
    std::sort(r.begin(), r.end());
    return r;
  }();
  do {
    bool keyed = true;
    for (std::size_t j = 0; j < perm.size() && keyed; ++j)
      keyed = cls[perm[j]].representative.order() == k.keys[j].first &&
              cls[perm[j]].size == k.keys[j].second;
    if (!keyed)
      continue;
    IntTable permuted;
    for (auto const &r : computed) {
      std::vector<long> p;
      for (auto j : perm)
        p.push_back(r[j]);
      permuted.push_back(p);
    }
    std::sort(permuted.begin(), permuted.end());
    if (permuted == known)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void tables(Context &ctx, Checker &c)
{
  std::vector<std::filesystem::path> paths;
  for (auto const &entry : std::filesystem::directory_iterator(ctx.dir))
    if (entry.path().extension() == ".json")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  for (auto const &p : paths) {
    std::string const stem = p.stem().string();
    auto const &f = ctx.file(stem);
    std::vector<std::pair<std::string, PermGroup>> groups = {{stem, f.group}};
    for (auto const &[n, h] : f.subgroups)
      groups.emplace_back(stem + "/" + n, h);
    for (auto const &[tag, g] : groups) {
      CharTable const t(g);
      auto const o = t.check_orthogonality();
      c.check(o.rows, tag + " row orthogonality");
      c.check(o.columns, tag + " column orthogonality");
      c.check(o.complete, tag + " completeness");
      BigInt sum = 0;
      for (auto d : t.degrees())
        sum += BigInt(d) * BigInt(d);
      c.check(sum == BigInt(std::to_string(g.order())), tag + " sum of squared degrees");
    }
  }
  c.note(std::to_string(paths.size()) + " corpus files");

  for (auto const &k : known_tables)
    c.check(matches_known(CharTable(ctx.file(k.file).group), k), k.file + " classical table");
}

struct Criterion
{
  unsigned id;
  char const *name;
  std::function<void(Context &, Checker &)> run;
};

} // namespace

std::vector<CriterionResult> run_acceptance(std::filesystem::path const &corpus_dir)
{
  std::vector<Criterion> const criteria = {
      {1, "g2-schur-table", g2_table},
      {2, "g2-schur-distinct", g2_distinct},
      {3, "clifford-regular-sum", clifford_regular},
      {4, "clifford-gallagher-counts", clifford_counts},
      {5, "wreath-extension", wreath},
      {6, "hc-partition", hc_series},
      {7, "howlett-lehrer-counts", howlett_lehrer},
      {8, "q-parameter-degrees", q_param},
      {9, "disconnected-restriction", disconnected},
      {10, "corner-dimensions", corners},
      {11, "coxeter-separation", coxeter},
      {12, "character-tables", tables}};

  Context ctx{corpus_dir, {}};
  std::vector<CriterionResult> out;
  for (auto const &cr : criteria) {
    auto const start = std::chrono::steady_clock::now();
    CriterionResult res;
    res.id = cr.id;
    res.name = cr.name;
    Checker chk;
    try {
      cr.run(ctx, chk);
      res.pass = chk.ok();
      res.detail = chk.detail();
    } catch (std::exception const &e) {
      res.pass = false;
      res.detail = std::string("error: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(res));
  }
  return out;
}

std::string acceptance_report(std::vector<CriterionResult> const &results)
{
  std::ostringstream os;
  std::size_t passed = 0;
  for (auto const &r : results) {
    passed += r.pass;
    os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name
       << "  " << r.detail << "\n";
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

nlohmann::json acceptance_json(std::vector<CriterionResult> const &results)
{
  nlohmann::json arr = nlohmann::json::array();
  for (auto const &r : results)
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return {{"criteria", arr}};
}

} // namespace hcw
