#include <algorithm>
#include <map>
#include <sstream>

#include "hcw/error.hpp"
#include "hcw/hc_series.hpp"

namespace hcw
{

namespace
{

void validate_record(ParabolicRecord const &r, PermGroup const &g)
{
  std::string const who = "parabolic record '" + r.name + "': ";
  if (!r.p.is_subgroup_of(g))
    throw ValidationError(who + "P is not a subgroup of G");
  if (!r.l.is_subgroup_of(r.p) || !r.u.is_subgroup_of(r.p))
    throw ValidationError(who + "L and U must lie in P");
  if (!r.u.is_normal_in(r.p))
    throw ValidationError(who + "U is not normal in P");
  if (intersection(r.l, r.u).order() != 1)
    throw ValidationError(who + "L and U intersect nontrivially");
  if (r.l.order() * r.u.order() != r.p.order())
    throw ValidationError(who + "|P| != |L| |U|");
  if (r.normalizer && !r.normalizer->is_subgroup_of(g))
    throw ValidationError(who + "normalizer is not a subgroup of G");
}

// True iff g^-1 a g = b, for subgroups of equal order.
bool conjugates_onto(PermGroup const &a, PermGroup const &b, Perm const &g)
{
  if (a.order() != b.order())
    return false;
  for (auto const &s : a.generators())
    if (!b.contains(s.conjugate_by(g)))
      return false;
  return true;
}

// (g tau)(y) = tau(g y g^-1) as a class function on b = g^-1 a g.
ClassFunction transport(ClassFunction const &tau, PermGroup const &b, Perm const &g)
{
  Perm const gi = g.inverse();
  std::vector<Cyclotomic> values;
  for (auto const &c : b.classes())
    values.push_back(tau.at(c.representative.conjugate_by(gi)));
  return ClassFunction(b, std::move(values), tau.kind());
}

std::vector<Perm> conjugating_elements(BNDatum const &datum, std::size_t a, std::size_t b)
{
  PermGroup const &la = datum.record(a).l;
  PermGroup const &lb = datum.record(b).l;
  std::vector<Perm> out;
  if (la.order() != lb.order())
    return out;
  for (auto const &g : datum.group().elements())
    if (conjugates_onto(la, lb, g))
      out.push_back(g);
  return out;
}

bool is_zero_fn(ClassFunction const &f)
{ return f.is_zero(); }

} // namespace

BNDatum::BNDatum(PermGroup g, std::vector<ParabolicRecord> records,
                 std::optional<PermGroup> identity_component)
: g_(std::move(g)), identity_component_(std::move(identity_component))
{
  g_table_ = std::make_shared<CharTable>(g_);
  PermGroup const trivial(g_.degree(), {}, g_.limits());

  bool have_improper = false;
  for (auto &r : records) {
    validate_record(r, g_);
    if (r.l.order() == g_.order()) {
      if (have_improper)
        throw ValidationError("more than one improper parabolic record");
      have_improper = true;
      r.p = g_;
      r.l = g_;
      r.u = trivial;
      r.improper = true;
    }
    records_.push_back(std::move(r));
  }
  if (!have_improper)
    records_.push_back({"G", g_, g_, trivial, std::nullopt, true});

  std::map<std::string, int> names;
  for (auto const &r : records_)
    if (++names[r.name] > 1)
      throw ValidationError("duplicate parabolic record name '" + r.name + "'");

  for (auto const &r : records_)
    l_tables_.push_back(r.improper ? g_table_ : std::make_shared<CharTable>(r.l));

  if (identity_component_ && !identity_component_->is_normal_in(g_))
    throw ValidationError("identity component is not normal in G");
}

BNDatum BNDatum::from_group_file(GroupFile const &file)
{
  nlohmann::json const &j = file.raw;
  if (!j.contains("parabolics") || !j["parabolics"].is_array())
    throw ParseError("group file has no \"parabolics\" list");

  unsigned const deg = file.group.degree();
  GroupLimits const lim = file.group.limits();
  auto sub = [&](nlohmann::json const &rec, char const *key) {
    if (!rec.contains(key))
      throw ParseError(std::string("parabolic record needs \"") + key + "\"");
    return PermGroup(deg, file.parse_elements(rec[key]), lim);
  };

  std::vector<ParabolicRecord> records;
  for (auto const &rec : j["parabolics"]) {
    ParabolicRecord r{rec.value("name", std::string("P") + std::to_string(records.size())),
                      sub(rec, "P"), sub(rec, "L"), sub(rec, "U"), std::nullopt, false};
    if (rec.contains("normalizer"))
      r.normalizer = sub(rec, "normalizer");
    records.push_back(std::move(r));
  }

  std::optional<PermGroup> g0;
  if (j.contains("identity_component"))
    g0 = PermGroup(deg, file.parse_elements(j["identity_component"]), lim);
  return BNDatum(file.group, std::move(records), std::move(g0));
}

std::size_t BNDatum::record_index(std::string const &name) const
{
  for (std::size_t i = 0; i < records_.size(); ++i)
    if (records_[i].name == name)
      return i;
  throw ValidationError("no parabolic record named '" + name + "'");
}

ClassFunction parabolic_induce(ClassFunction const &tau, PermGroup const &p, PermGroup const &u,
                               PermGroup const &g)
{
  PermGroup const &l = tau.group();
  std::vector<Cyclotomic> values;
  for (auto const &c : p.classes()) {
    std::optional<Cyclotomic> v;
    for (auto const &x : u.elements()) {
      Perm const y = c.representative * x.inverse();
      if (l.contains(y)) {
        v = tau.at(y);
        break;
      }
    }
    if (!v)
      throw InvariantViolation("element of P outside L U");
    values.push_back(*v);
  }
  CharKind const kind = tau.kind() == CharKind::Virtual ? CharKind::Virtual : CharKind::Character;
  return induce(ClassFunction(p, std::move(values), kind), g);
}

ClassFunction parabolic_restrict(ClassFunction const &rho, PermGroup const &l, PermGroup const &u)
{
  auto const &uel = u.elements();
  Cyclotomic const scale(Rational(1) / Rational(static_cast<unsigned long>(uel.size())));
  std::vector<Cyclotomic> values;
  for (auto const &c : l.classes()) {
    Cyclotomic sum(0);
    for (auto const &x : uel)
      sum += rho.at(c.representative * x);
    values.push_back(sum * scale);
  }
  CharKind const kind = rho.kind() == CharKind::Virtual ? CharKind::Virtual : CharKind::Character;
  return ClassFunction(l, std::move(values), kind);
}

ClassFunction hc_induce(BNDatum const &datum, std::size_t record, ClassFunction const &tau)
{
  auto const &r = datum.record(record);
  if (!tau.group().same_object(r.l))
    throw ValidationError("class function does not live on the Levi of record '" + r.name + "'");
  if (r.improper)
    return tau;
  return parabolic_induce(tau, r.p, r.u, datum.group());
}

ClassFunction hc_restrict(BNDatum const &datum, std::size_t record, ClassFunction const &rho)
{
  auto const &r = datum.record(record);
  if (!rho.group().same_object(datum.group()))
    throw ValidationError("class function does not live on G");
  if (r.improper)
    return rho;
  return parabolic_restrict(rho, r.l, r.u);
}

bool is_cuspidal(BNDatum const &datum, ClassFunction const &rho)
{
  for (std::size_t r = 0; r < datum.records().size(); ++r)
    if (!datum.record(r).improper && !is_zero_fn(hc_restrict(datum, r, rho)))
      return false;
  return true;
}

bool is_cuspidal_in_levi(BNDatum const &datum, std::size_t record, std::size_t tau)
{
  auto const &big = datum.record(record);
  ClassFunction const &t = datum.levi_table(record)[tau];
  if (big.improper)
    return is_cuspidal(datum, t);

  for (std::size_t r = 0; r < datum.records().size(); ++r) {
    auto const &small = datum.record(r);
    if (small.l.order() >= big.l.order() || !small.l.is_subgroup_of(big.l))
      continue;
    // P' n L must be a parabolic of L with Levi L' and unipotent U' n L.
    PermGroup const u_in = intersection(small.u, big.l);
    if (intersection(small.p, big.l).order() != small.l.order() * u_in.order())
      continue;
    if (!is_zero_fn(parabolic_restrict(t, small.l, u_in)))
      return false;
  }
  return true;
}

bool pairs_conjugate(BNDatum const &datum, CuspidalPair a, CuspidalPair b)
{
  ClassFunction const &ta = datum.levi_table(a.record)[a.tau];
  ClassFunction const &tb = datum.levi_table(b.record)[b.tau];
  for (auto const &g : conjugating_elements(datum, a.record, b.record))
    if (transport(ta, tb.group(), g) == tb)
      return true;
  return false;
}

RelativeWeyl relative_weyl(BNDatum const &datum, std::size_t record, std::size_t tau)
{
  auto const &r = datum.record(record);
  ClassFunction const &t = datum.levi_table(record)[tau];
  PermGroup const &g = datum.group();

  std::vector<Perm> normalizer;
  if (r.normalizer) {
    std::vector<Perm> gens = r.normalizer->generators();
    for (auto const &s : r.l.generators())
      gens.push_back(s);
    PermGroup const n(g.degree(), gens, g.limits());
    if (!r.l.is_normal_in(n))
      throw ValidationError("record '" + r.name + "': normalizer does not normalize L");
    normalizer = n.elements();
  } else {
    for (auto const &x : g.elements())
      if (conjugates_onto(r.l, r.l, x))
        normalizer.push_back(x);
  }

  std::vector<Perm> stab;
  for (auto const &x : normalizer)
    if (conjugate(t, x) == t)
      stab.push_back(x);

  RelativeWeyl out;
  out.stabilizer = PermGroup::generated_by(g.degree(), stab, g.limits());
  out.order = out.stabilizer.order() / r.l.order();
  auto const rt = hc_induce(datum, record, t);
  out.endo_dim = inner_product(rt, rt);
  out.matches = out.endo_dim == Cyclotomic(Rational(out.order));
  if (!out.matches) {
    std::ostringstream os;
    os << "record " << r.name << ", tau " << tau << ": |W_tau| = " << out.order
       << " but <R,R> = " << out.endo_dim.to_string();
    out.warning = os.str();
  }
  return out;
}

HCSeriesMap hc_partition(BNDatum const &datum)
{
  CharTable const &table = datum.table();
  std::size_t const nrec = datum.records().size();

  std::vector<CuspidalPair> pairs;
  for (std::size_t r = 0; r < nrec; ++r)
    for (std::size_t t = 0; t < datum.levi_table(r).size(); ++t)
      if (is_cuspidal_in_levi(datum, r, t))
        pairs.push_back({r, t});

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Perm>> conj_cache;
  auto conj = [&](std::size_t a, std::size_t b) -> std::vector<Perm> const & {
    auto key = std::make_pair(a, b);
    auto it = conj_cache.find(key);
    if (it == conj_cache.end())
      it = conj_cache.emplace(key, conjugating_elements(datum, a, b)).first;
    return it->second;
  };

  HCSeriesMap out;
  std::vector<bool> assigned(pairs.size(), false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (assigned[i])
      continue;
    HCSeries s;
    s.pair = pairs[i];
    ClassFunction const &ti = datum.levi_table(pairs[i].record)[pairs[i].tau];
    for (std::size_t j = i; j < pairs.size(); ++j) {
      if (assigned[j])
        continue;
      ClassFunction const &tj = datum.levi_table(pairs[j].record)[pairs[j].tau];
      bool match = false;
      for (auto const &g : conj(pairs[i].record, pairs[j].record))
        if (transport(ti, tj.group(), g) == tj) {
          match = true;
          break;
        }
      if (match) {
        assigned[j] = true;
        s.conjugates.push_back(pairs[j]);
      }
    }
    out.series.push_back(std::move(s));
  }

  std::vector<ClassFunction> induced;
  out.series_of.assign(table.size(), SIZE_MAX);
  for (std::size_t k = 0; k < out.series.size(); ++k) {
    auto &s = out.series[k];
    auto const r = hc_induce(datum, s.pair.record, datum.levi_table(s.pair.record)[s.pair.tau]);
    for (auto const &[idx, mult] : table.constituents(r)) {
      if (mult < 0)
        throw InvariantViolation("HC induced character has a negative multiplicity");
      if (out.series_of[idx] != SIZE_MAX)
        throw InvariantViolation("irreducible " + std::to_string(idx) + " lies in two HC series");
      out.series_of[idx] = k;
      s.members.push_back(idx);
      s.multiplicities.push_back(mult);
    }
    auto const w = relative_weyl(datum, s.pair.record, s.pair.tau);
    s.weyl_order = w.order;
    s.endo_dim = w.endo_dim;
    if (!w.matches)
      out.warnings.push_back(w.warning);
    induced.push_back(r);
  }

  for (std::size_t idx = 0; idx < out.series_of.size(); ++idx)
    if (out.series_of[idx] == SIZE_MAX)
      throw InvariantViolation("irreducible " + std::to_string(idx) + " lies in no HC series");

  for (std::size_t a = 0; a < induced.size(); ++a)
    for (std::size_t b = a + 1; b < induced.size(); ++b)
      if (!inner_product(induced[a], induced[b]).is_zero())
        throw InvariantViolation("induced characters of non-conjugate cuspidal pairs meet");
  return out;
}

nlohmann::json HCSeriesMap::to_json(BNDatum const &datum) const
{
  auto const degrees = datum.table().degrees();
  nlohmann::json j;
  j["group"] = datum.group().name();
  j["series"] = nlohmann::json::array();
  for (auto const &s : series) {
    nlohmann::json e;
    e["record"] = datum.record(s.pair.record).name;
    e["tau"] = s.pair.tau;
    e["tau_degree"] = datum.levi_table(s.pair.record).degrees()[s.pair.tau];
    nlohmann::json conj = nlohmann::json::array();
    for (auto const &p : s.conjugates)
      conj.push_back({datum.record(p.record).name, p.tau});
    e["conjugate_pairs"] = conj;
    e["members"] = s.members;
    e["multiplicities"] = s.multiplicities;
    std::vector<unsigned long> d;
    for (auto m : s.members)
      d.push_back(degrees[m]);
    e["degrees"] = d;
    e["relative_weyl_order"] = s.weyl_order;
    e["endomorphism_dim"] = s.endo_dim.to_string();
    j["series"].push_back(e);
  }
  j["series_of"] = series_of;
  j["warnings"] = warnings;
  return j;
}

std::string HCSeriesMap::to_tsv(BNDatum const &datum) const
{
  auto const degrees = datum.table().degrees();
  std::ostringstream os;
  os << "# group\t" << datum.group().name() << "\n";
  os << "# record\ttau\ttau_degree\tmembers\tdegrees\tmultiplicities\tW_tau\t<R,R>\n";
  for (auto const &s : series) {
    os << datum.record(s.pair.record).name << "\t" << s.pair.tau << "\t"
       << datum.levi_table(s.pair.record).degrees()[s.pair.tau] << "\t";
    for (std::size_t i = 0; i < s.members.size(); ++i)
      os << (i ? "," : "") << s.members[i];
    os << "\t";
    for (std::size_t i = 0; i < s.members.size(); ++i)
      os << (i ? "," : "") << degrees[s.members[i]];
    os << "\t";
    for (std::size_t i = 0; i < s.members.size(); ++i)
      os << (i ? "," : "") << s.multiplicities[i];
    os << "\t" << s.weyl_order << "\t" << s.endo_dim.to_string() << "\n";
  }
  for (auto const &w : warnings)
    os << "# warning\t" << w << "\n";
  return os.str();
}

std::optional<Rational> q_parameter(ClassFunction const &r, CharTable const &table)
{
  auto const parts = table.constituents(r);
  auto const degrees = table.degrees();
  for (auto const &[idx, mult] : parts)
    if (mult != 1)
      return std::nullopt;
  if (parts.size() == 1)
    return Rational(1);
  if (parts.size() != 2)
    return std::nullopt;
  unsigned long const a = degrees[parts[0].first];
  unsigned long const b = degrees[parts[1].first];
  return Rational(std::max(a, b)) / Rational(std::min(a, b));
}

DisconnectedCheck disconnected_restriction_check(BNDatum const &datum, std::size_t record,
                                                 ClassFunction const &phi)
{
  if (!datum.identity_component())
    throw ValidationError("BN datum has no identity component");
  PermGroup const &g = datum.group();
  PermGroup const &g0 = *datum.identity_component();
  auto const &r = datum.record(record);
  if (!r.u.is_subgroup_of(g0))
    throw HypothesisViolation("U is not contained in the identity component");

  PermGroup const l0 = intersection(r.l, g0);
  PermGroup const p0 = intersection(r.p, g0);
  if (p0.order() != l0.order() * r.u.order())
    throw InvariantViolation("P° != L° U");

  DisconnectedCheck out;

  std::vector<Perm> lg0_gens = r.l.generators();
  for (auto const &s : g0.generators())
    lg0_gens.push_back(s);
  PermGroup const lg0 = PermGroup::generated_by(g.degree(), lg0_gens, g.limits());

  std::vector<Perm> reps;
  std::vector<bool> covered(g.elements().size(), false);
  for (std::size_t i = 0; i < g.elements().size(); ++i) {
    if (covered[i])
      continue;
    Perm const &a = g.elements()[i];
    reps.push_back(a);
    for (auto const &x : lg0.elements())
      covered[g.element_index(x * a)] = true;
  }
  out.terms = reps.size();

  auto const lhs = restrict(hc_induce(datum, record, phi), g0);
  auto const inner = parabolic_induce(restrict(phi, l0), p0, r.u, g0);
  ClassFunction rhs = ClassFunction::zero(g0);
  for (auto const &a : reps)
    rhs += conjugate(inner, a);
  out.restriction = lhs == rhs;

  out.adjoint = true;
  for (auto const &psi : datum.table().rows()) {
    auto const left = restrict(hc_restrict(datum, record, psi), l0);
    auto const right = parabolic_restrict(restrict(psi, g0), l0, r.u);
    if (left != right) {
      out.adjoint = false;
      break;
    }
  }

  CharTable const l0_table(l0);
  CharTable const g0_table(g0);
  out.contains = true;
  for (auto const &[idx, mult] : l0_table.constituents(restrict(phi, l0))) {
    if (mult <= 0)
      continue;
    auto const part = parabolic_induce(l0_table[idx], p0, r.u, g0);
    if (!is_character(lhs - part, g0_table)) {
      out.contains = false;
      break;
    }
  }
  return out;
}

} // namespace hcw
