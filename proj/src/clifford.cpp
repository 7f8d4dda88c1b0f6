#include <algorithm>
#include <numeric>

#include "hcw/clifford.hpp"
#include "hcw/error.hpp"

namespace hcw
{

namespace
{

long multiplicity(ClassFunction const &f, ClassFunction const &irr)
{
  auto const v = inner_product(f, irr).rational_value();
  if (!v || v->get_den() != 1)
    throw InvariantViolation("non-integral multiplicity of an irreducible");
  return v->get_num().get_si();
}

std::size_t require_row(CharTable const &t, ClassFunction const &f, char const *what)
{
  auto idx = t.index_of(f);
  if (!idx)
    throw InvariantViolation(std::string(what) + " is not an irreducible of the table");
  return *idx;
}

void require_normal(CharTable const &m_table, CharTable const &n_table)
{
  if (!n_table.group().is_normal_in(m_table.group()))
    throw ValidationError("subgroup is not normal");
}

} // namespace

CliffordReport clifford_decomposition(CharTable const &m_table, CharTable const &n_table,
                                      std::size_t theta)
{
  require_normal(m_table, n_table);
  if (theta >= n_table.size())
    throw ValidationError("character index out of range");

  PermGroup const &m = m_table.group();
  PermGroup const &n = n_table.group();
  ClassFunction const &th = n_table[theta];

  CliffordReport rep;
  rep.theta = theta;

  std::vector<Perm> stab;
  for (auto const &x : m.elements()) {
    std::size_t const idx = require_row(n_table, conjugate(th, x), "conjugate character");
    if (idx == theta)
      stab.push_back(x);
    if (std::find(rep.orbit.begin(), rep.orbit.end(), idx) == rep.orbit.end())
      rep.orbit.push_back(idx);
  }
  std::sort(rep.orbit.begin(), rep.orbit.end());
  rep.inertia = PermGroup::generated_by(m.degree(), stab, m.limits());
  if (rep.orbit.size() * rep.inertia.order() != m.order())
    throw InvariantViolation("orbit-stabilizer count failed");

  auto const omega = coset_quotient(rep.inertia, n);
  rep.omega_order = omega.group.order();
  rep.omega_abelian = omega.group.is_abelian();
  rep.quotient_abelian = coset_quotient(m, n).group.is_abelian();

  for (std::size_t i = 0; i < m_table.size(); ++i) {
    long const mult = multiplicity(restrict(m_table[i], n), th);
    if (mult != 0) {
      rep.above.push_back(i);
      rep.label_dims.push_back(mult);
    }
  }

  CharTable const i_table(rep.inertia);
  for (std::size_t i = 0; i < i_table.size(); ++i) {
    if (i_table[i].degree() != th.degree())
      continue;
    if (restrict(i_table[i], n) == th)
      rep.extensions.push_back(i);
  }
  rep.extendable = !rep.extensions.empty();
  if (rep.extendable)
    rep.designated = rep.extensions.front();

  auto const ind = induce(th, m);
  rep.induced_norm = inner_product(ind, ind);

  if (rep.extendable && rep.omega_abelian) {
    CharTable const o_table(omega.group);
    ClassFunction const &ext = i_table[*rep.designated];
    std::vector<std::size_t> image;
    for (std::size_t e = 0; e < o_table.size(); ++e) {
      auto const lifted = inflate(o_table[e], omega.map);
      auto const chi = induce(ext.tensor(lifted), m);
      std::size_t const idx = require_row(m_table, chi, "Gallagher image");
      rep.gallagher.emplace_back(e, idx);
      image.push_back(idx);
    }
    std::sort(image.begin(), image.end());
    bool const injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    rep.gallagher_bijective = injective && image == rep.above;
  }
  return rep;
}

nlohmann::json CliffordReport::to_json() const
{
  nlohmann::json j;
  j["theta"] = theta;
  j["orbit"] = orbit;
  j["inertia_order"] = inertia.order();
  j["omega_order"] = omega_order;
  j["omega_abelian"] = omega_abelian;
  j["irr_above"] = above;
  j["label_dims"] = label_dims;
  j["extendable"] = extendable;
  j["extensions"] = extensions;
  if (designated)
    j["designated_extension"] = *designated;
  else
    j["designated_extension"] = nullptr;
  nlohmann::json g = nlohmann::json::array();
  for (auto const &[e, c] : gallagher)
    g.push_back({e, c});
  j["gallagher"] = g;
  j["gallagher_bijective"] = gallagher_bijective;
  j["induced_norm"] = induced_norm.to_string();
  return j;
}

ClassFunction regular_sum_check(CharTable const &m_table, CharTable const &n_table,
                                std::size_t theta)
{
  require_normal(m_table, n_table);
  PermGroup const &m = m_table.group();
  ClassFunction const &th = n_table[theta];

  ClassFunction sum = ClassFunction::zero(m);
  for (auto const &chi : m_table.rows()) {
    long const mult = multiplicity(restrict(chi, n_table.group()), th);
    if (mult != 0)
      sum += Cyclotomic(mult) * chi;
  }
  if (sum != induce(th, m))
    throw InvariantViolation("regular sum differs from the induced character");
  return sum.with_kind(CharKind::Character);
}

std::size_t extension_gluing(CharTable const &i_table, CharTable const &n_table, std::size_t theta,
                             ClassFunction const &u_gamma, ClassFunction const &u_phi)
{
  PermGroup const &i = i_table.group();
  PermGroup const &n = n_table.group();
  PermGroup const &ig = u_gamma.group();
  PermGroup const &ip = u_phi.group();
  ClassFunction const &th = n_table[theta];

  require_normal(i_table, n_table);
  if (!n.is_subgroup_of(ig) || !n.is_subgroup_of(ip) || !ig.is_subgroup_of(i) || !ip.is_subgroup_of(i))
    throw HypothesisViolation("N <= I_Gamma, I_Phi <= I fails");
  if (!ig.is_normal_in(i) || !ip.is_normal_in(i))
    throw HypothesisViolation("I_Gamma and I_Phi must be normal in I");
  if (intersection(ig, ip).order() != n.order() || ig.order() * ip.order() != i.order() * n.order())
    throw HypothesisViolation("I/N is not the direct product of I_Gamma/N and I_Phi/N");

  auto is_cyclic = [](PermGroup const &g) {
    for (auto const &c : g.classes())
      if (c.order == g.order())
        return true;
    return false;
  };
  auto const qg = coset_quotient(ig, n);
  auto const qp = coset_quotient(ip, n);
  if (!is_cyclic(qg.group) || !is_cyclic(qp.group))
    throw HypothesisViolation("Gamma and Phi must be cyclic");

  if (restrict(u_gamma, n) != th)
    throw HypothesisViolation("u_Gamma does not extend theta");
  if (restrict(u_phi, n) != th)
    throw HypothesisViolation("u_Phi does not extend theta");
  if (!is_irreducible(u_gamma) || !is_irreducible(u_phi))
    throw HypothesisViolation("u_Gamma and u_Phi must be irreducible");
  for (auto const &g : ip.generators())
    if (conjugate(u_gamma, g) != u_gamma)
      throw HypothesisViolation("u_Gamma is not Phi-invariant");

  std::optional<std::size_t> seed;
  for (std::size_t r = 0; r < i_table.size() && !seed; ++r)
    if (i_table[r].degree() == th.degree() && restrict(i_table[r], n) == th)
      seed = r;
  if (!seed)
    throw HypothesisViolation("theta does not extend to I");

  // Twist the seed extension by the linear characters of I/N.
  auto const omega = coset_quotient(i, n);
  CharTable const o_table(omega.group);
  std::vector<std::size_t> found;
  for (auto const &eta : o_table.rows()) {
    if (eta.degree() != Cyclotomic(1))
      continue;
    auto const chi = i_table[*seed].tensor(inflate(eta, omega.map));
    if (restrict(chi, ig) == u_gamma && restrict(chi, ip) == u_phi)
      found.push_back(require_row(i_table, chi, "glued extension"));
  }
  if (found.empty())
    throw HypothesisViolation("no common extension of u_Gamma and u_Phi");
  if (found.size() > 1)
    throw InvariantViolation("glued extension is not unique");
  return found.front();
}

namespace
{

// Block component of x (which maps block i onto some block j) as a
// permutation of the d points of one block.
Perm block_component(Perm const &x, unsigned block, unsigned d)
{
  std::vector<std::uint32_t> img(d);
  for (unsigned p = 0; p < d; ++p)
    img[p] = x[block * d + p] % d;
  return Perm(std::move(img));
}

} // namespace

ClassFunction outer_tensor_power(ClassFunction const &theta, PermGroup const &base, unsigned m)
{
  PermGroup const &k = theta.group();
  unsigned const d = k.degree();
  std::vector<Cyclotomic> values;
  for (auto const &c : base.classes()) {
    Cyclotomic v(1);
    for (unsigned b = 0; b < m; ++b)
      v *= theta.at(block_component(c.representative, b, d));
    values.push_back(v);
  }
  return ClassFunction(base, std::move(values), CharKind::Character);
}

WreathExtension wreath_extension(ClassFunction const &theta, unsigned m)
{
  if (m == 0)
    throw ValidationError("wreath product needs m >= 1");
  if (!is_irreducible(theta))
    throw ValidationError("wreath extension needs an irreducible character");

  PermGroup const &k = theta.group();
  unsigned const d = k.degree();
  unsigned const deg = d * m;

  auto shift = [&](Perm const &g, unsigned b) {
    std::vector<std::uint32_t> img(deg);
    std::iota(img.begin(), img.end(), 0u);
    for (unsigned p = 0; p < d; ++p)
      img[b * d + p] = b * d + g[p];
    return Perm(std::move(img));
  };
  auto block_perm = [&](std::vector<unsigned> const &sigma) {
    std::vector<std::uint32_t> img(deg);
    for (unsigned b = 0; b < m; ++b)
      for (unsigned p = 0; p < d; ++p)
        img[b * d + p] = sigma[b] * d + p;
    return Perm(std::move(img));
  };

  std::vector<Perm> base_gens;
  for (unsigned b = 0; b < m; ++b)
    for (auto const &g : k.generators())
      base_gens.push_back(shift(g, b));

  std::vector<Perm> gens;
  for (auto const &g : k.generators())
    gens.push_back(shift(g, 0));
  if (m > 1) {
    std::vector<unsigned> swap(m), cyc(m);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (unsigned b = 0; b < m; ++b)
      cyc[b] = (b + 1) % m;
    gens.push_back(block_perm(swap));
    if (m > 2)
      gens.push_back(block_perm(cyc));
  }

  PermGroup wreath(deg, gens, k.limits());
  PermGroup base(deg, base_gens, k.limits());

  std::vector<Cyclotomic> values;
  for (auto const &c : wreath.classes()) {
    Perm const &x = c.representative;
    std::vector<bool> seen(m, false);
    Cyclotomic v(1);
    for (unsigned b = 0; b < m; ++b) {
      if (seen[b])
        continue;
      unsigned len = 0;
      unsigned cur = b;
      do {
        seen[cur] = true;
        cur = x[cur * d] / d;
        ++len;
      } while (cur != b);
      v *= theta.at(block_component(x.pow(len), b, d));
    }
    values.push_back(v);
  }

  WreathExtension out{wreath, base, ClassFunction(wreath, std::move(values), CharKind::Character)};
  return out;
}

} // namespace hcw
