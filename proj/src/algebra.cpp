#include <regex>
#include <sstream>

#include "hcw/algebra.hpp"
#include "hcw/error.hpp"
#include "hcw/linalg.hpp"

namespace hcw
{

AlgElement add(AlgElement a, AlgElement const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

AlgElement scale(Cyclotomic const &c, AlgElement a)
{
  for (auto &x : a)
    x *= c;
  return a;
}

bool is_zero(AlgElement const &a)
{
  for (auto const &x : a)
    if (!x.is_zero())
      return false;
  return true;
}

SCAlgebra::SCAlgebra(std::vector<std::string> labels, std::vector<Terms> products, AlgElement unit)
: labels_(std::move(labels)), products_(std::move(products)), unit_(std::move(unit))
{
  std::size_t const n = labels_.size();
  if (products_.size() != n * n || unit_.size() != n)
    throw ValidationError("structure constant table has the wrong shape");
  for (auto const &terms : products_)
    for (auto const &[k, c] : terms)
      if (k >= n)
        throw ValidationError("structure constant index out of range");

  for (std::size_t i = 0; i < n; ++i) {
    auto const b = basis(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b)
      throw InvariantViolation("unit axiom fails for basis element " + labels_[i]);
  }

  std::size_t const stride = n <= 64 ? 1 : n / 16 + 1;
  for (std::size_t i = 0; i < n; i += stride)
    for (std::size_t j = 0; j < n; j += stride)
      for (std::size_t k = 0; k < n; k += stride) {
        auto const bi = basis(i);
        auto const bj = basis(j);
        auto const bk = basis(k);
        if (multiply(multiply(bi, bj), bk) != multiply(bi, multiply(bj, bk)))
          throw InvariantViolation("structure constants are not associative at (" + labels_[i] +
                                   ", " + labels_[j] + ", " + labels_[k] + ")");
      }
}

AlgElement SCAlgebra::basis(std::size_t i) const
{
  AlgElement e = zero();
  e.at(i) = Cyclotomic(1);
  return e;
}

AlgElement SCAlgebra::multiply(AlgElement const &a, AlgElement const &b) const
{
  std::size_t const n = dim();
  AlgElement out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero())
        continue;
      Cyclotomic const ab = a[i] * b[j];
      for (auto const &[k, c] : product(i, j))
        out[k] += ab * c;
    }
  }
  return out;
}

bool SCAlgebra::is_idempotent(AlgElement const &e) const
{ return e.size() == dim() && multiply(e, e) == e; }

std::string SCAlgebra::format(AlgElement const &x) const
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    os << (first ? "" : " + ") << "(" << x[i].to_string() << ")" << labels_[i];
    first = false;
  }
  return first ? "0" : os.str();
}

Cocycle2::Cocycle2(PermGroup group, Fn const &alpha) : group_(std::move(group))
{
  auto const &el = group_.elements();
  std::size_t const n = el.size();
  values_.assign(n, std::vector<Cyclotomic>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      values_[a][b] = alpha(el[a], el[b]);

  std::size_t const id = group_.element_index(group_.identity());
  for (std::size_t a = 0; a < n; ++a)
    if (values_[id][a] != Cyclotomic(1) || values_[a][id] != Cyclotomic(1))
      throw ValidationError("cocycle is not normalized");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t const ab = group_.element_index(el[a] * el[b]);
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t const bc = group_.element_index(el[b] * el[c]);
        if (values_[a][b] * values_[ab][c] != values_[b][c] * values_[a][bc])
          throw ValidationError("cocycle identity fails");
      }
    }
}

Cocycle2 Cocycle2::trivial(PermGroup group)
{ return Cocycle2(std::move(group), [](Perm const &, Perm const &) { return Cyclotomic(1); }); }

SCAlgebra twisted_group_algebra(Cocycle2 const &alpha)
{
  PermGroup const &g = alpha.group();
  auto const &el = g.elements();
  std::size_t const n = el.size();

  std::vector<std::string> labels;
  for (auto const &x : el)
    labels.push_back("[" + x.to_string() + "]");

  std::vector<SCAlgebra::Terms> products(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      products[a * n + b] = {{g.element_index(el[a] * el[b]), alpha(a, b)}};

  AlgElement unit(n, Cyclotomic(0));
  unit[g.element_index(g.identity())] = Cyclotomic(1);
  return SCAlgebra(std::move(labels), std::move(products), std::move(unit));
}

std::vector<AlgElement> center(SCAlgebra const &a)
{
  std::size_t const n = a.dim();
  // sum_k x_k (b_k b_i - b_i b_k) = 0 for every i
  Matrix<Cyclotomic> m;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<AlgElement> comm;
    for (std::size_t k = 0; k < n; ++k) {
      auto const bk = a.basis(k);
      auto const bi = a.basis(i);
      comm.push_back(add(a.multiply(bk, bi), scale(Cyclotomic(-1), a.multiply(bi, bk))));
    }
    for (std::size_t coord = 0; coord < n; ++coord) {
      std::vector<Cyclotomic> row(n);
      for (std::size_t k = 0; k < n; ++k)
        row[k] = comm[k][coord];
      m.push_back(std::move(row));
    }
  }
  return nullspace(std::move(m), n);
}

AlgElement SkewGroupAlgebra::embed(AlgElement const &coeffs) const
{
  AlgElement out = algebra.zero();
  std::size_t const w1 = weyl().element_index(weyl().identity());
  for (std::size_t x = 0; x < coeffs.size(); ++x)
    out[index(x, w1)] = coeffs[x];
  return out;
}

SkewGroupAlgebra skew_group_algebra(PermGroup omega, PermGroup weyl,
                                    std::vector<std::vector<Perm>> action)
{
  if (!omega.is_abelian())
    throw ValidationError("skew group algebra needs an abelian coefficient group");

  auto data = std::make_shared<SemidirectGroup>(std::move(omega), std::move(weyl), std::move(action));
  PermGroup const &om = data->normal();
  PermGroup const &w = data->acting();
  auto const &oel = om.elements();
  auto const &wel = w.elements();
  std::size_t const no = oel.size();
  std::size_t const nw = wel.size();
  auto idx = [nw](std::size_t x, std::size_t v) { return x * nw + v; };

  std::vector<std::string> labels;
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t v = 0; v < nw; ++v)
      labels.push_back("[" + oel[x].to_string() + "][" + wel[v].to_string() + "]");

  // ([x1][w1])([x2][w2]) = [x1 w1(x2)][w1 w2]
  std::size_t const n = no * nw;
  std::vector<SCAlgebra::Terms> products(n * n);
  for (std::size_t x1 = 0; x1 < no; ++x1)
    for (std::size_t v1 = 0; v1 < nw; ++v1)
      for (std::size_t x2 = 0; x2 < no; ++x2) {
        std::size_t const x = om.element_index(oel[x1] * data->act(wel[v1], oel[x2]));
        for (std::size_t v2 = 0; v2 < nw; ++v2) {
          std::size_t const v = w.element_index(wel[v1] * wel[v2]);
          products[idx(x1, v1) * n + idx(x2, v2)] = {{idx(x, v), Cyclotomic(1)}};
        }
      }

  AlgElement unit(n, Cyclotomic(0));
  unit[idx(om.element_index(om.identity()), w.element_index(w.identity()))] = Cyclotomic(1);
  SCAlgebra alg(std::move(labels), std::move(products), std::move(unit));
  return {std::move(data), std::move(alg)};
}

std::vector<AlgElement> central_idempotents_abelian(CharTable const &omega_table)
{
  PermGroup const &om = omega_table.group();
  if (!om.is_abelian())
    throw ValidationError("central idempotents by Fourier inversion need an abelian group");
  auto const &el = om.elements();
  Cyclotomic const inv_order(Rational(1) / Rational(static_cast<unsigned long>(el.size())));

  std::vector<AlgElement> out;
  for (auto const &eta : omega_table.rows()) {
    AlgElement e;
    for (auto const &x : el)
      e.push_back(eta.at(x).conj() * inv_order);
    out.push_back(std::move(e));
  }
  return out;
}

namespace
{

std::pair<Matrix<Cyclotomic>, std::vector<std::size_t>> reduced_span(std::vector<AlgElement> vectors)
{
  Matrix<Cyclotomic> m(std::move(vectors));
  auto pivots = row_reduce(m);
  return {std::move(m), std::move(pivots)};
}

} // namespace

Corner corner(SCAlgebra const &a, AlgElement const &e)
{
  if (!a.is_idempotent(e))
    throw ValidationError("corner needs an idempotent");

  std::vector<AlgElement> spans;
  for (std::size_t i = 0; i < a.dim(); ++i)
    spans.push_back(a.multiply(a.multiply(e, a.basis(i)), e));
  auto [basis, pivots] = reduced_span(std::move(spans));
  std::size_t const d = basis.size();

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i)
    labels.push_back("c" + std::to_string(i));

  // Reduced rows have an identity block at the pivot columns, so the
  // coordinates of an element of eAe are its entries there.
  auto coords = [&](AlgElement const &x) {
    AlgElement c(d);
    for (std::size_t r = 0; r < d; ++r)
      c[r] = x[pivots[r]];
    return c;
  };

  std::vector<SCAlgebra::Terms> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto const c = coords(a.multiply(basis[i], basis[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero())
          products[i * d + j].emplace_back(k, c[k]);
    }

  Corner out{SCAlgebra(std::move(labels), std::move(products), coords(e)), basis};
  return out;
}

std::size_t peirce_dimension(SCAlgebra const &a, AlgElement const &e, AlgElement const &f)
{
  std::vector<AlgElement> spans;
  for (std::size_t i = 0; i < a.dim(); ++i)
    spans.push_back(a.multiply(a.multiply(e, a.basis(i)), f));
  return rank(Matrix<Cyclotomic>(std::move(spans)));
}

CornerReport corner_report(SkewGroupAlgebra const &a, CharTable const &omega_table, std::size_t eta)
{
  if (!omega_table.group().same_object(a.omega()))
    throw ValidationError("character table is not for the coefficient group");
  if (eta >= omega_table.size())
    throw ValidationError("character index out of range");

  PermGroup const &om = a.omega();
  PermGroup const &w = a.weyl();
  ClassFunction const &chi = omega_table[eta];
  SCAlgebra const &alg = a.algebra;

  CornerReport rep;
  rep.eta = eta;

  auto const e = a.embed(central_idempotents_abelian(omega_table)[eta]);
  auto const c = corner(alg, e);
  rep.corner_dim = c.basis.size();

  for (auto const &v : w.elements()) {
    bool fixed = true;
    for (auto const &x : om.elements())
      if (chi.at(a.data->act(v, x)) != chi.at(x)) {
        fixed = false;
        break;
      }
    if (fixed)
      rep.stabilizer.push_back(v);
  }
  rep.stabilizer_order = rep.stabilizer.size();

  std::size_t const x1 = om.element_index(om.identity());
  auto image = [&](Perm const &v) { return alg.multiply(e, alg.basis(a.index(x1, w.element_index(v)))); };

  std::vector<AlgElement> images;
  rep.images_in_corner = true;
  for (auto const &v : rep.stabilizer) {
    auto const t = image(v);
    if (alg.multiply(t, e) != t)
      rep.images_in_corner = false;
    images.push_back(t);
  }
  std::size_t const r = rank(Matrix<Cyclotomic>(images));
  rep.independent = r == images.size();
  auto all = c.basis;
  for (auto const &t : images)
    all.push_back(t);
  rep.spans = rank(Matrix<Cyclotomic>(all)) == rep.corner_dim && r == rep.corner_dim;

  rep.group_law = true;
  rep.projective = true;
  for (std::size_t i = 0; i < rep.stabilizer.size(); ++i)
    for (std::size_t j = 0; j < rep.stabilizer.size(); ++j) {
      auto const lhs = alg.multiply(images[i], images[j]);
      auto const rhs = image(rep.stabilizer[i] * rep.stabilizer[j]);
      if (lhs == rhs)
        continue;
      rep.group_law = false;
      // lhs = s rhs for a scalar s?
      std::optional<Cyclotomic> s;
      for (std::size_t k = 0; k < rhs.size() && !s; ++k)
        if (!rhs[k].is_zero())
          s = lhs[k] / rhs[k];
      if (!s || scale(*s, rhs) != lhs)
        rep.projective = false;
    }
  if (rep.group_law)
    rep.projective = false;
  return rep;
}

nlohmann::json CornerReport::to_json() const
{
  std::vector<std::string> stab;
  for (auto const &v : stabilizer)
    stab.push_back(v.to_string());
  return {{"eta", eta},
          {"corner_dim", corner_dim},
          {"stabilizer_order", stabilizer_order},
          {"stabilizer", stab},
          {"images_in_corner", images_in_corner},
          {"independent", independent},
          {"spans", spans},
          {"group_law", group_law},
          {"projective_multiplier", projective},
          {"isomorphism", isomorphism()}};
}

namespace
{

PermGroup named_abelian(std::string const &name)
{
  if (name == "1")
    return PermGroup(1, {});
  static std::regex const factor("C([0-9]+)");
  std::vector<PermGroup> factors;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::smatch m;
    std::string const rest = name.substr(pos);
    if (!std::regex_search(rest, m, factor) || m.position(0) != 0)
      throw ValidationError("cannot parse group name '" + name + "'");
    unsigned const n = static_cast<unsigned>(std::stoul(m[1].str()));
    if (n < 2 || n > 64)
      throw ValidationError("cyclic factor order out of range in '" + name + "'");
    factors.push_back(cyclic_group(n));
    pos += static_cast<std::size_t>(m.length(0));
    if (pos < name.size()) {
      if (name[pos] != 'x')
        throw ValidationError("cannot parse group name '" + name + "'");
      ++pos;
    }
  }
  if (factors.size() == 1)
    return factors.front();
  return direct_product(factors);
}

} // namespace

SkewGroupAlgebra named_skew_algebra(std::string const &omega, std::string const &weyl,
                                    std::string const &action)
{
  PermGroup om = named_abelian(omega);
  PermGroup w = named_abelian(weyl);
  auto const &gens = om.generators();

  std::vector<Perm> images;
  if (action == "invert") {
    for (auto const &g : gens)
      images.push_back(g.inverse());
  } else if (action == "swap") {
    if (gens.size() != 2 || gens[0].order() != gens[1].order())
      throw ValidationError("swap action needs two cyclic factors of equal order");
    images = {gens[1], gens[0]};
  } else if (action == "trivial") {
    images = gens;
  } else {
    throw ValidationError("unknown action '" + action + "'");
  }

  std::vector<std::vector<Perm>> act;
  for (auto const &t : w.generators()) {
    // an element of order 2 acts by the involution, powers are handled by
    // the homomorphism check
    (void)t;
    act.push_back(images);
  }
  return skew_group_algebra(std::move(om), std::move(w), std::move(act));
}

} // namespace hcw
