#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "hcw/coxeter.hpp"
#include "hcw/error.hpp"

namespace hcw
{

namespace
{

struct TypeLabel
{
  char family;
  unsigned rank;
  unsigned m; // dihedral order parameter
};

TypeLabel parse_type(std::string const &type)
{
  static std::regex const plain("^([ABDFG])([0-9]+)$");
  static std::regex const dihedral("^I2\\(([0-9]+)\\)$");
  std::smatch match;
  if (std::regex_match(type, match, plain)) {
    char const f = match[1].str()[0];
    unsigned const n = static_cast<unsigned>(std::stoul(match[2].str()));
    bool ok = (f == 'A' && n >= 1 && n <= 4) || (f == 'B' && n >= 2 && n <= 3) ||
              (f == 'D' && n == 4) || (f == 'G' && n == 2) || (f == 'F' && n == 4);
    if (ok)
      return {f, n, f == 'G' ? 6u : 0u};
  } else if (std::regex_match(type, match, dihedral)) {
    unsigned const m = static_cast<unsigned>(std::stoul(match[1].str()));
    if (m >= 3 && m <= 12)
      return {'I', 2, m};
  }
  throw ValidationError("unsupported Coxeter type '" + type + "'");
}

Perm from_images(std::vector<std::uint32_t> img)
{ return Perm(std::move(img)); }

// Signed permutations on points 0..n-1 (+e_i) and n..2n-1 (-e_i).
unsigned neg(unsigned p, unsigned n)
{ return p < n ? p + n : p - n; }

Perm signed_swap(unsigned i, unsigned j, unsigned n)
{
  std::vector<std::uint32_t> img(2 * n);
  for (unsigned p = 0; p < 2 * n; ++p)
    img[p] = p;
  img[i] = j;
  img[j] = i;
  img[neg(i, n)] = neg(j, n);
  img[neg(j, n)] = neg(i, n);
  return from_images(std::move(img));
}

// e_i <-> -e_j
Perm signed_anti_swap(unsigned i, unsigned j, unsigned n)
{
  std::vector<std::uint32_t> img(2 * n);
  for (unsigned p = 0; p < 2 * n; ++p)
    img[p] = p;
  img[i] = neg(j, n);
  img[neg(j, n)] = i;
  img[j] = neg(i, n);
  img[neg(i, n)] = j;
  return from_images(std::move(img));
}

Perm sign_change(unsigned i, unsigned n)
{
  std::vector<std::uint32_t> img(2 * n);
  for (unsigned p = 0; p < 2 * n; ++p)
    img[p] = p;
  img[i] = neg(i, n);
  img[neg(i, n)] = i;
  return from_images(std::move(img));
}

Cyclotomic signed_trace(Perm const &x, unsigned n)
{
  long t = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (x[i] == i)
      ++t;
    else if (x[i] == neg(i, n))
      --t;
  }
  return Cyclotomic(t);
}

using Vec4 = std::array<int, 4>;

int dot(Vec4 const &a, Vec4 const &b)
{ return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

// Roots of F4 in doubled coordinates, sorted.
std::vector<Vec4> f4_roots()
{
  std::set<Vec4> roots;
  for (int i = 0; i < 4; ++i)
    for (int s : {-2, 2}) {
      Vec4 v{0, 0, 0, 0};
      v[i] = s;
      roots.insert(v);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int s : {-2, 2})
        for (int t : {-2, 2}) {
          Vec4 v{0, 0, 0, 0};
          v[i] = s;
          v[j] = t;
          roots.insert(v);
        }
  for (int mask = 0; mask < 16; ++mask) {
    Vec4 v;
    for (int i = 0; i < 4; ++i)
      v[i] = (mask >> i) & 1 ? -1 : 1;
    roots.insert(v);
  }
  return {roots.begin(), roots.end()};
}

Perm root_reflection(std::vector<Vec4> const &roots, Vec4 const &a)
{
  std::map<Vec4, std::uint32_t> index;
  for (std::size_t i = 0; i < roots.size(); ++i)
    index[roots[i]] = static_cast<std::uint32_t>(i);
  int const aa = dot(a, a);
  std::vector<std::uint32_t> img(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int const c = 2 * dot(roots[i], a);
    if (c % aa != 0)
      throw InvariantViolation("F4 reflection is not integral");
    Vec4 w = roots[i];
    for (int k = 0; k < 4; ++k)
      w[k] -= (c / aa) * a[k];
    img[i] = index.at(w);
  }
  return from_images(std::move(img));
}

} // namespace

std::uint64_t coxeter_order(std::string const &type)
{
  auto const t = parse_type(type);
  std::uint64_t f = 1;
  switch (t.family) {
  case 'A':
    for (unsigned i = 2; i <= t.rank + 1; ++i)
      f *= i;
    return f;
  case 'B':
    for (unsigned i = 2; i <= t.rank; ++i)
      f *= i;
    return f << t.rank;
  case 'D':
    return 192;
  case 'F':
    return 1152;
  default:
    return 2 * t.m;
  }
}

CoxeterRealization coxeter_group(std::string const &type)
{
  auto const t = parse_type(type);
  CoxeterRealization w;
  w.type = type;
  w.rank = t.rank;

  unsigned degree = 0;
  std::function<Cyclotomic(Perm const &)> trace;

  switch (t.family) {
  case 'A': {
    degree = t.rank + 1;
    for (unsigned i = 0; i < t.rank; ++i) {
      std::vector<std::uint32_t> img(degree);
      for (unsigned p = 0; p < degree; ++p)
        img[p] = p;
      std::swap(img[i], img[i + 1]);
      w.simple.push_back(from_images(std::move(img)));
    }
    trace = [](Perm const &x) {
      long fixed = 0;
      for (unsigned p = 0; p < x.degree(); ++p)
        fixed += x[p] == p;
      return Cyclotomic(fixed - 1);
    };
    break;
  }
  case 'B':
  case 'D': {
    unsigned const n = t.rank;
    degree = 2 * n;
    for (unsigned i = 0; i + 1 < n; ++i)
      w.simple.push_back(signed_swap(i, i + 1, n));
    w.simple.push_back(t.family == 'B' ? sign_change(n - 1, n) : signed_anti_swap(n - 2, n - 1, n));
    trace = [n](Perm const &x) { return signed_trace(x, n); };
    break;
  }
  case 'F': {
    auto const roots = f4_roots();
    degree = static_cast<unsigned>(roots.size());
    for (Vec4 const &a : {Vec4{0, 2, -2, 0}, Vec4{0, 0, 2, -2}, Vec4{0, 0, 0, 2}, Vec4{1, -1, -1, -1}})
      w.simple.push_back(root_reflection(roots, a));
    std::map<Vec4, std::size_t> index;
    for (std::size_t i = 0; i < roots.size(); ++i)
      index[roots[i]] = i;
    std::vector<std::size_t> unit(4);
    for (int i = 0; i < 4; ++i) {
      Vec4 e{0, 0, 0, 0};
      e[i] = 2;
      unit[i] = index.at(e);
    }
    trace = [roots, unit](Perm const &x) {
      long t2 = 0;
      for (int i = 0; i < 4; ++i)
        t2 += roots[x[static_cast<unsigned>(unit[i])]][i];
      return Cyclotomic(t2 / 2);
    };
    break;
  }
  default: {
    unsigned const m = t.m;
    degree = m;
    std::vector<std::uint32_t> s1(m), s2(m);
    for (unsigned k = 0; k < m; ++k) {
      s1[k] = (m - k) % m;
      s2[k] = (m + 1 - k) % m;
    }
    w.simple.push_back(from_images(std::move(s1)));
    w.simple.push_back(from_images(std::move(s2)));
    trace = [m](Perm const &x) {
      // rotations are k -> k + j, reflections reverse orientation
      unsigned const j = x[0];
      if (x[1] != (j + 1) % m)
        return Cyclotomic(0);
      return Cyclotomic::zeta(m, j) + Cyclotomic::zeta(m, -static_cast<long>(j));
    };
    break;
  }
  }

  w.group = PermGroup(degree, w.simple);
  w.group.set_name(type);
  if (w.group.order() != coxeter_order(type))
    throw InvariantViolation("Coxeter group " + type + " has the wrong order");

  std::vector<Cyclotomic> values;
  for (auto const &c : w.group.classes())
    values.push_back(trace(c.representative));
  w.reflection = ClassFunction(w.group, std::move(values), CharKind::Character);

  for (unsigned mask = 0; mask + 1 < (1u << w.rank); ++mask) {
    StandardParabolic sp;
    std::vector<Perm> gens;
    for (unsigned i = 0; i < w.rank; ++i)
      if (mask & (1u << i)) {
        sp.nodes.push_back(i);
        gens.push_back(w.simple[i]);
      }
    sp.group = PermGroup(degree, gens);
    w.parabolics.push_back(std::move(sp));
  }

  w.table = std::make_shared<CharTable const>(w.group);
  return w;
}

std::vector<UnseparatedPair> separation_report(CoxeterRealization const &w)
{
  CharTable const &t = *w.table;
  std::set<std::size_t> meet;
  for (auto const &sp : w.parabolics)
    for (auto const &c : sp.group.classes())
      meet.insert(w.group.class_of(c.representative));

  std::vector<UnseparatedPair> out;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (t[a].degree() != t[b].degree())
        continue;
      bool same = true;
      for (auto k : meet)
        if (t[a][k] != t[b][k]) {
          same = false;
          break;
        }
      if (same)
        out.push_back({a, b});
    }
  return out;
}

bool verify_separation(CoxeterRealization const &w, std::vector<UnseparatedPair> const &report)
{
  CharTable const &t = *w.table;
  std::set<std::pair<std::size_t, std::size_t>> reported;
  for (auto const &p : report)
    reported.insert({p.first, p.second});

  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      bool separated = t[a].degree() != t[b].degree();
      for (auto const &sp : w.parabolics) {
        if (separated)
          break;
        if (restrict(t[a], sp.group) != restrict(t[b], sp.group))
          separated = true;
      }
      if (separated == (reported.count({a, b}) > 0))
        return false;
    }
  return true;
}

unsigned num_reflections(CoxeterRealization const &w)
{
  unsigned n = 0;
  for (std::size_t k = 0; k < w.group.num_classes(); ++k) {
    auto const &c = w.group.classes()[k];
    // reflections: involutions with reflection-character value rank - 2
    if (c.order == 2 && w.reflection[k] == Cyclotomic(static_cast<long>(w.rank) - 2))
      n += static_cast<unsigned>(c.size);
  }
  return n;
}

std::vector<ClassFunction> symmetric_powers(CoxeterRealization const &w, unsigned kmax)
{
  PermGroup const &g = w.group;
  std::size_t const r = g.num_classes();

  std::vector<ClassFunction> power_sums; // p_i(g) = chi_V(g^i)
  for (unsigned i = 1; i <= kmax; ++i) {
    std::vector<Cyclotomic> v;
    for (std::size_t k = 0; k < r; ++k)
      v.push_back(w.reflection[g.power_class(k, i)]);
    power_sums.emplace_back(g, std::move(v));
  }

  std::vector<ClassFunction> h{ClassFunction::trivial(g)};
  for (unsigned k = 1; k <= kmax; ++k) {
    ClassFunction acc = ClassFunction::zero(g);
    for (unsigned i = 1; i <= k; ++i)
      acc += power_sums[i - 1].tensor(h[k - i]);
    acc *= Cyclotomic(Rational(1, k));
    h.push_back(acc.with_kind(CharKind::Character));
  }
  return h;
}

std::vector<unsigned> b_invariants(CoxeterRealization const &w)
{
  CharTable const &t = *w.table;
  unsigned const n = num_reflections(w);
  auto const h = symmetric_powers(w, n);

  std::vector<unsigned> out(t.size(), 0);
  std::vector<bool> found(t.size(), false);
  for (unsigned k = 0; k <= n; ++k) {
    auto const mult = t.decompose(h[k]);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto const v = mult[i].rational_value();
      if (!v || v->get_den() != 1 || sgn(*v) < 0)
        throw InvariantViolation("symmetric power of the reflection character is not a character");
      if (!found[i] && sgn(*v) > 0) {
        found[i] = true;
        out[i] = k;
      }
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!found[i])
      throw InvariantViolation("irreducible without b-invariant up to the number of reflections");
  return out;
}

std::vector<std::string> character_labels(CoxeterRealization const &w)
{
  auto const b = b_invariants(w);
  auto const d = w.table->degrees();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    out.push_back("phi_{" + std::to_string(d[i]) + "," + std::to_string(b[i]) + "}");
  return out;
}

std::string separation_tsv(CoxeterRealization const &w, std::vector<UnseparatedPair> const &report)
{
  auto const b = b_invariants(w);
  auto const d = w.table->degrees();
  auto const labels = character_labels(w);
  std::ostringstream os;
  os << "# type\t" << w.type << "\n";
  os << "# order\t" << w.group.order() << "\n";
  os << "# classes\t" << w.group.num_classes() << "\n";
  os << "# unseparated\t" << report.size() << "\n";
  os << "# i\tj\tdegree\tb_i\tb_j\tlabel_i\tlabel_j\n";
  for (auto const &p : report)
    os << p.first << "\t" << p.second << "\t" << d[p.first] << "\t" << b[p.first] << "\t"
       << b[p.second] << "\t" << labels[p.first] << "\t" << labels[p.second] << "\n";
  return os.str();
}

} // namespace hcw
