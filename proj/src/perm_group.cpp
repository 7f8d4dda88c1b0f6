#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "hcw/error.hpp"
#include "hcw/perm_group.hpp"

namespace hcw
{

namespace
{

struct Level
{
  unsigned base_point;
  std::vector<Perm> gens;
  std::vector<int> orbit_pos; // index into orbit/transversal, -1 if absent
  std::vector<unsigned> orbit;
  std::vector<Perm> transversal; // transversal[i] maps base_point to orbit[i]

  void rebuild(unsigned degree)
  {
    orbit_pos.assign(degree, -1);
    orbit.assign(1, base_point);
    transversal.assign(1, Perm(degree));
    orbit_pos[base_point] = 0;

    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const &s : gens) {
        unsigned const img = s[orbit[i]];
        if (orbit_pos[img] >= 0)
          continue;
        orbit_pos[img] = static_cast<int>(orbit.size());
        orbit.push_back(img);
        transversal.push_back(transversal[i] * s);
      }
    }
  }
};

} // namespace

struct PermGroup::Impl
{
  unsigned degree = 0;
  std::vector<Perm> generators;
  GroupLimits limits;
  std::string name;

  std::vector<Level> chain;
  std::vector<unsigned> base;

  std::once_flag elements_once;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;

  std::once_flag classes_once;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of_element;
  std::vector<std::vector<std::size_t>> class_members;

  // Sift g through levels [start, chain.size()); returns the residue and the
  // level at which sifting stopped (chain.size() on success).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t start) const
  {
    for (std::size_t i = start; i < chain.size(); ++i) {
      auto const &lvl = chain[i];
      unsigned const beta = g[lvl.base_point];
      int const pos = lvl.orbit_pos[beta];
      if (pos < 0)
        return {std::move(g), i};
      g *= lvl.transversal[pos].inverse();
    }
    return {std::move(g), chain.size()};
  }

  void add_level(unsigned point)
  {
    Level lvl;
    lvl.base_point = point;
    chain.push_back(std::move(lvl));
    base.push_back(point);
  }

  bool fixes_base_prefix(Perm const &p, std::size_t len) const
  {
    for (std::size_t i = 0; i < len; ++i)
      if (p[base[i]] != base[i])
        return false;
    return true;
  }

  // Deterministic Schreier-Sims.
  void build_chain()
  {
    std::vector<Perm> strong;
    for (auto const &g : generators)
      if (!g.is_identity())
        strong.push_back(g);

    for (auto const &s : strong)
      if (fixes_base_prefix(s, base.size()))
        add_level(s.first_moved_point());

    for (std::size_t i = 0; i < chain.size(); ++i) {
      for (auto const &s : strong)
        if (fixes_base_prefix(s, i))
          chain[i].gens.push_back(s);
      chain[i].rebuild(degree);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      auto &lvl = chain[i];

      for (std::size_t o = 0; !restarted && o < lvl.orbit.size(); ++o) {
        for (std::size_t si = 0; si < lvl.gens.size(); ++si) {
          Perm const &s = lvl.gens[si];
          unsigned const img = s[lvl.orbit[o]];
          Perm h = lvl.transversal[o] * s;
          h *= lvl.transversal[lvl.orbit_pos[img]].inverse();
          if (h.is_identity())
            continue;

          auto [residue, j] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
          if (j == chain.size() && residue.is_identity())
            continue;

          if (j == chain.size())
            add_level(residue.first_moved_point());

          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            chain[l].gens.push_back(residue);
            chain[l].rebuild(degree);
          }
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
      }

      if (!restarted)
        --i;
    }
  }

  std::uint64_t order() const
  {
    std::uint64_t o = 1;
    for (auto const &lvl : chain) {
      std::uint64_t const len = lvl.orbit.size();
      if (o > UINT64_MAX / len)
        throw CapacityError("group order exceeds 64 bits");
      o *= len;
    }
    return o;
  }

  void enumerate()
  {
    std::uint64_t const n = order();
    if (n > limits.max_order)
      throw CapacityError("group order " + std::to_string(n) +
                          " exceeds the enumeration bound " +
                          std::to_string(limits.max_order));

    elements.assign(1, Perm(degree));
    for (std::size_t l = chain.size(); l-- > 0;) {
      std::vector<Perm> next;
      next.reserve(elements.size() * chain[l].transversal.size());
      for (auto const &x : elements)
        for (auto const &u : chain[l].transversal)
          next.push_back(x * u);
      elements = std::move(next);
    }

    index.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
      index.emplace(elements[i], i);
    if (index.size() != elements.size())
      throw InvariantViolation("stabilizer chain produced duplicate elements");
  }

  void compute_classes()
  {
    std::call_once(elements_once, [this] { enumerate(); });

    std::size_t const n = elements.size();
    std::vector<std::size_t> raw_class(n, SIZE_MAX);
    std::vector<std::vector<std::size_t>> members;

    std::vector<Perm> inv_gens;
    for (auto const &g : generators)
      inv_gens.push_back(g.inverse());

    for (std::size_t start = 0; start < n; ++start) {
      if (raw_class[start] != SIZE_MAX)
        continue;
      std::size_t const id = members.size();
      if (id >= limits.max_classes)
        throw CapacityError("number of conjugacy classes exceeds " +
                            std::to_string(limits.max_classes));

      members.emplace_back(1, start);
      raw_class[start] = id;
      for (std::size_t k = 0; k < members[id].size(); ++k) {
        Perm const &x = elements[members[id][k]];
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
          Perm const y = inv_gens[gi] * x * generators[gi];
          std::size_t const yi = index.at(y);
          if (raw_class[yi] == SIZE_MAX) {
            raw_class[yi] = id;
            members[id].push_back(yi);
          }
        }
      }
    }

    struct Raw
    {
      std::size_t id;
      Perm rep;
      std::size_t size;
      unsigned long order;
    };
    std::vector<Raw> raw;
    for (std::size_t id = 0; id < members.size(); ++id) {
      std::size_t best = members[id][0];
      for (auto m : members[id])
        if (elements[m] < elements[best])
          best = m;
      raw.push_back({id, elements[best], members[id].size(), elements[best].order()});
    }

    std::sort(raw.begin(), raw.end(), [](Raw const &a, Raw const &b) {
      if (a.order != b.order)
        return a.order < b.order;
      if (a.size != b.size)
        return a.size < b.size;
      return a.rep < b.rep;
    });

    std::vector<std::size_t> remap(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      remap[raw[k].id] = k;
      classes.push_back({raw[k].rep, raw[k].size, raw[k].order});
    }

    class_of_element.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      class_of_element[i] = remap[raw_class[i]];

    class_members.assign(raw.size(), {});
    for (std::size_t i = 0; i < n; ++i)
      class_members[class_of_element[i]].push_back(i);
  }
};

PermGroup::PermGroup() : PermGroup(0, {})
{}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators, GroupLimits limits)
: impl_(std::make_shared<Impl>())
{
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw ValidationError("generator " + g.to_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " +
                            std::to_string(degree));

  impl_->degree = degree;
  impl_->generators = std::move(generators);
  impl_->limits = limits;
  impl_->build_chain();
}

PermGroup PermGroup::generated_by(unsigned degree, std::vector<Perm> const &elements,
                                  GroupLimits limits)
{
  std::vector<Perm> gens;
  PermGroup g(degree, {}, limits);
  for (auto const &x : elements) {
    if (g.contains(x))
      continue;
    gens.push_back(x);
    g = PermGroup(degree, gens, limits);
  }
  return g;
}

unsigned PermGroup::degree() const
{ return impl_->degree; }

std::vector<Perm> const &PermGroup::generators() const
{ return impl_->generators; }

GroupLimits const &PermGroup::limits() const
{ return impl_->limits; }

std::string const &PermGroup::name() const
{ return impl_->name; }

PermGroup &PermGroup::set_name(std::string name)
{
  impl_->name = std::move(name);
  return *this;
}

std::vector<unsigned> const &PermGroup::base() const
{ return impl_->base; }

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const
{
  std::vector<std::size_t> out;
  for (auto const &lvl : impl_->chain)
    out.push_back(lvl.orbit.size());
  return out;
}

std::uint64_t PermGroup::order() const
{ return impl_->order(); }

bool PermGroup::contains(Perm const &p) const
{
  if (p.degree() != degree())
    return false;
  auto [residue, level] = impl_->sift(p, 0);
  return level == impl_->chain.size() && residue.is_identity();
}

std::vector<Perm> const &PermGroup::elements() const
{
  std::call_once(impl_->elements_once, [this] { impl_->enumerate(); });
  return impl_->elements;
}

std::size_t PermGroup::element_index(Perm const &p) const
{
  elements();
  auto it = impl_->index.find(p);
  if (it == impl_->index.end())
    throw ValidationError("permutation " + p.to_string() + " is not a group element");
  return it->second;
}

std::vector<ConjugacyClass> const &PermGroup::classes() const
{
  std::call_once(impl_->classes_once, [this] { impl_->compute_classes(); });
  return impl_->classes;
}

std::size_t PermGroup::class_of_element(std::size_t element_idx) const
{
  classes();
  return impl_->class_of_element.at(element_idx);
}

std::size_t PermGroup::class_of(Perm const &p) const
{ return class_of_element(element_index(p)); }

std::size_t PermGroup::inverse_class(std::size_t k) const
{ return class_of(classes()[k].representative.inverse()); }

std::size_t PermGroup::power_class(std::size_t k, long e) const
{ return class_of(classes()[k].representative.pow(e)); }

std::vector<std::size_t> const &PermGroup::class_elements(std::size_t k) const
{
  classes();
  return impl_->class_members.at(k);
}

unsigned long PermGroup::exponent() const
{
  unsigned long e = 1;
  for (auto const &c : classes())
    e = std::lcm(e, c.order);
  return e;
}

bool PermGroup::is_abelian() const
{
  auto const &gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool PermGroup::is_subgroup_of(PermGroup const &g) const
{
  if (degree() != g.degree())
    return false;
  for (auto const &x : generators())
    if (!g.contains(x))
      return false;
  return true;
}

bool PermGroup::is_normal_in(PermGroup const &g) const
{
  if (!is_subgroup_of(g))
    return false;
  for (auto const &x : g.generators())
    for (auto const &h : generators())
      if (!contains(h.conjugate_by(x)))
        return false;
  return true;
}

PermGroup PermGroup::conjugate_by(Perm const &g) const
{
  std::vector<Perm> gens;
  for (auto const &h : generators())
    gens.push_back(h.conjugate_by(g));
  return PermGroup(degree(), std::move(gens), limits());
}

bool PermGroup::equals(PermGroup const &other) const
{ return order() == other.order() && is_subgroup_of(other); }

PermGroup intersection(PermGroup const &a, PermGroup const &b)
{
  PermGroup const &small = a.order() <= b.order() ? a : b;
  PermGroup const &large = a.order() <= b.order() ? b : a;

  std::vector<Perm> common;
  for (auto const &x : small.elements())
    if (large.contains(x))
      common.push_back(x);
  return PermGroup::generated_by(a.degree(), common, a.limits());
}

PermGroup symmetric_group(unsigned n)
{
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> t(n), c(n);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (unsigned i = 0; i < n; ++i)
      c[i] = (i + 1) % n;
    gens.emplace_back(t);
    if (n > 2)
      gens.emplace_back(c);
  }
  return PermGroup(n, gens);
}

PermGroup cyclic_group(unsigned n)
{
  std::vector<std::uint32_t> c(n);
  for (unsigned i = 0; i < n; ++i)
    c[i] = (i + 1) % n;
  return PermGroup(n, n > 1 ? std::vector<Perm>{Perm(c)} : std::vector<Perm>{});
}

PermGroup direct_product(std::vector<PermGroup> const &factors)
{
  unsigned total = 0;
  for (auto const &f : factors)
    total += f.degree();

  std::vector<Perm> gens;
  unsigned offset = 0;
  for (auto const &f : factors) {
    for (auto const &g : f.generators()) {
      std::vector<std::uint32_t> img(total);
      std::iota(img.begin(), img.end(), 0u);
      for (unsigned i = 0; i < f.degree(); ++i)
        img[offset + i] = offset + g[i];
      gens.emplace_back(img);
    }
    offset += f.degree();
  }
  return PermGroup(total, gens);
}

} // namespace hcw
