#include "hcw/class_function.hpp"
#include "hcw/error.hpp"

namespace hcw
{

namespace
{

unsigned conductor_of(PermGroup const &g)
{ return static_cast<unsigned>(g.exponent()); }

} // namespace

ClassFunction::ClassFunction(PermGroup group, std::vector<Cyclotomic> values, CharKind kind)
: group_(std::move(group)), values_(std::move(values)), kind_(kind)
{
  if (values_.size() != group_.num_classes())
    throw ValidationError("class function needs one value per conjugacy class");

  unsigned const n = conductor_of(group_);
  for (auto &v : values_)
    if (v.conductor() != n)
      v = v.in_conductor(n);
}

ClassFunction ClassFunction::zero(PermGroup const &group)
{ return ClassFunction(group, std::vector<Cyclotomic>(group.num_classes(), Cyclotomic(0))); }

ClassFunction ClassFunction::trivial(PermGroup const &group)
{
  return ClassFunction(group, std::vector<Cyclotomic>(group.num_classes(), Cyclotomic(1)),
                       CharKind::Irreducible);
}

ClassFunction ClassFunction::regular(PermGroup const &group)
{
  std::vector<Cyclotomic> v(group.num_classes(), Cyclotomic(0));
  v[0] = Cyclotomic(Rational(group.order()));
  return ClassFunction(group, std::move(v), CharKind::Character);
}

ClassFunction ClassFunction::with_kind(CharKind kind) const
{
  ClassFunction r = *this;
  r.kind_ = kind;
  return r;
}

bool ClassFunction::is_zero() const
{
  for (auto const &v : values_)
    if (!v.is_zero())
      return false;
  return true;
}

void ClassFunction::require_same_group(ClassFunction const &rhs) const
{
  if (!group_.same_object(rhs.group_))
    throw ValidationError("class functions live on different groups");
}

ClassFunction ClassFunction::operator-() const
{
  ClassFunction r = *this;
  for (auto &v : r.values_)
    v = -v;
  r.kind_ = CharKind::Virtual;
  return r;
}

ClassFunction &ClassFunction::operator+=(ClassFunction const &rhs)
{
  require_same_group(rhs);
  for (std::size_t k = 0; k < values_.size(); ++k)
    values_[k] += rhs.values_[k];
  kind_ = (kind_ != CharKind::Virtual && rhs.kind_ != CharKind::Virtual)
            ? CharKind::Character
            : CharKind::Virtual;
  return *this;
}

ClassFunction &ClassFunction::operator-=(ClassFunction const &rhs)
{
  require_same_group(rhs);
  for (std::size_t k = 0; k < values_.size(); ++k)
    values_[k] -= rhs.values_[k];
  kind_ = CharKind::Virtual;
  return *this;
}

ClassFunction &ClassFunction::operator*=(Cyclotomic const &scalar)
{
  for (auto &v : values_)
    v *= scalar;
  auto const r = scalar.rational_value();
  bool const nonneg_int = r && r->get_den() == 1 && sgn(*r) > 0;
  if (!(nonneg_int && kind_ != CharKind::Virtual))
    kind_ = CharKind::Virtual;
  else if (*r != 1)
    kind_ = CharKind::Character;

  unsigned const n = conductor_of(group_);
  for (auto &v : values_)
    if (v.conductor() != n)
      v = v.in_conductor(n);
  return *this;
}

ClassFunction ClassFunction::tensor(ClassFunction const &rhs) const
{
  require_same_group(rhs);
  ClassFunction r = *this;
  for (std::size_t k = 0; k < values_.size(); ++k)
    r.values_[k] *= rhs.values_[k];
  r.kind_ = (kind_ != CharKind::Virtual && rhs.kind_ != CharKind::Virtual)
              ? CharKind::Character
              : CharKind::Virtual;
  return r;
}

ClassFunction ClassFunction::conj() const
{
  ClassFunction r = *this;
  for (auto &v : r.values_)
    v = v.conj();
  return r;
}

bool operator==(ClassFunction const &a, ClassFunction const &b)
{ return a.group_.same_object(b.group_) && a.values_ == b.values_; }

Cyclotomic inner_product(ClassFunction const &f, ClassFunction const &h)
{
  if (!f.group().same_object(h.group()))
    throw ValidationError("inner product of class functions on different groups");

  auto const &cls = f.group().classes();
  Cyclotomic sum(0);
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (f[k].is_zero() || h[k].is_zero())
      continue;
    sum += Cyclotomic(Rational(cls[k].size)) * f[k] * h[k].conj();
  }
  return sum * Cyclotomic(Rational(1, 1) / Rational(f.group().order()));
}

ClassFunction induce(ClassFunction const &f, PermGroup const &g)
{
  PermGroup const &h = f.group();
  if (!h.is_subgroup_of(g))
    throw ValidationError("induce: not a subgroup");

  std::vector<Cyclotomic> values(g.num_classes(), Cyclotomic(0));
  auto const &hcls = h.classes();
  for (std::size_t c = 0; c < hcls.size(); ++c) {
    if (f[c].is_zero())
      continue;
    std::size_t const k = g.class_of(hcls[c].representative);
    values[k] += f[c] * Cyclotomic(Rational(1) / Rational(h.centralizer_order(c)));
  }
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] *= Cyclotomic(Rational(g.centralizer_order(k)));

  CharKind const kind = f.kind() == CharKind::Virtual ? CharKind::Virtual : CharKind::Character;
  return ClassFunction(g, std::move(values), kind);
}

ClassFunction restrict(ClassFunction const &f, PermGroup const &h)
{
  PermGroup const &g = f.group();
  if (!h.is_subgroup_of(g))
    throw ValidationError("restrict: not a subgroup");

  std::vector<Cyclotomic> values;
  for (auto const &c : h.classes())
    values.push_back(f[g.class_of(c.representative)]);

  CharKind const kind = f.kind() == CharKind::Virtual ? CharKind::Virtual : CharKind::Character;
  return ClassFunction(h, std::move(values), kind);
}

ClassFunction inflate(ClassFunction const &f, GroupHom const &hom)
{
  if (!f.group().same_object(hom.target()) && !f.group().equals(hom.target()))
    throw ValidationError("inflate: class function not on the homomorphism target");

  std::vector<Cyclotomic> values;
  for (auto const &c : hom.source().classes())
    values.push_back(f.at(hom(c.representative)));
  return ClassFunction(hom.source(), std::move(values), f.kind());
}

ClassFunction conjugate(ClassFunction const &f, Perm const &g)
{
  PermGroup const &h = f.group();
  std::vector<Cyclotomic> values;
  for (auto const &c : h.classes()) {
    Perm const y = c.representative.conjugate_by(g);
    if (!h.contains(y))
      throw ValidationError("conjugate: element does not normalize the group");
    values.push_back(f.at(y));
  }
  return ClassFunction(h, std::move(values), f.kind());
}

} // namespace hcw
