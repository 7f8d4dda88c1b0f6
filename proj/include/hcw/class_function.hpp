#ifndef HCW_CLASS_FUNCTION_HPP
#define HCW_CLASS_FUNCTION_HPP

#include <vector>

#include "hcw/cyclotomic.hpp"
#include "hcw/group_hom.hpp"
#include "hcw/perm_group.hpp"

namespace hcw
{

enum class CharKind
{
  Virtual,
  Character,
  Irreducible
};

// Function on the conjugacy classes of a fixed group, values stored at the
// group-exponent conductor.
class ClassFunction
{
public:
  ClassFunction() = default;
  ClassFunction(PermGroup group, std::vector<Cyclotomic> values,
                CharKind kind = CharKind::Virtual);

  static ClassFunction zero(PermGroup const &group);
  static ClassFunction trivial(PermGroup const &group);
  static ClassFunction regular(PermGroup const &group);

  PermGroup const &group() const
  { return group_; }

  std::vector<Cyclotomic> const &values() const
  { return values_; }

  Cyclotomic const &operator[](std::size_t k) const
  { return values_[k]; }

  Cyclotomic const &degree() const
  { return values_[0]; }

  Cyclotomic at(Perm const &g) const
  { return values_[group_.class_of(g)]; }

  CharKind kind() const
  { return kind_; }

  ClassFunction with_kind(CharKind kind) const;

  bool is_zero() const;

  ClassFunction operator-() const;
  ClassFunction &operator+=(ClassFunction const &rhs);
  ClassFunction &operator-=(ClassFunction const &rhs);
  ClassFunction &operator*=(Cyclotomic const &scalar);

  friend ClassFunction operator+(ClassFunction lhs, ClassFunction const &rhs)
  { return lhs += rhs; }
  friend ClassFunction operator-(ClassFunction lhs, ClassFunction const &rhs)
  { return lhs -= rhs; }
  friend ClassFunction operator*(Cyclotomic const &s, ClassFunction f)
  { return f *= s; }

  // Pointwise product (inner tensor product).
  ClassFunction tensor(ClassFunction const &rhs) const;

  ClassFunction conj() const;

  // Same group object and equal values.
  friend bool operator==(ClassFunction const &a, ClassFunction const &b);

private:
  void require_same_group(ClassFunction const &rhs) const;

  PermGroup group_;
  std::vector<Cyclotomic> values_;
  CharKind kind_ = CharKind::Virtual;
};

// (1/|G|) sum_g f(g) conj(h(g)), computed classwise.
Cyclotomic inner_product(ClassFunction const &f, ClassFunction const &h);

// Ind_H^G f for f a class function on H <= G.
ClassFunction induce(ClassFunction const &f, PermGroup const &g);

// Res_H f for H <= group of f.
ClassFunction restrict(ClassFunction const &f, PermGroup const &h);

// f o hom for f a class function on hom.target().
ClassFunction inflate(ClassFunction const &f, GroupHom const &hom);

// (^g f)(x) = f(g^-1 x g) for g normalizing the group of f.
ClassFunction conjugate(ClassFunction const &f, Perm const &g);

} // namespace hcw

#endif // HCW_CLASS_FUNCTION_HPP
