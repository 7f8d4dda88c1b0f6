#ifndef HCW_PERM_GROUP_HPP
#define HCW_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcw/perm.hpp"

namespace hcw
{

// Capacity bounds for element and class enumeration.
struct GroupLimits
{
  std::uint64_t max_order = 10'000'000;
  std::size_t max_classes = 512;
};

struct ConjugacyClass
{
  Perm representative; // lexicographically least image tuple in the class
  std::size_t size;
  unsigned long order;
};

// Finite group of permutations given by generators. A PermGroup is a cheap
// shared handle; the stabilizer chain is built on construction and element
// lists and conjugacy classes are computed once on first use. Two handles
// denote the same group object iff same_object() holds.
class PermGroup
{
public:
  PermGroup();
  PermGroup(unsigned degree, std::vector<Perm> generators, GroupLimits limits = {});

  // Smallest subgroup containing `elements`; generators are chosen greedily
  // in the given order.
  static PermGroup generated_by(unsigned degree, std::vector<Perm> const &elements,
                                GroupLimits limits = {});

  unsigned degree() const;
  std::vector<Perm> const &generators() const;
  GroupLimits const &limits() const;

  std::string const &name() const;
  PermGroup &set_name(std::string name);

  Perm identity() const
  { return Perm(degree()); }

  // Stabilizer chain data.
  std::vector<unsigned> const &base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;
  std::uint64_t order() const;
  bool contains(Perm const &p) const;

  // Full element list in stabilizer-chain order; throws CapacityError when
  // the order exceeds limits().max_order.
  std::vector<Perm> const &elements() const;
  std::size_t element_index(Perm const &p) const;

  // Conjugacy classes ordered by (element order, class size, representative).
  std::vector<ConjugacyClass> const &classes() const;
  std::size_t num_classes() const
  { return classes().size(); }
  std::size_t class_of(Perm const &p) const;
  std::size_t class_of_element(std::size_t element_idx) const;
  std::size_t inverse_class(std::size_t k) const;
  // Class of rep(k)^e.
  std::size_t power_class(std::size_t k, long e) const;
  std::uint64_t centralizer_order(std::size_t k) const
  { return order() / classes()[k].size; }
  // Element indices of class k.
  std::vector<std::size_t> const &class_elements(std::size_t k) const;

  unsigned long exponent() const;
  bool is_abelian() const;

  bool is_subgroup_of(PermGroup const &g) const;
  bool is_normal_in(PermGroup const &g) const;

  // Conjugate subgroup g^-1 H g.
  PermGroup conjugate_by(Perm const &g) const;

  bool same_object(PermGroup const &other) const
  { return impl_ == other.impl_; }

  // Same set of elements (subgroup both ways).
  bool equals(PermGroup const &other) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

PermGroup intersection(PermGroup const &a, PermGroup const &b);

// Symmetric group on n points, cyclic group as an n-cycle.
PermGroup symmetric_group(unsigned n);
PermGroup cyclic_group(unsigned n);

// External direct product acting on the disjoint union of the point sets.
PermGroup direct_product(std::vector<PermGroup> const &factors);

} // namespace hcw

#endif // HCW_PERM_GROUP_HPP
