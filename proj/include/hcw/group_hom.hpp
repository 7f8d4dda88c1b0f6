#ifndef HCW_GROUP_HOM_HPP
#define HCW_GROUP_HOM_HPP

#include <memory>
#include <vector>

#include "hcw/perm_group.hpp"

namespace hcw
{

// Homomorphism between permutation groups given by generator images. The
// constructor verifies well-definedness on every element (breadth-first
// over the source, checking phi(x s) = phi(x) phi(s) wherever x s is
// reached twice) and caches the full element map.
class GroupHom
{
public:
  GroupHom(PermGroup source, PermGroup target, std::vector<Perm> images);

  PermGroup const &source() const
  { return source_; }

  PermGroup const &target() const
  { return target_; }

  std::vector<Perm> const &generator_images() const
  { return images_; }

  Perm operator()(Perm const &g) const;

  PermGroup kernel() const;
  PermGroup image() const;
  bool is_surjective() const;

private:
  PermGroup source_;
  PermGroup target_;
  std::vector<Perm> images_;
  std::shared_ptr<std::vector<Perm> const> element_map_;
};

struct Quotient
{
  PermGroup group; // M/N acting on the right cosets of N
  GroupHom map;    // M -> M/N
  std::vector<Perm> coset_reps;
};

// M/N for N normal in M; throws ValidationError otherwise.
Quotient coset_quotient(PermGroup const &m, PermGroup const &n);

} // namespace hcw

#endif // HCW_GROUP_HOM_HPP
