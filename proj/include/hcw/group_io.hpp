#ifndef HCW_GROUP_IO_HPP
#define HCW_GROUP_IO_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hcw/group_hom.hpp"
#include "hcw/perm_group.hpp"
#include "json.hpp"

namespace hcw
{

// G° x| A with (g1,a1)(g2,a2) = (g1 a1(g2), a1 a2). The action is given by
// generator images: action[i][j] is the image of the j-th generator of G°
// under the i-th generator of A. Every image list is checked to define an
// automorphism and the induced map A -> Aut(G°) to be a homomorphism.
class SemidirectGroup
{
public:
  SemidirectGroup(PermGroup normal, PermGroup acting, std::vector<std::vector<Perm>> action,
                  GroupLimits limits = {});

  PermGroup const &normal() const
  { return normal_; }

  PermGroup const &acting() const
  { return acting_; }

  std::uint64_t order() const
  { return normal_.order() * acting_.order(); }

  // a(g)
  Perm act(Perm const &a, Perm const &g) const;

  // Regular permutation model on the pairs (g, a); at most 10^4 points.
  PermGroup const &model() const;

  // The model permutation of the pair (g, a).
  Perm embed(Perm const &g, Perm const &a) const;

  // Images of G° and of A in the model.
  PermGroup normal_image() const;
  PermGroup acting_image() const;

private:
  std::size_t point(std::size_t g_idx, std::size_t a_idx) const
  { return g_idx * acting_.order() + a_idx; }

  PermGroup normal_;
  PermGroup acting_;
  GroupLimits limits_;
  std::vector<GroupHom> auts_; // indexed by element index of A
  mutable std::shared_ptr<std::mutex> model_mutex_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<PermGroup> model_;
};

// A group loaded from JSON with its named subgroups.
struct GroupFile
{
  PermGroup group;
  std::map<std::string, PermGroup> subgroups;
  std::shared_ptr<SemidirectGroup> semidirect;
  nlohmann::json raw;

  PermGroup const &subgroup(std::string const &name) const;

  // Generator list of a subgroup: strings in cycle notation or, for
  // semidirect input, pairs ["g", "a"].
  std::vector<Perm> parse_elements(nlohmann::json const &list) const;

  // Name of a subgroup or a ';'-separated generator list.
  PermGroup resolve_subgroup(std::string const &spec) const;
};

// {"degree": n, "generators": [...]} or {"semidirect": {...}}, optionally
// with "name" and "subgroups": {"N": [...], ...}. A top-level "group"
// object, when present, holds the group itself.
GroupFile parse_group_file(nlohmann::json const &j, GroupLimits limits = {});
GroupFile load_group_file(std::filesystem::path const &path, GroupLimits limits = {});

nlohmann::json read_json(std::filesystem::path const &path);

std::vector<Perm> parse_perm_list(nlohmann::json const &list, unsigned degree);

} // namespace hcw

#endif // HCW_GROUP_IO_HPP
