#include <optional>

#include "hcw/error.hpp"
#include "hcw/group_hom.hpp"

namespace hcw
{

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Perm> images)
: source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
  auto const &gens = source_.generators();
  if (images_.size() != gens.size())
    throw ValidationError("homomorphism needs one image per source generator");
  for (auto const &img : images_)
    if (!target_.contains(img))
      throw ValidationError("generator image " + img.to_string() + " not in target group");

  auto const &elems = source_.elements();
  std::vector<std::optional<Perm>> map(elems.size());
  std::vector<std::size_t> queue{source_.element_index(source_.identity())};
  map[queue[0]] = target_.identity();

  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t const x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t const y = source_.element_index(elems[x] * gens[i]);
      Perm const img = *map[x] * images_[i];
      if (!map[y]) {
        map[y] = img;
        queue.push_back(y);
      } else if (*map[y] != img) {
        throw ValidationError("generator images do not define a homomorphism");
      }
    }
  }

  std::vector<Perm> full;
  full.reserve(elems.size());
  for (auto &m : map)
    full.push_back(std::move(*m));
  element_map_ = std::make_shared<std::vector<Perm> const>(std::move(full));
}

Perm GroupHom::operator()(Perm const &g) const
{ return (*element_map_)[source_.element_index(g)]; }

PermGroup GroupHom::kernel() const
{
  std::vector<Perm> ker;
  auto const &elems = source_.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    if ((*element_map_)[i].is_identity())
      ker.push_back(elems[i]);
  return PermGroup::generated_by(source_.degree(), ker, source_.limits());
}

PermGroup GroupHom::image() const
{ return PermGroup(target_.degree(), images_, target_.limits()); }

bool GroupHom::is_surjective() const
{ return image().order() == target_.order(); }

Quotient coset_quotient(PermGroup const &m, PermGroup const &n)
{
  if (!n.is_normal_in(m))
    throw ValidationError("coset_quotient: subgroup is not normal");

  auto const &elems = m.elements();
  std::vector<std::size_t> coset(elems.size(), SIZE_MAX);
  std::vector<Perm> reps;

  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (coset[i] != SIZE_MAX)
      continue;
    std::size_t const id = reps.size();
    reps.push_back(elems[i]);
    for (auto const &x : n.elements())
      coset[m.element_index(x * elems[i])] = id;
  }

  unsigned const k = static_cast<unsigned>(reps.size());
  auto action = [&](Perm const &g) {
    std::vector<std::uint32_t> img(k);
    for (unsigned c = 0; c < k; ++c)
      img[c] = static_cast<std::uint32_t>(coset[m.element_index(reps[c] * g)]);
    return Perm(std::move(img));
  };

  std::vector<Perm> qgens;
  for (auto const &g : m.generators())
    qgens.push_back(action(g));

  PermGroup q(k, qgens, m.limits());
  if (q.order() != k)
    throw InvariantViolation("quotient action is not regular");

  GroupHom map(m, q, qgens);
  return {q, std::move(map), std::move(reps)};
}

} // namespace hcw
