#include <fstream>
#include <sstream>

#include "hcw/error.hpp"
#include "hcw/group_io.hpp"

namespace hcw
{

namespace
{

constexpr std::uint64_t max_model_degree = 10'000;

} // namespace

SemidirectGroup::SemidirectGroup(PermGroup normal, PermGroup acting,
                                 std::vector<std::vector<Perm>> action, GroupLimits limits)
: normal_(std::move(normal)), acting_(std::move(acting)), limits_(limits)
{
  auto const &ngens = normal_.generators();
  auto const &agens = acting_.generators();
  if (action.size() != agens.size())
    throw ValidationError("semidirect product needs one image list per acting generator");

  std::vector<GroupHom> gen_auts;
  for (auto const &images : action) {
    if (images.size() != ngens.size())
      throw ValidationError("action image list has the wrong length");
    GroupHom phi(normal_, normal_, images);
    if (!phi.is_surjective())
      throw ValidationError("action image is not an automorphism");
    gen_auts.push_back(std::move(phi));
  }

  auto const &aelems = acting_.elements();
  std::vector<std::optional<GroupHom>> auts(aelems.size());
  std::size_t const id = acting_.element_index(acting_.identity());
  auts[id] = GroupHom(normal_, normal_, ngens);

  std::vector<std::size_t> queue{id};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t const x = queue[q];
    for (std::size_t i = 0; i < agens.size(); ++i) {
      std::size_t const y = acting_.element_index(aelems[x] * agens[i]);
      // phi_{x t} = phi_x o phi_t
      std::vector<Perm> images;
      for (auto const &s : ngens)
        images.push_back((*auts[x])(gen_auts[i](s)));
      if (!auts[y]) {
        auts[y] = GroupHom(normal_, normal_, images);
        queue.push_back(y);
      } else if (auts[y]->generator_images() != images) {
        throw ValidationError("action does not define a homomorphism into Aut(G°)");
      }
    }
  }
  for (auto &a : auts)
    auts_.push_back(std::move(*a));
}

Perm SemidirectGroup::act(Perm const &a, Perm const &g) const
{ return auts_[acting_.element_index(a)](g); }

Perm SemidirectGroup::embed(Perm const &g, Perm const &a) const
{
  if (!normal_.contains(g) || !acting_.contains(a))
    throw ValidationError("pair is not an element of the semidirect product");
  auto const &nel = normal_.elements();
  auto const &ael = acting_.elements();
  std::size_t const ni = nel.size();
  std::size_t const ai = ael.size();
  std::size_t const a_idx = acting_.element_index(a);

  std::vector<std::uint32_t> img(ni * ai);
  for (std::size_t c = 0; c < ai; ++c) {
    Perm const cg = auts_[c](g);
    std::size_t const ca = acting_.element_index(ael[c] * ael[a_idx]);
    for (std::size_t x = 0; x < ni; ++x)
      img[point(x, c)] = static_cast<std::uint32_t>(point(normal_.element_index(nel[x] * cg), ca));
  }
  return Perm(std::move(img));
}

PermGroup const &SemidirectGroup::model() const
{
  std::lock_guard lock(*model_mutex_);
  if (!model_) {
    if (order() > max_model_degree)
      throw CapacityError("semidirect product too large for the regular model");
    std::vector<Perm> gens;
    for (auto const &s : normal_.generators())
      gens.push_back(embed(s, acting_.identity()));
    for (auto const &t : acting_.generators())
      gens.push_back(embed(normal_.identity(), t));
    model_ = std::make_shared<PermGroup>(static_cast<unsigned>(order()), gens, limits_);
    if (model_->order() != order())
      throw InvariantViolation("semidirect model has the wrong order");
  }
  return *model_;
}

PermGroup SemidirectGroup::normal_image() const
{
  std::vector<Perm> gens;
  for (auto const &s : normal_.generators())
    gens.push_back(embed(s, acting_.identity()));
  return PermGroup(model().degree(), gens, limits_);
}

PermGroup SemidirectGroup::acting_image() const
{
  std::vector<Perm> gens;
  for (auto const &t : acting_.generators())
    gens.push_back(embed(normal_.identity(), t));
  return PermGroup(model().degree(), gens, limits_);
}

PermGroup const &GroupFile::subgroup(std::string const &name) const
{
  auto it = subgroups.find(name);
  if (it == subgroups.end())
    throw ValidationError("unknown subgroup '" + name + "'");
  return it->second;
}

std::vector<Perm> GroupFile::parse_elements(nlohmann::json const &list) const
{
  if (!list.is_array())
    throw ParseError("expected a list of group elements");
  std::vector<Perm> out;
  for (auto const &e : list) {
    if (e.is_string()) {
      out.push_back(Perm::parse(e.get<std::string>(), group.degree()));
    } else if (e.is_array() && e.size() == 2 && semidirect) {
      Perm const g = Perm::parse(e[0].get<std::string>(), semidirect->normal().degree());
      Perm const a = Perm::parse(e[1].get<std::string>(), semidirect->acting().degree());
      out.push_back(semidirect->embed(g, a));
    } else {
      throw ParseError("bad group element " + e.dump());
    }
    if (!group.contains(out.back()))
      throw ValidationError("element " + e.dump() + " is not in the group");
  }
  return out;
}

PermGroup GroupFile::resolve_subgroup(std::string const &spec) const
{
  if (auto it = subgroups.find(spec); it != subgroups.end())
    return it->second;
  if (spec.find('(') == std::string::npos)
    throw ValidationError("unknown subgroup '" + spec + "'");

  nlohmann::json list = nlohmann::json::array();
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';'))
    list.push_back(item);
  auto gens = parse_elements(list);
  return PermGroup(group.degree(), std::move(gens), group.limits());
}

std::vector<Perm> parse_perm_list(nlohmann::json const &list, unsigned degree)
{
  if (!list.is_array())
    throw ParseError("expected a list of permutations");
  std::vector<Perm> out;
  for (auto const &e : list) {
    if (!e.is_string())
      throw ParseError("permutation must be a string, got " + e.dump());
    out.push_back(Perm::parse(e.get<std::string>(), degree));
  }
  return out;
}

namespace
{

PermGroup parse_plain(nlohmann::json const &j, GroupLimits limits)
{
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw ParseError("group needs a positive integer \"degree\"");
  unsigned const degree = j["degree"].get<unsigned>();
  if (degree == 0)
    throw ParseError("group degree must be positive");
  auto gens = parse_perm_list(j.value("generators", nlohmann::json::array()), degree);
  return PermGroup(degree, std::move(gens), limits);
}

} // namespace

GroupFile parse_group_file(nlohmann::json const &j, GroupLimits limits)
{
  GroupFile out;
  out.raw = j;
  nlohmann::json const &gj = j.contains("group") && j["group"].is_object() ? j["group"] : j;

  try {
    if (gj.contains("semidirect")) {
      auto const &sd = gj["semidirect"];
      PermGroup normal = parse_plain(sd.at("normal"), limits);
      PermGroup acting = parse_plain(sd.at("acting"), limits);
      std::vector<std::vector<Perm>> action;
      for (auto const &images : sd.at("action"))
        action.push_back(parse_perm_list(images, normal.degree()));
      out.semidirect =
        std::make_shared<SemidirectGroup>(std::move(normal), std::move(acting), std::move(action), limits);
      out.group = out.semidirect->model();
    } else {
      out.group = parse_plain(gj, limits);
    }

    std::string name = j.value("name", gj.value("name", std::string()));
    out.group.set_name(name);

    if (gj.contains("subgroups")) {
      if (!gj["subgroups"].is_object())
        throw ParseError("\"subgroups\" must be an object");
      for (auto const &[key, list] : gj["subgroups"].items()) {
        auto gens = out.parse_elements(list);
        PermGroup h(out.group.degree(), std::move(gens), limits);
        h.set_name(key);
        out.subgroups.emplace(key, std::move(h));
      }
    }
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("malformed group JSON: ") + e.what());
  }
  return out;
}

nlohmann::json read_json(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

GroupFile load_group_file(std::filesystem::path const &path, GroupLimits limits)
{ return parse_group_file(read_json(path), limits); }

} // namespace hcw
