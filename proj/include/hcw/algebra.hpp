#ifndef HCW_ALGEBRA_HPP
#define HCW_ALGEBRA_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hcw/char_table.hpp"
#include "hcw/group_io.hpp"
#include "json.hpp"

namespace hcw
{

using AlgElement = std::vector<Cyclotomic>;

// Finite-dimensional associative algebra over cyclotomic numbers given by
// sparse structure constants b_i b_j = sum_k c_ijk b_k. Associativity and
// the unit axioms are verified on construction (all basis triples up to
// dimension 64, a fixed stride sample above).
class SCAlgebra
{
public:
  using Terms = std::vector<std::pair<std::size_t, Cyclotomic>>;

  SCAlgebra(std::vector<std::string> labels, std::vector<Terms> products, AlgElement unit);

  std::size_t dim() const
  { return labels_.size(); }

  std::vector<std::string> const &labels() const
  { return labels_; }

  AlgElement const &unit() const
  { return unit_; }

  AlgElement basis(std::size_t i) const;
  AlgElement zero() const
  { return AlgElement(dim(), Cyclotomic(0)); }

  // b_i b_j
  Terms const &product(std::size_t i, std::size_t j) const
  { return products_[i * dim() + j]; }

  AlgElement multiply(AlgElement const &a, AlgElement const &b) const;

  bool is_idempotent(AlgElement const &e) const;

  std::string format(AlgElement const &x) const;

private:
  std::vector<std::string> labels_;
  std::vector<Terms> products_;
  AlgElement unit_;
};

AlgElement add(AlgElement a, AlgElement const &b);
AlgElement scale(Cyclotomic const &c, AlgElement a);
bool is_zero(AlgElement const &a);

// Normalized 2-cocycle on a finite group with values indexed by element
// indices of the group.
class Cocycle2
{
public:
  using Fn = std::function<Cyclotomic(Perm const &, Perm const &)>;

  Cocycle2(PermGroup group, Fn const &alpha);
  static Cocycle2 trivial(PermGroup group);

  PermGroup const &group() const
  { return group_; }

  Cyclotomic const &operator()(std::size_t a, std::size_t b) const
  { return values_[a][b]; }

private:
  PermGroup group_;
  std::vector<std::vector<Cyclotomic>> values_;
};

// Basis [w], w in the element list of the group; [a][b] = alpha(a,b)[ab].
SCAlgebra twisted_group_algebra(Cocycle2 const &alpha);

// Basis of the center.
std::vector<AlgElement> center(SCAlgebra const &a);

// C[Omega] x| W with [w][x] = [w.x][w]; basis [x][w] with index
// x_idx * |W| + w_idx over the element lists of Omega and W.
struct SkewGroupAlgebra
{
  std::shared_ptr<SemidirectGroup> data;
  SCAlgebra algebra;

  PermGroup const &omega() const
  { return data->normal(); }

  PermGroup const &weyl() const
  { return data->acting(); }

  std::size_t index(std::size_t x, std::size_t w) const
  { return x * weyl().order() + w; }

  // sum_x c_x [x] -> sum_x c_x [x][1]
  AlgElement embed(AlgElement const &coeffs) const;
};

SkewGroupAlgebra skew_group_algebra(PermGroup omega, PermGroup weyl,
                                    std::vector<std::vector<Perm>> action);

// e_eta = (1/|Omega|) sum_x eta(x)^-1 [x] for each row of the table, in the
// basis of C[Omega] given by omega.elements().
std::vector<AlgElement> central_idempotents_abelian(CharTable const &omega_table);

struct Corner
{
  SCAlgebra algebra;
  std::vector<AlgElement> basis; // in coordinates of the ambient algebra
};

// eAe with a basis from row reduction of {e b_i e}; throws ValidationError
// unless e is idempotent.
Corner corner(SCAlgebra const &a, AlgElement const &e);

// dim eAf
std::size_t peirce_dimension(SCAlgebra const &a, AlgElement const &e, AlgElement const &f);

struct CornerReport
{
  std::size_t eta = 0;
  std::size_t corner_dim = 0;
  std::size_t stabilizer_order = 0; // |Stab_W(eta)|
  std::vector<Perm> stabilizer;
  bool images_in_corner = false;  // e[w] e = e[w] for w in Stab
  bool independent = false;
  bool spans = false;
  bool group_law = false;         // (e[w])(e[w']) = e[ww']
  bool projective = false;        // group law only up to scalars

  bool isomorphism() const
  { return images_in_corner && independent && spans && group_law; }

  nlohmann::json to_json() const;
};

// Checks T_w -> e_eta [w], w in Stab_W(eta), against the corner at e_eta.
CornerReport corner_report(SkewGroupAlgebra const &a, CharTable const &omega_table, std::size_t eta);

// Omega named "C3", "C2xC2", ..., W named "C2" or "1", action "invert",
// "swap" or "trivial".
SkewGroupAlgebra named_skew_algebra(std::string const &omega, std::string const &weyl,
                                    std::string const &action);

} // namespace hcw

#endif // HCW_ALGEBRA_HPP
