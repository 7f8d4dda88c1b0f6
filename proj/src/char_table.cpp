#include <algorithm>
#include <cmath>
#include <sstream>

#include "hcw/char_table.hpp"
#include "hcw/error.hpp"
#include "hcw/primes.hpp"

namespace hcw
{

namespace
{

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p)
{ return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p)
{
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

u64 invmod(u64 a, u64 p)
{ return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n)
{
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

u64 choose_prime(u64 exponent, u64 order)
{
  double const bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 p = exponent + 1;; p += exponent)
    if (static_cast<double>(p) > bound && is_prime_u64(p))
      return p;
}

u64 primitive_root(u64 p)
{
  std::vector<u64> factors;
  for (auto const &f : prime_divisors(BigInt(static_cast<unsigned long>(p - 1))))
    factors.push_back(f.get_ui());

  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
  return 1;
}

using ModMatrix = std::vector<std::vector<u64>>;

// Reduced row echelon form mod p; returns pivot columns.
std::vector<std::size_t> reduce_mod(ModMatrix &m, u64 p)
{
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  std::size_t const cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0)
      ++sel;
    if (sel == m.size())
      continue;
    std::swap(m[row], m[sel]);
    u64 const inv = invmod(m[row][col], p);
    for (std::size_t j = col; j < cols; ++j)
      m[row][j] = mulmod(m[row][j], inv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      u64 const f = m[r][col];
      for (std::size_t j = col; j < cols; ++j)
        m[r][j] = (m[r][j] + p - mulmod(f, m[row][j], p)) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

ModMatrix nullspace_mod(ModMatrix m, std::size_t cols, u64 p)
{
  auto const pivots = reduce_mod(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;

  ModMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits the row space `space` (rows are basis vectors of an invariant
// subspace) into eigenspaces of `mat` acting on column vectors.
std::vector<ModMatrix> split_space(ModMatrix const &mat, ModMatrix const &space, u64 p)
{
  std::size_t const r = mat.size();
  std::size_t const d = space.size();

  // image[i][c] = (mat * space_c)_i
  ModMatrix image(r, std::vector<u64>(d, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      u64 acc = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (mat[i][k] && space[c][k])
          acc = (acc + mulmod(mat[i][k], space[c][k], p)) % p;
      image[i][c] = acc;
    }

  std::vector<ModMatrix> parts;
  std::size_t found = 0;
  for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
    ModMatrix sys(r, std::vector<u64>(d, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < d; ++c)
        sys[i][c] = (image[i][c] + p - mulmod(lambda, space[c][i], p)) % p;

    auto const kernel = nullspace_mod(std::move(sys), d, p);
    if (kernel.empty())
      continue;

    ModMatrix part;
    for (auto const &coef : kernel) {
      std::vector<u64> v(r, 0);
      for (std::size_t c = 0; c < d; ++c)
        if (coef[c])
          for (std::size_t k = 0; k < r; ++k)
            v[k] = (v[k] + mulmod(coef[c], space[c][k], p)) % p;
      part.push_back(std::move(v));
    }
    found += part.size();
    parts.push_back(std::move(part));
  }

  if (found != d)
    throw InvariantViolation("class matrix is not diagonalizable mod p");
  return parts;
}

bool row_less(ClassFunction const &a, ClassFunction const &b)
{
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    if (lex_less(a[k], b[k]))
      return true;
    if (lex_less(b[k], a[k]))
      return false;
  }
  return false;
}

} // namespace

CharTable::CharTable(PermGroup group) : group_(std::move(group))
{
  auto const &cls = group_.classes();
  std::size_t const r = cls.size();
  u64 const order = group_.order();
  u64 const e = group_.exponent();
  conductor_ = static_cast<unsigned>(e);
  prime_ = choose_prime(e, order);
  u64 const p = prime_;

  auto const &elems = group_.elements();

  // coeff[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<std::vector<std::vector<u64>>> coeff(
    r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    Perm const &z = cls[k].representative;
    for (std::size_t xi = 0; xi < elems.size(); ++xi) {
      std::size_t const i = group_.class_of_element(xi);
      std::size_t const j = group_.class_of(elems[xi].inverse() * z);
      ++coeff[i][j][k];
    }
  }

  // (M_i)_{jk} = coeff[i][j][k]; omega_chi is a common right eigenvector.
  std::vector<ModMatrix> class_mats(r, ModMatrix(r, std::vector<u64>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        class_mats[i][j][k] = coeff[i][j][k] % p;

  ModMatrix identity(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    identity[i][i] = 1;

  std::vector<ModMatrix> spaces{identity};
  for (std::size_t i = 1; i < r; ++i) {
    bool all_split = true;
    for (auto const &s : spaces)
      if (s.size() > 1)
        all_split = false;
    if (all_split)
      break;

    std::vector<ModMatrix> next;
    for (auto const &s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto &part : split_space(class_mats[i], s, p))
        next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }

  if (spaces.size() != r)
    throw InvariantViolation("Dixon splitting did not reach one-dimensional eigenspaces");

  std::vector<std::size_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k)
    inv_class[k] = group_.inverse_class(k);

  // Power maps: power[k][l] = class of rep_k^l for l < order(rep_k).
  std::vector<std::vector<std::size_t>> power(r);
  for (std::size_t k = 0; k < r; ++k) {
    Perm const &g = cls[k].representative;
    Perm x = group_.identity();
    for (unsigned long l = 0; l < cls[k].order; ++l) {
      power[k].push_back(group_.class_of(x));
      x *= g;
    }
  }

  u64 const z = powmod(primitive_root(p), (p - 1) / e, p);
  u64 const max_degree = static_cast<u64>(std::floor(std::sqrt(static_cast<double>(order))));

  for (auto const &s : spaces) {
    std::vector<u64> omega = s[0];
    if (omega[0] == 0)
      throw InvariantViolation("Dixon eigenvector vanishes at the identity class");
    u64 const scale = invmod(omega[0], p);
    for (auto &w : omega)
      w = mulmod(w, scale, p);

    u64 norm = 0;
    for (std::size_t k = 0; k < r; ++k)
      norm = (norm + mulmod(mulmod(omega[k], omega[inv_class[k]], p), invmod(cls[k].size % p, p), p)) % p;
    u64 const d2 = mulmod(order % p, invmod(norm, p), p);

    u64 degree = 0;
    for (u64 d = 1; d <= max_degree + 1; ++d)
      if (mulmod(d, d, p) == d2 % p) {
        degree = d;
        break;
      }
    if (degree == 0)
      throw InvariantViolation("no admissible character degree found");

    std::vector<u64> modval(r);
    for (std::size_t k = 0; k < r; ++k)
      modval[k] = mulmod(mulmod(degree, omega[k], p), invmod(cls[k].size % p, p), p);

    std::vector<Cyclotomic> values;
    for (std::size_t k = 0; k < r; ++k) {
      u64 const o = cls[k].order;
      u64 const zo = powmod(z, e / o, p);
      u64 const inv_o = invmod(o % p, p);
      std::vector<Rational> coeffs(e, 0);
      u64 total = 0;
      for (u64 j = 0; j < o; ++j) {
        u64 acc = 0;
        for (u64 l = 0; l < o; ++l)
          acc = (acc + mulmod(modval[power[k][l]], powmod(zo, (o - (j * l) % o) % o, p), p)) % p;
        u64 const mult = mulmod(acc, inv_o, p);
        if (mult > degree)
          throw InvariantViolation("eigenvalue multiplicity out of range in Dixon lift");
        total += mult;
        coeffs[(e / o) * j] = Rational(static_cast<unsigned long>(mult));
      }
      if (total != degree)
        throw InvariantViolation("eigenvalue multiplicities do not sum to the degree");
      values.emplace_back(conductor_, coeffs);
    }

    rows_.emplace_back(group_, std::move(values), CharKind::Irreducible);
  }

  std::sort(rows_.begin(), rows_.end(), [](ClassFunction const &a, ClassFunction const &b) {
    auto const da = *a.degree().rational_value();
    auto const db = *b.degree().rational_value();
    if (da != db)
      return da < db;
    return row_less(a, b);
  });
}

std::vector<unsigned long> CharTable::degrees() const
{
  std::vector<unsigned long> out;
  for (auto const &row : rows_)
    out.push_back(row.degree().rational_value()->get_num().get_ui());
  return out;
}

std::vector<Cyclotomic> CharTable::decompose(ClassFunction const &f) const
{
  std::vector<Cyclotomic> out;
  for (auto const &row : rows_)
    out.push_back(inner_product(f, row));
  return out;
}

std::optional<std::size_t> CharTable::index_of(ClassFunction const &f) const
{
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].values() == f.values() && f.group().same_object(group_))
      return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, long>> CharTable::constituents(ClassFunction const &f) const
{
  std::vector<std::pair<std::size_t, long>> out;
  auto const mult = decompose(f);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    auto const v = mult[i].rational_value();
    if (!v || v->get_den() != 1)
      throw ValidationError("class function is not a virtual character");
    if (sgn(*v) != 0)
      out.emplace_back(i, v->get_num().get_si());
  }
  return out;
}

OrthogonalityReport CharTable::check_orthogonality() const
{
  OrthogonalityReport rep;
  std::size_t const r = group_.num_classes();
  rep.complete = rows_.size() == r;

  rep.rows = true;
  for (std::size_t i = 0; i < rows_.size() && rep.rows; ++i)
    for (std::size_t j = i; j < rows_.size(); ++j)
      if (inner_product(rows_[i], rows_[j]) != Cyclotomic(i == j ? 1 : 0)) {
        rep.rows = false;
        break;
      }

  rep.columns = true;
  for (std::size_t a = 0; a < r && rep.columns; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic sum(0);
      for (auto const &row : rows_)
        sum += row[a] * row[b].conj();
      Cyclotomic const expect(a == b ? Rational(group_.centralizer_order(a)) : Rational(0));
      if (sum != expect) {
        rep.columns = false;
        break;
      }
    }

  Rational sum_sq = 0;
  for (auto const &row : rows_) {
    auto const d = row.degree().rational_value();
    if (!d) {
      sum_sq = -1;
      break;
    }
    sum_sq += *d * *d;
  }
  rep.degrees = sum_sq == Rational(group_.order());
  return rep;
}

std::string CharTable::to_tsv() const
{
  std::ostringstream os;
  auto const &cls = group_.classes();
  os << "# group\t" << (group_.name().empty() ? "G" : group_.name()) << "\n";
  os << "# order\t" << group_.order() << "\n";
  os << "# conductor\t" << conductor_ << "\n";
  os << "# class";
  for (auto const &c : cls)
    os << "\t(" << c.order << "," << c.size << ")";
  os << "\n";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << "chi_" << i;
    for (auto const &v : rows_[i].values())
      os << "\t" << v.to_string();
    os << "\n";
  }
  return os.str();
}

nlohmann::json CharTable::to_json() const
{
  nlohmann::json j;
  j["group"] = group_.name();
  j["order"] = group_.order();
  j["conductor"] = conductor_;
  j["dixon_prime"] = prime_;
  j["classes"] = nlohmann::json::array();
  for (auto const &c : group_.classes())
    j["classes"].push_back({{"order", c.order},
                            {"size", c.size},
                            {"representative", c.representative.to_string()}});
  j["characters"] = nlohmann::json::array();
  for (auto const &row : rows_) {
    nlohmann::json vals = nlohmann::json::array();
    for (auto const &v : row.values())
      vals.push_back(v.to_string());
    j["characters"].push_back(vals);
  }
  return j;
}

bool is_irreducible(ClassFunction const &f)
{
  if (inner_product(f, f) != Cyclotomic(1))
    return false;
  auto const d = f.degree().rational_value();
  return d && sgn(*d) > 0;
}

bool is_character(ClassFunction const &f, CharTable const &table)
{
  for (auto const &m : table.decompose(f)) {
    auto const v = m.rational_value();
    if (!v || v->get_den() != 1 || sgn(*v) < 0)
      return false;
  }
  return true;
}

} // namespace hcw
