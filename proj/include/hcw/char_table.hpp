#ifndef HCW_CHAR_TABLE_HPP
#define HCW_CHAR_TABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcw/class_function.hpp"
#include "json.hpp"

namespace hcw
{

struct OrthogonalityReport
{
  bool rows = false;      // <chi_i, chi_j> = delta_ij
  bool columns = false;   // sum_i chi_i(g) conj(chi_i(h)) = delta |C_G(g)|
  bool degrees = false;   // sum chi(1)^2 = |G|
  bool complete = false;  // number of rows equals number of classes

  bool ok() const
  { return rows && columns && degrees && complete; }
};

// Complete table of irreducible characters, computed with the
// Burnside-Dixon method: class multiplication coefficients, simultaneous
// eigenvectors over F_p with p = 1 mod exp(G) and p > 2 sqrt|G|, and a
// lift of the eigenvalue multiplicities back to Q(zeta_exp). Rows are
// ordered by (degree, lexicographic value tuple).
class CharTable
{
public:
  explicit CharTable(PermGroup group);

  PermGroup const &group() const
  { return group_; }

  unsigned conductor() const
  { return conductor_; }

  std::uint64_t dixon_prime() const
  { return prime_; }

  std::size_t size() const
  { return rows_.size(); }

  ClassFunction const &operator[](std::size_t i) const
  { return rows_[i]; }

  std::vector<ClassFunction> const &rows() const
  { return rows_; }

  std::vector<unsigned long> degrees() const;

  // <f, chi_i> for every row.
  std::vector<Cyclotomic> decompose(ClassFunction const &f) const;

  // Row index of an irreducible equal to f.
  std::optional<std::size_t> index_of(ClassFunction const &f) const;

  // Rows with nonzero multiplicity in f, with their multiplicities; throws
  // ValidationError unless every multiplicity is an integer.
  std::vector<std::pair<std::size_t, long>> constituents(ClassFunction const &f) const;

  OrthogonalityReport check_orthogonality() const;

  std::string to_tsv() const;
  nlohmann::json to_json() const;

private:
  PermGroup group_;
  unsigned conductor_ = 1;
  std::uint64_t prime_ = 0;
  std::vector<ClassFunction> rows_;
};

// True iff f is a character of an irreducible representation: <f,f> = 1
// and f(1) > 0.
bool is_irreducible(ClassFunction const &f);

// True iff every multiplicity in the table is a nonnegative integer.
bool is_character(ClassFunction const &f, CharTable const &table);

} // namespace hcw

#endif // HCW_CHAR_TABLE_HPP
