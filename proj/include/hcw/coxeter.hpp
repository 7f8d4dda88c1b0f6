#ifndef HCW_COXETER_HPP
#define HCW_COXETER_HPP

#include <memory>
#include <string>
#include <vector>

#include "hcw/char_table.hpp"

namespace hcw
{

struct StandardParabolic
{
  std::vector<unsigned> nodes; // J, 0-based diagram nodes
  PermGroup group;
};

struct CoxeterRealization
{
  std::string type; // "A3", "B2", "D4", "G2", "F4", "I2(5)"
  unsigned rank = 0;
  PermGroup group;
  std::vector<Perm> simple;               // indexed by diagram node
  std::vector<StandardParabolic> parabolics; // every proper J, ascending bitmask
  ClassFunction reflection;                // geometric reflection character
  std::shared_ptr<CharTable const> table;
};

// Supported: A_n (n <= 4), B_n (n <= 3), D4, G2, F4, I2(m) (3 <= m <= 12).
// Throws ValidationError for anything else.
CoxeterRealization coxeter_group(std::string const &type);

// Expected |W| for a supported type label.
std::uint64_t coxeter_order(std::string const &type);

struct UnseparatedPair
{
  std::size_t first;
  std::size_t second;
};

// Distinct irreducibles with the same degree and the same restriction to
// every proper standard parabolic subgroup.
std::vector<UnseparatedPair> separation_report(CoxeterRealization const &w);

// Recomputes the report with explicit restrictions and checks every other
// pair of irreducibles is told apart by a restriction or the degree.
bool verify_separation(CoxeterRealization const &w, std::vector<UnseparatedPair> const &report);

// Sym^k of the reflection character for k = 0..kmax, by h_k = (1/k) sum p_i h_{k-i}.
std::vector<ClassFunction> symmetric_powers(CoxeterRealization const &w, unsigned kmax);

// Number of reflections of W (the largest possible b-invariant).
unsigned num_reflections(CoxeterRealization const &w);

// Smallest k with <Sym^k V, phi> > 0, for each row of the table.
std::vector<unsigned> b_invariants(CoxeterRealization const &w);

// "phi_{d,b}" labels from degree and b-invariant.
std::vector<std::string> character_labels(CoxeterRealization const &w);

std::string separation_tsv(CoxeterRealization const &w, std::vector<UnseparatedPair> const &report);

} // namespace hcw

#endif // HCW_COXETER_HPP
