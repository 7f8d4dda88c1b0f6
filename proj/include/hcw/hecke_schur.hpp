#ifndef HCW_HECKE_SCHUR_HPP
#define HCW_HECKE_SCHUR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcw/laurent.hpp"
#include "json.hpp"

namespace hcw
{

struct SchurElement
{
  LaurentPoly value;
  std::string label; // "1", "eps", "phi_{2,1}", ...
  std::string type;  // "A1" or "G2"
  unsigned k = 0;
  unsigned b = 0;
};

// (c_1, c_eps) = (Phi_2(q^k), q^-k Phi_2(q^k)).
std::pair<SchurElement, SchurElement> schur_a1(unsigned k);

// c_{phi_{2,b}} = 2 q^{-2k+1} Phi_3(q^{k+b-2}) Phi_6(q^{k-b+1}) for the
// parameters (q, q^{2k-1}), k in {1, 2, 5}, b in {1, 2}.
SchurElement schur_g2(unsigned k, unsigned b);

// Phi_3(q^{k+b-2}) Phi_6(q^{k-b+1}) without the prefactor.
LaurentPoly g2_product(unsigned k, unsigned b);

struct ZsigmondyWitness
{
  unsigned q0;
  BigInt prime;
  bool divides_lhs;
  bool divides_rhs;
};

struct G2Row
{
  unsigned k;
  CycloFactorization lhs; // Phi_3(q^{k-1}) Phi_6(q^k)
  CycloFactorization rhs; // Phi_3(q^k) Phi_6(q^{k-1})
  unsigned index;         // Zsigmondy index: 6, 12, 30
  bool index_one_sided;   // Phi_index divides exactly one side
  Rational lhs_at_2;
  Rational rhs_at_2;
  std::vector<ZsigmondyWitness> witnesses; // q0 in {3,4,5,7,8,9}

  bool certified() const;
};

G2Row g2_row(unsigned k);

// Three-row table: k, lhs, rhs.
std::string g2_table_tsv();
nlohmann::json g2_table_json();

// c_big(q0) / c_small(q0); throws ValidationError on a zero denominator.
Rational schur_ratio(SchurElement const &big, SchurElement const &small, Rational const &q0);

// dim(pi) / c_phi(q0) for each Schur element.
std::vector<Rational> predicted_degrees(Rational const &dim_pi, std::vector<SchurElement> const &c,
                                        Rational const &q0);

// dim(pi) / sum_phi phi(1)^2 / c_phi(q0), the constant in
// dim(pi_phi) = C phi(1) / c_phi.
Rational degree_constant(Rational const &dim_pi, std::vector<SchurElement> const &c,
                         std::vector<unsigned long> const &phi_degrees, Rational const &q0);

} // namespace hcw

#endif // HCW_HECKE_SCHUR_HPP
