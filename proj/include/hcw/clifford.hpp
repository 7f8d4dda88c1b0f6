#ifndef HCW_CLIFFORD_HPP
#define HCW_CLIFFORD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hcw/char_table.hpp"
#include "json.hpp"

namespace hcw
{

struct CliffordReport
{
  std::size_t theta = 0;            // index in Irr(N)
  std::vector<std::size_t> orbit;   // Irr(N) indices of the M-conjugates
  PermGroup inertia;                // I_M(theta)
  std::uint64_t omega_order = 0;    // |I/N|
  bool omega_abelian = false;
  bool quotient_abelian = false;    // M/N abelian
  std::vector<std::size_t> above;   // Irr(M|theta) as Irr(M) indices
  std::vector<long> label_dims;     // <Res_N chi, theta> for chi in `above`
  bool extendable = false;
  std::vector<std::size_t> extensions; // Irr(I) indices restricting to theta
  std::optional<std::size_t> designated; // least extension in table order
  // (Irr(Omega) index, Irr(M) index) for eta -> Ind_I^M(designated x eta)
  std::vector<std::pair<std::size_t, std::size_t>> gallagher;
  bool gallagher_bijective = false;
  Cyclotomic induced_norm;          // <Ind_N^M theta, Ind_N^M theta>

  nlohmann::json to_json() const;
};

// Clifford data for theta = row `theta` of the table of N, N normal in M.
CliffordReport clifford_decomposition(CharTable const &m_table, CharTable const &n_table,
                                      std::size_t theta);

// Sum over chi in Irr(M|theta) of <Res_N chi, theta> chi; throws
// InvariantViolation unless it equals Ind_N^M theta.
ClassFunction regular_sum_check(CharTable const &m_table, CharTable const &n_table,
                                std::size_t theta);

// The unique chi in Irr(I) with Res_{I_Gamma} chi = u_gamma and
// Res_{I_Phi} chi = u_phi, where I/N = (I_Gamma/N) x (I_Phi/N) with both
// factors cyclic. Throws HypothesisViolation naming the failing condition.
std::size_t extension_gluing(CharTable const &i_table, CharTable const &n_table, std::size_t theta,
                             ClassFunction const &u_gamma, ClassFunction const &u_phi);

struct WreathExtension
{
  PermGroup wreath; // K wr S_m acting on m blocks of K's points
  PermGroup base;   // K^m
  ClassFunction character;
};

// Character of K wr S_m on the m-fold tensor power of theta with the
// factors permuted: at ((k_1..k_m); sigma) the value is the product over
// the cycles (i_1 -> ... -> i_l) of sigma of theta(k_{i_l} ... k_{i_1}).
WreathExtension wreath_extension(ClassFunction const &theta, unsigned m);

// theta^{x m} as a class function on the base group K^m.
ClassFunction outer_tensor_power(ClassFunction const &theta, PermGroup const &base, unsigned m);

} // namespace hcw

#endif // HCW_CLIFFORD_HPP
