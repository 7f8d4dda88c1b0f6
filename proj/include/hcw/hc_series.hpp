#ifndef HCW_HC_SERIES_HPP
#define HCW_HC_SERIES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcw/char_table.hpp"
#include "hcw/group_io.hpp"
#include "json.hpp"

namespace hcw
{

// P = L x| U inside G. `normalizer`, when given, stands in for N_G(A_L) in
// the relative Weyl group; otherwise N_G(L) is used.
struct ParabolicRecord
{
  std::string name;
  PermGroup p;
  PermGroup l;
  PermGroup u;
  std::optional<PermGroup> normalizer;
  bool improper = false; // L = P = G
};

class BNDatum
{
public:
  // Validates every record and appends the improper record "G" if absent.
  BNDatum(PermGroup g, std::vector<ParabolicRecord> records,
          std::optional<PermGroup> identity_component = std::nullopt);

  // Reads "parabolics" (and "identity_component") from a group file.
  static BNDatum from_group_file(GroupFile const &file);

  PermGroup const &group() const
  { return g_; }

  CharTable const &table() const
  { return *g_table_; }

  std::vector<ParabolicRecord> const &records() const
  { return records_; }

  std::size_t record_index(std::string const &name) const;

  ParabolicRecord const &record(std::size_t r) const
  { return records_.at(r); }

  CharTable const &levi_table(std::size_t r) const
  { return *l_tables_.at(r); }

  std::optional<PermGroup> const &identity_component() const
  { return identity_component_; }

private:
  PermGroup g_;
  std::vector<ParabolicRecord> records_;
  std::optional<PermGroup> identity_component_;
  std::shared_ptr<CharTable> g_table_;
  std::vector<std::shared_ptr<CharTable>> l_tables_;
};

// Ind_P^G of tau inflated along P -> P/U = L.
ClassFunction hc_induce(BNDatum const &datum, std::size_t record, ClassFunction const &tau);

// l -> (1/|U|) sum_{u in U} rho(l u).
ClassFunction hc_restrict(BNDatum const &datum, std::size_t record, ClassFunction const &rho);

// The same two functors for an arbitrary P = L x| U <= G.
ClassFunction parabolic_induce(ClassFunction const &tau, PermGroup const &p, PermGroup const &u,
                               PermGroup const &g);
ClassFunction parabolic_restrict(ClassFunction const &rho, PermGroup const &l, PermGroup const &u);

// HC restriction vanishes for every proper record.
bool is_cuspidal(BNDatum const &datum, ClassFunction const &rho);

// tau in Irr(L_r) is cuspidal relative to the records whose Levi is a
// proper subgroup of L_r.
bool is_cuspidal_in_levi(BNDatum const &datum, std::size_t record, std::size_t tau);

struct CuspidalPair
{
  std::size_t record;
  std::size_t tau; // index in the Levi table
};

struct RelativeWeyl
{
  PermGroup stabilizer;        // Stab_N(tau), N the record normalizer
  std::uint64_t order = 0;     // |W_tau| = |Stab| / |L|
  Cyclotomic endo_dim;         // <R(tau), R(tau)>
  bool matches = false;
  std::string warning;
};

RelativeWeyl relative_weyl(BNDatum const &datum, std::size_t record, std::size_t tau);

struct HCSeries
{
  CuspidalPair pair;
  std::vector<CuspidalPair> conjugates; // every listed pair conjugate to `pair`
  std::vector<std::size_t> members;     // Irr(G) indices
  std::vector<long> multiplicities;
  std::uint64_t weyl_order = 0;
  Cyclotomic endo_dim;
};

struct HCSeriesMap
{
  std::vector<HCSeries> series;
  std::vector<std::size_t> series_of; // per Irr(G) index
  std::vector<std::string> warnings;

  nlohmann::json to_json(BNDatum const &datum) const;
  std::string to_tsv(BNDatum const &datum) const;
};

// Throws InvariantViolation if an irreducible lies in no series or in two,
// or if induced characters of non-conjugate cuspidal pairs are not
// orthogonal.
HCSeriesMap hc_partition(BNDatum const &datum);

// True iff some g in G conjugates (L_a, tau_a) to (L_b, tau_b).
bool pairs_conjugate(BNDatum const &datum, CuspidalPair a, CuspidalPair b);

// larger/smaller degree for two multiplicity-free constituents, 1 for an
// irreducible, nothing otherwise.
std::optional<Rational> q_parameter(ClassFunction const &r, CharTable const &table);

struct DisconnectedCheck
{
  std::size_t terms = 0;       // |G / (L G°)|
  bool restriction = false;    // Res_{G°} R^G(phi) = sum_a ^a R^{G°}(Res_{L°} phi)
  bool adjoint = false;        // Res_{L°} *R^G(psi) = *R^{G°}(Res_{G°} psi) for all psi
  bool contains = false;       // Res_{G°} R^G(phi) - R^{G°}(tau°) is a character
};

DisconnectedCheck disconnected_restriction_check(BNDatum const &datum, std::size_t record,
                                                 ClassFunction const &phi);

} // namespace hcw

#endif // HCW_HC_SERIES_HPP
