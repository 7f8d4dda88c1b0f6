#include <sstream>

#include "hcw/error.hpp"
#include "hcw/hecke_schur.hpp"
#include "hcw/primes.hpp"

namespace hcw
{

namespace
{

bool valid_g2_k(unsigned k)
{ return k == 1 || k == 2 || k == 5; }

unsigned zsigmondy_index(unsigned k)
{ return 6 * k; }

} // namespace

std::pair<SchurElement, SchurElement> schur_a1(unsigned k)
{
  if (k == 0)
    throw ValidationError("schur_a1 needs k >= 1");
  LaurentPoly const c = cyclotomic_poly(2).substitute_power(k);
  SchurElement one{c, "1", "A1", k, 0};
  SchurElement eps{LaurentPoly::monomial(1, -static_cast<long>(k)) * c, "eps", "A1", k, 0};
  return {one, eps};
}

LaurentPoly g2_product(unsigned k, unsigned b)
{
  if (!valid_g2_k(k))
    throw ValidationError("G2 parameter k must be 1, 2 or 5");
  if (b != 1 && b != 2)
    throw ValidationError("G2 index b must be 1 or 2");
  return cyclotomic_poly(3).substitute_power(k + b - 2) * cyclotomic_poly(6).substitute_power(k - b + 1);
}

SchurElement schur_g2(unsigned k, unsigned b)
{
  LaurentPoly const prod = g2_product(k, b);
  LaurentPoly const pre = LaurentPoly::monomial(2, 1 - 2 * static_cast<long>(k));
  return {pre * prod, "phi_{2," + std::to_string(b) + "}", "G2", k, b};
}

bool G2Row::certified() const
{
  if (!index_one_sided || lhs_at_2 == rhs_at_2)
    return false;
  for (auto const &w : witnesses)
    if (w.divides_lhs == w.divides_rhs)
      return false;
  return true;
}

G2Row g2_row(unsigned k)
{
  LaurentPoly const l = g2_product(k, 1);
  LaurentPoly const r = g2_product(k, 2);
  unsigned const max_d = 6 * k;

  G2Row row{k, cyclo_factor(l, max_d), cyclo_factor(r, max_d), zsigmondy_index(k), false, 0, 0, {}};
  if (!row.lhs.fully_factored() || !row.rhs.fully_factored())
    throw InvariantViolation("G2 Schur product did not factor into cyclotomic polynomials");
  if (row.lhs.expand() != l || row.rhs.expand() != r)
    throw InvariantViolation("cyclotomic factorization does not reproduce its input");

  row.index_one_sided = (row.lhs.multiplicity(row.index) > 0) != (row.rhs.multiplicity(row.index) > 0);
  row.lhs_at_2 = laurent_eval(l, 2);
  row.rhs_at_2 = laurent_eval(r, 2);

  for (unsigned q0 : {3u, 4u, 5u, 7u, 8u, 9u}) {
    auto const p = zsigmondy(q0, row.index);
    if (!p)
      throw InvariantViolation("missing Zsigmondy prime");
    BigInt const lv = laurent_eval(l, q0).get_num();
    BigInt const rv = laurent_eval(r, q0).get_num();
    row.witnesses.push_back({q0, *p, mpz_divisible_p(lv.get_mpz_t(), p->get_mpz_t()) != 0,
                             mpz_divisible_p(rv.get_mpz_t(), p->get_mpz_t()) != 0});
  }
  return row;
}

std::string g2_table_tsv()
{
  std::ostringstream os;
  os << "k\tPhi_3(q^(k-1))Phi_6(q^k)\tPhi_3(q^k)Phi_6(q^(k-1))\n";
  for (unsigned k : {1u, 2u, 5u}) {
    auto const row = g2_row(k);
    os << k << "\t" << row.lhs.to_compact_string() << "\t" << row.rhs.to_compact_string() << "\n";
  }
  return os.str();
}

nlohmann::json g2_table_json()
{
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned k : {1u, 2u, 5u}) {
    auto const row = g2_row(k);
    nlohmann::json w = nlohmann::json::array();
    for (auto const &z : row.witnesses)
      w.push_back({{"q", z.q0},
                   {"prime", z.prime.get_str()},
                   {"divides_lhs", z.divides_lhs},
                   {"divides_rhs", z.divides_rhs}});
    rows.push_back({{"k", k},
                    {"lhs", row.lhs.to_compact_string()},
                    {"rhs", row.rhs.to_compact_string()},
                    {"lhs_factored", row.lhs.to_string()},
                    {"rhs_factored", row.rhs.to_string()},
                    {"zsigmondy_index", row.index},
                    {"index_one_sided", row.index_one_sided},
                    {"lhs_at_2", row.lhs_at_2.get_str()},
                    {"rhs_at_2", row.rhs_at_2.get_str()},
                    {"witnesses", w},
                    {"certified", row.certified()}});
  }
  return {{"table", rows}};
}

Rational schur_ratio(SchurElement const &big, SchurElement const &small, Rational const &q0)
{
  Rational const den = laurent_eval(small.value, q0);
  if (sgn(den) == 0)
    throw ValidationError("Schur element vanishes at q0");
  return laurent_eval(big.value, q0) / den;
}

std::vector<Rational> predicted_degrees(Rational const &dim_pi, std::vector<SchurElement> const &c,
                                        Rational const &q0)
{
  std::vector<Rational> out;
  for (auto const &s : c) {
    Rational const v = laurent_eval(s.value, q0);
    if (sgn(v) == 0)
      throw ValidationError("Schur element vanishes at q0");
    out.push_back(dim_pi / v);
  }
  return out;
}

Rational degree_constant(Rational const &dim_pi, std::vector<SchurElement> const &c,
                         std::vector<unsigned long> const &phi_degrees, Rational const &q0)
{
  if (c.size() != phi_degrees.size())
    throw ValidationError("one degree per Schur element required");
  Rational sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational const d(phi_degrees[i]);
    sum += d * d / laurent_eval(c[i].value, q0);
  }
  if (sgn(sum) == 0)
    throw ValidationError("degenerate degree sum");
  return dim_pi / sum;
}

} // namespace hcw
