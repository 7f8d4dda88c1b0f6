#ifndef HCW_LAURENT_HPP
#define HCW_LAURENT_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace hcw
{

using BigInt = mpz_class;
using Rational = mpq_class;

// Integer Laurent polynomial sum_i coeffs[i] q^(low + i). The leading and
// trailing coefficients are nonzero unless the polynomial is zero; the zero
// polynomial has low == 0 and no coefficients.
class LaurentPoly
{
public:
  LaurentPoly() = default;
  LaurentPoly(long constant);
  LaurentPoly(long low, std::vector<BigInt> coeffs);

  static LaurentPoly monomial(BigInt const &c, long exponent);
  static LaurentPoly q()
  { return monomial(1, 1); }

  bool is_zero() const
  { return coeffs_.empty(); }

  long low() const
  { return low_; }

  long high() const
  { return low_ + static_cast<long>(coeffs_.size()) - 1; }

  std::vector<BigInt> const &coeffs() const
  { return coeffs_; }

  BigInt coeff(long exponent) const;

  BigInt const &leading() const
  { return coeffs_.back(); }

  BigInt const &trailing() const
  { return coeffs_.front(); }

  // gcd of the coefficients, positive; 0 for the zero polynomial.
  BigInt content() const;

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(LaurentPoly const &rhs);
  LaurentPoly &operator-=(LaurentPoly const &rhs);
  LaurentPoly &operator*=(LaurentPoly const &rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, LaurentPoly const &rhs)
  { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, LaurentPoly const &rhs)
  { return lhs -= rhs; }
  friend LaurentPoly operator*(LaurentPoly lhs, LaurentPoly const &rhs)
  { return lhs *= rhs; }

  LaurentPoly pow(unsigned e) const;

  // Exact quotient by a divisor whose leading coefficient is +-1, or
  // nothing if the division leaves a remainder.
  std::optional<LaurentPoly> divide_exact(LaurentPoly const &divisor) const;

  // Exact quotient by an integer; nothing unless every coefficient is
  // divisible.
  std::optional<LaurentPoly> divide_exact(BigInt const &d) const;

  // p(q^k) for k >= 0; for k == 0 this is the constant p(1).
  LaurentPoly substitute_power(unsigned k) const;

  Rational eval(Rational const &q0) const;

  friend bool operator==(LaurentPoly const &, LaurentPoly const &) = default;

  // e.g. "2*q^-1 + 3 - q^2"
  std::string to_string(std::string const &var = "q") const;

  // Sparse serialization {"terms": [[exp, coeff], ...]} with coefficients
  // as decimal strings when they do not fit in 64 bits.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(nlohmann::json const &j);

private:
  void normalize();

  long low_ = 0;
  std::vector<BigInt> coeffs_;
};

Rational laurent_eval(LaurentPoly const &p, Rational const &q0);

// Phi_n(q), computed by exact division of q^n - 1 by Phi_d(q) for the
// proper divisors d of n.
LaurentPoly cyclotomic_poly(unsigned n);

// c * q^a * prod Phi_d(q)^mult * remainder.
struct CycloFactorization
{
  BigInt unit_constant = 1;
  long unit_exponent = 0;
  std::vector<std::pair<unsigned, unsigned>> factors; // (d, multiplicity), ascending d
  LaurentPoly remainder = LaurentPoly(1);

  bool fully_factored() const
  { return remainder == LaurentPoly(1); }

  unsigned multiplicity(unsigned d) const;

  LaurentPoly expand() const;

  // "c * q^a * Phi_3(q)^1 * Phi_12(q)^1"
  std::string to_string() const;

  // Compact form without unit exponent or trivial exponents,
  // e.g. "3Phi_6(q)" or "Phi_3(q)Phi_6(q)^2".
  std::string to_compact_string() const;
};

// Greedy trial division by Phi_1, ..., Phi_max_d after extracting the unit
// c * q^a (c carries the content and the sign of the leading coefficient).
CycloFactorization cyclo_factor(LaurentPoly const &p, unsigned max_d);

} // namespace hcw

#endif // HCW_LAURENT_HPP
