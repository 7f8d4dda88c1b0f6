#ifndef HCW_CYCLOTOMIC_HPP
#define HCW_CYCLOTOMIC_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hcw
{

using BigInt = mpz_class;
using Rational = mpq_class;

// Q(zeta_n) = Q[x]/(Phi_n) with the power basis 1, x, ..., x^(phi(n)-1).
// Instances are shared and immutable; obtain them through get().
class CyclotomicField
{
public:
  static std::shared_ptr<CyclotomicField const> get(unsigned n);

  unsigned conductor() const
  { return n_; }

  unsigned degree() const
  { return phi_; }

  // Coefficients of x^k mod Phi_n for 0 <= k < n.
  std::vector<BigInt> const &power(unsigned k) const
  { return powers_[k % n_]; }

  // Coefficients of Phi_n, low to high, length degree() + 1.
  std::vector<BigInt> const &modulus() const
  { return modulus_; }

  explicit CyclotomicField(unsigned n);

private:
  unsigned n_;
  unsigned phi_;
  std::vector<BigInt> modulus_;
  std::vector<std::vector<BigInt>> powers_;
};

// Exact element of Q(zeta_n) for a fixed conductor n. Arithmetic between
// elements of different conductors takes place in Q(zeta_lcm); equality
// compares values, not representations.
class Cyclotomic
{
public:
  Cyclotomic();
  Cyclotomic(long value);
  Cyclotomic(Rational const &value, unsigned conductor = 1);

  // Reduces a coefficient vector of any length modulo Phi_n.
  Cyclotomic(unsigned conductor, std::vector<Rational> const &coeffs);

  // zeta_n^k
  static Cyclotomic zeta(unsigned n, long k = 1);

  unsigned conductor() const
  { return field_->conductor(); }

  std::span<Rational const> coeffs() const
  { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> rational_value() const;

  // Same value in Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic lift(unsigned m) const;

  // Same value in Q(zeta_m) if it lies in that subfield.
  std::optional<Cyclotomic> descend(unsigned m) const;

  // Lift or descend to conductor m; throws InvariantViolation if the value
  // does not lie in Q(zeta_m).
  Cyclotomic in_conductor(unsigned m) const;

  // Image under zeta -> zeta^k, gcd(k, n) == 1.
  Cyclotomic galois(long k) const;

  Cyclotomic conj() const
  { return galois(-1); }

  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(Cyclotomic const &rhs);
  Cyclotomic &operator-=(Cyclotomic const &rhs);
  Cyclotomic &operator*=(Cyclotomic const &rhs);
  Cyclotomic &operator/=(Cyclotomic const &rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, Cyclotomic const &rhs)
  { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, Cyclotomic const &rhs)
  { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, Cyclotomic const &rhs)
  { return lhs *= rhs; }
  friend Cyclotomic operator/(Cyclotomic lhs, Cyclotomic const &rhs)
  { return lhs /= rhs; }

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);

  // Total order on values at the common conductor: lexicographic on the
  // power-basis coefficients. Only meaningful as a deterministic tie-break.
  friend bool lex_less(Cyclotomic const &a, Cyclotomic const &b);

  // e.g. "2 - z12^3 + 1/2*z12" ; rational values print as plain rationals.
  std::string to_string() const;

private:
  std::shared_ptr<CyclotomicField const> field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(Cyclotomic const &x)
{ return x.is_zero(); }

} // namespace hcw

#endif // HCW_CYCLOTOMIC_HPP
