#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hcw/error.hpp"
#include "hcw/laurent.hpp"

namespace hcw
{

LaurentPoly::LaurentPoly(long constant)
{
  if (constant != 0)
    coeffs_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(long low, std::vector<BigInt> coeffs)
: low_(low), coeffs_(std::move(coeffs))
{ normalize(); }

LaurentPoly LaurentPoly::monomial(BigInt const &c, long exponent)
{ return LaurentPoly(exponent, {c}); }

void LaurentPoly::normalize()
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();

  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](BigInt const &c) { return c != 0; });
  low_ += std::distance(coeffs_.begin(), first);
  coeffs_.erase(coeffs_.begin(), first);

  if (coeffs_.empty())
    low_ = 0;
}

BigInt LaurentPoly::coeff(long exponent) const
{
  if (exponent < low_ || exponent > high())
    return 0;
  return coeffs_[exponent - low_];
}

BigInt LaurentPoly::content() const
{
  BigInt g = 0;
  for (auto const &c : coeffs_)
    g = gcd(g, c);
  return g;
}

LaurentPoly LaurentPoly::operator-() const
{
  LaurentPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

LaurentPoly &LaurentPoly::operator+=(LaurentPoly const &rhs)
{
  if (rhs.is_zero())
    return *this;
  if (is_zero())
    return *this = rhs;

  long const lo = std::min(low_, rhs.low_);
  long const hi = std::max(high(), rhs.high());

  std::vector<BigInt> sum(hi - lo + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum[low_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    sum[rhs.low_ - lo + i] += rhs.coeffs_[i];

  low_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(LaurentPoly const &rhs)
{ return *this += -rhs; }

LaurentPoly &LaurentPoly::operator*=(LaurentPoly const &rhs)
{
  if (is_zero() || rhs.is_zero()) {
    *this = LaurentPoly();
    return *this;
  }

  std::vector<BigInt> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];

  low_ += rhs.low_;
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
  LaurentPoly result(1), base = *this;
  while (e) {
    if (e & 1u)
      result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(LaurentPoly const &divisor) const
{
  if (divisor.is_zero())
    throw ValidationError("division by the zero polynomial");
  if (abs(divisor.leading()) != 1)
    throw ValidationError("divide_exact: divisor must have unit leading coefficient");
  if (is_zero())
    return LaurentPoly();

  std::vector<BigInt> rem = coeffs_;
  std::size_t const dn = divisor.coeffs_.size();
  if (rem.size() < dn)
    return std::nullopt;

  std::vector<BigInt> quot(rem.size() - dn + 1, 0);
  BigInt const &lead = divisor.leading();

  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt const c = rem[i + dn - 1] * lead; // lead == +-1
    quot[i] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < dn; ++j)
      rem[i + j] -= c * divisor.coeffs_[j];
  }

  for (auto const &r : rem)
    if (r != 0)
      return std::nullopt;

  return LaurentPoly(low_ - divisor.low_, std::move(quot));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(BigInt const &d) const
{
  if (d == 0)
    throw ValidationError("division by zero");

  std::vector<BigInt> quot;
  quot.reserve(coeffs_.size());
  for (auto const &c : coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      return std::nullopt;
    quot.push_back(c / d);
  }
  return LaurentPoly(low_, std::move(quot));
}

LaurentPoly LaurentPoly::substitute_power(unsigned k) const
{
  if (k == 0) {
    BigInt sum = 0;
    for (auto const &c : coeffs_)
      sum += c;
    return LaurentPoly(0, {sum});
  }

  if (is_zero())
    return *this;

  std::vector<BigInt> out((coeffs_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i * k] = coeffs_[i];
  return LaurentPoly(low_ * static_cast<long>(k), std::move(out));
}

Rational LaurentPoly::eval(Rational const &q0) const
{
  if (sgn(q0) == 0)
    throw ValidationError("Laurent polynomial evaluated at 0");

  // Horner on the polynomial part, then scale by q0^low.
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * q0 + coeffs_[i];

  Rational scale = 1;
  Rational const base = low_ >= 0 ? q0 : Rational(1) / q0;
  for (long i = 0; i < std::labs(low_); ++i)
    scale *= base;

  acc *= scale;
  acc.canonicalize();
  return acc;
}

std::string LaurentPoly::to_string(std::string const &var) const
{
  if (is_zero())
    return "0";

  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt c = coeffs_[i];
    if (c == 0)
      continue;
    long const e = low_ + static_cast<long>(i);

    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;

    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1)
      os << c << "*";
    os << var;
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const
{
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    auto const &c = coeffs_[i];
    if (c == 0)
      continue;
    nlohmann::json coeff;
    if (c.fits_slong_p())
      coeff = c.get_si();
    else
      coeff = c.get_str();
    terms.push_back({low_ + static_cast<long>(i), coeff});
  }
  return {{"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(nlohmann::json const &j)
{
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("Laurent polynomial JSON needs a \"terms\" array");

  LaurentPoly p;
  for (auto const &t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw ParseError("Laurent term must be [exponent, coefficient]");

    BigInt c;
    if (t[1].is_number_integer())
      c = BigInt(t[1].get<long>());
    else if (t[1].is_string() && c.set_str(t[1].get<std::string>(), 10) == 0)
      ;
    else
      throw ParseError("Laurent coefficient must be an integer");

    p += monomial(c, t[0].get<long>());
  }
  return p;
}

Rational laurent_eval(LaurentPoly const &p, Rational const &q0)
{ return p.eval(q0); }

LaurentPoly cyclotomic_poly(unsigned n)
{
  if (n == 0)
    throw ValidationError("cyclotomic_poly: n must be positive");

  static std::mutex mutex;
  static std::map<unsigned, LaurentPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end())
      return it->second;
  }

  LaurentPoly p = LaurentPoly::monomial(1, n) - LaurentPoly(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d)
      continue;
    auto q = p.divide_exact(cyclotomic_poly(d));
    if (!q)
      throw InvariantViolation("q^n - 1 not divisible by Phi_d");
    p = std::move(*q);
  }

  std::lock_guard lock(mutex);
  cache.emplace(n, p);
  return p;
}

unsigned CycloFactorization::multiplicity(unsigned d) const
{
  for (auto const &[dd, m] : factors)
    if (dd == d)
      return m;
  return 0;
}

LaurentPoly CycloFactorization::expand() const
{
  LaurentPoly r = LaurentPoly::monomial(unit_constant, unit_exponent);
  for (auto const &[d, m] : factors)
    r *= cyclotomic_poly(d).pow(m);
  return r * remainder;
}

std::string CycloFactorization::to_string() const
{
  std::ostringstream os;
  os << unit_constant << " * q^" << unit_exponent;
  for (auto const &[d, m] : factors)
    os << " * Phi_" << d << "(q)^" << m;
  if (!fully_factored())
    os << " * (" << remainder.to_string() << ")";
  return os.str();
}

std::string CycloFactorization::to_compact_string() const
{
  std::ostringstream os;
  if (unit_constant == -1)
    os << "-";
  else if (unit_constant != 1 || (factors.empty() && fully_factored()))
    os << unit_constant;
  if (unit_exponent != 0) {
    os << "q";
    if (unit_exponent != 1)
      os << "^" << unit_exponent;
  }
  for (auto const &[d, m] : factors) {
    os << "Phi_" << d << "(q)";
    if (m != 1)
      os << "^" << m;
  }
  if (!fully_factored())
    os << "(" << remainder.to_string() << ")";
  return os.str();
}

CycloFactorization cyclo_factor(LaurentPoly const &p, unsigned max_d)
{
  if (p.is_zero())
    throw ValidationError("cyclo_factor: zero polynomial");

  CycloFactorization f;
  f.unit_exponent = p.low();
  f.unit_constant = p.content();
  if (p.leading() < 0)
    f.unit_constant = -f.unit_constant;

  LaurentPoly rest = LaurentPoly(0, p.coeffs());
  rest = *rest.divide_exact(f.unit_constant);

  for (unsigned d = 1; d <= max_d; ++d) {
    LaurentPoly const phi = cyclotomic_poly(d);
    unsigned mult = 0;
    while (rest.high() >= phi.high()) {
      auto q = rest.divide_exact(phi);
      if (!q)
        break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult)
      f.factors.emplace_back(d, mult);
  }

  f.remainder = std::move(rest);
  return f;
}

} // namespace hcw
