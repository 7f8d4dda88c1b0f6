#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hcw/cyclotomic.hpp"
#include "hcw/error.hpp"
#include "hcw/laurent.hpp"
#include "hcw/linalg.hpp"

namespace hcw
{

CyclotomicField::CyclotomicField(unsigned n) : n_(n)
{
  if (n == 0)
    throw ValidationError("cyclotomic field conductor must be positive");

  auto const phi = cyclotomic_poly(n);
  modulus_ = phi.coeffs();
  phi_ = static_cast<unsigned>(modulus_.size() - 1);

  // x^k mod Phi_n for k < n by repeated multiplication by x.
  powers_.resize(n);
  std::vector<BigInt> cur(phi_, 0);
  if (phi_ == 0)
    throw InvariantViolation("degenerate cyclotomic modulus");
  cur[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    powers_[k] = cur;
    BigInt const top = cur[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i)
      cur[i] = cur[i - 1] - top * modulus_[i];
    cur[0] = -top * modulus_[0];
  }
}

std::shared_ptr<CyclotomicField const> CyclotomicField::get(unsigned n)
{
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<CyclotomicField const>> fields;

  std::lock_guard lock(mutex);
  auto &slot = fields[n];
  if (!slot)
    slot = std::make_shared<CyclotomicField const>(n);
  return slot;
}

namespace
{

std::vector<Rational> reduce(CyclotomicField const &f, std::vector<Rational> const &v)
{
  std::vector<Rational> out(f.degree(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0)
      continue;
    if (k < f.degree()) {
      out[k] += v[k];
      continue;
    }
    auto const &p = f.power(static_cast<unsigned>(k % f.conductor()));
    for (unsigned i = 0; i < f.degree(); ++i)
      if (p[i] != 0)
        out[i] += v[k] * p[i];
  }
  return out;
}

unsigned lcm_u(unsigned a, unsigned b)
{ return std::lcm(a, b); }

} // namespace

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0), 1)
{}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value), 1)
{}

Cyclotomic::Cyclotomic(Rational const &value, unsigned conductor)
: field_(CyclotomicField::get(conductor)), coeffs_(field_->degree(), 0)
{
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Rational> const &coeffs)
: field_(CyclotomicField::get(conductor))
{
  std::vector<Rational> canonical = coeffs;
  for (auto &c : canonical)
    c.canonicalize();
  coeffs_ = reduce(*field_, canonical);
}

Cyclotomic Cyclotomic::zeta(unsigned n, long k)
{
  long const e = ((k % static_cast<long>(n)) + n) % n;
  std::vector<Rational> v(e + 1, 0);
  v[e] = 1;
  return Cyclotomic(n, v);
}

bool Cyclotomic::is_zero() const
{
  for (auto const &c : coeffs_)
    if (sgn(c) != 0)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const
{
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0)
      return false;
  return true;
}

std::optional<Rational> Cyclotomic::rational_value() const
{
  if (!is_rational())
    return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(unsigned m) const
{
  unsigned const n = conductor();
  if (m % n)
    throw ValidationError("lift: target conductor must be a multiple");
  if (m == n)
    return *this;

  unsigned const step = m / n;
  std::vector<Rational> v(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[i * step] = coeffs_[i];
  return Cyclotomic(m, v);
}

std::optional<Cyclotomic> Cyclotomic::descend(unsigned m) const
{
  unsigned const n = conductor();
  if (m == n)
    return *this;
  if (m % n == 0)
    return lift(m);
  if (n % m) {
    auto const common = descend(std::gcd(n, m));
    if (!common)
      return std::nullopt;
    return common->lift(m);
  }

  if (is_rational())
    return Cyclotomic(coeffs_[0], m);

  auto const target = CyclotomicField::get(m);
  unsigned const step = n / m;

  // Columns: images of the power basis of Q(zeta_m) in Q(zeta_n).
  Matrix<Rational> e(field_->degree(), std::vector<Rational>(target->degree(), 0));
  for (unsigned j = 0; j < target->degree(); ++j) {
    auto const &p = field_->power(j * step);
    for (unsigned i = 0; i < field_->degree(); ++i)
      e[i][j] = p[i];
  }

  std::vector<Rational> y;
  if (!solve(e, coeffs_, y))
    return std::nullopt;
  return Cyclotomic(m, y);
}

Cyclotomic Cyclotomic::in_conductor(unsigned m) const
{
  auto r = descend(m);
  if (!r)
    throw InvariantViolation("value " + to_string() + " does not lie in Q(zeta_" +
                             std::to_string(m) + ")");
  return *r;
}

Cyclotomic Cyclotomic::galois(long k) const
{
  long const n = conductor();
  long const kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1)
    throw ValidationError("galois: exponent must be coprime to the conductor");

  std::vector<Rational> out(field_->degree(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0)
      continue;
    auto const &p = field_->power(static_cast<unsigned>((i * kk) % n));
    for (unsigned j = 0; j < field_->degree(); ++j)
      if (p[j] != 0)
        out[j] += coeffs_[i] * p[j];
  }

  Cyclotomic r = *this;
  r.coeffs_ = std::move(out);
  return r;
}

Cyclotomic Cyclotomic::inverse() const
{
  if (is_zero())
    throw ValidationError("inverse of zero cyclotomic number");
  if (is_rational())
    return Cyclotomic(Rational(1) / coeffs_[0], conductor());

  unsigned const d = field_->degree();

  // Matrix of multiplication by *this on the power basis.
  Matrix<Rational> m(d, std::vector<Rational>(d, 0));
  for (unsigned j = 0; j < d; ++j) {
    std::vector<Rational> shifted(j + d, 0);
    for (unsigned i = 0; i < d; ++i)
      shifted[i + j] = coeffs_[i];
    auto const col = reduce(*field_, shifted);
    for (unsigned i = 0; i < d; ++i)
      m[i][j] = col[i];
  }

  std::vector<Rational> rhs(d, 0), y;
  rhs[0] = 1;
  if (!solve(m, rhs, y))
    throw InvariantViolation("cyclotomic inverse: singular multiplication matrix");

  Cyclotomic r = *this;
  r.coeffs_ = std::move(y);
  return r;
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &rhs)
{
  if (conductor() != rhs.conductor()) {
    unsigned const m = lcm_u(conductor(), rhs.conductor());
    *this = lift(m);
    return *this += rhs.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &rhs)
{ return *this += -rhs; }

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &rhs)
{
  if (conductor() != rhs.conductor()) {
    unsigned const m = lcm_u(conductor(), rhs.conductor());
    *this = lift(m);
    return *this *= rhs.lift(m);
  }

  if (rhs.is_rational()) {
    Rational const r = rhs.coeffs_[0];
    for (auto &c : coeffs_)
      c *= r;
    return *this;
  }
  if (is_rational()) {
    Rational const r = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    for (auto &c : coeffs_)
      c *= r;
    return *this;
  }

  std::size_t const d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(rhs.coeffs_[j]) != 0)
        prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = reduce(*field_, prod);
  return *this;
}

Cyclotomic &Cyclotomic::operator/=(Cyclotomic const &rhs)
{ return *this *= rhs.inverse(); }

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.conductor() == b.conductor())
    return a.coeffs_ == b.coeffs_;
  unsigned const m = lcm_u(a.conductor(), b.conductor());
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

bool lex_less(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a.conductor() != b.conductor()) {
    unsigned const m = lcm_u(a.conductor(), b.conductor());
    return lex_less(a.lift(m), b.lift(m));
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int const c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0)
      return c < 0;
  }
  return false;
}

std::string Cyclotomic::to_string() const
{
  if (is_rational())
    return coeffs_[0].get_str();

  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (sgn(c) == 0)
      continue;

    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;

    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1)
      os << c.get_str() << "*";
    os << "z_" << conductor();
    if (i != 1)
      os << "^" << i;
  }
  return os.str();
}

} // namespace hcw
