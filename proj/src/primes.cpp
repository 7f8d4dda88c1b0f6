#include <algorithm>

#include "hcw/error.hpp"
#include "hcw/primes.hpp"

namespace hcw
{

namespace
{

constexpr unsigned long trial_bound = 1000000;

BigInt rho_factor(BigInt const &n)
{
  // Brent cycle detection with batched gcds; retries with a new constant
  // when the walk collapses.
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long batch = 64;

    auto step = [&](BigInt const &v) {
      BigInt w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };

    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i)
        y = step(y);

      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    } while (g == 1);

    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }

    if (g != n)
      return g;
  }
}

void factor_into(BigInt const &n, std::vector<BigInt> &out)
{
  if (n == 1)
    return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt const d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

bool is_probable_prime(BigInt const &n)
{ return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<BigInt> prime_divisors(BigInt n)
{
  if (n <= 0)
    throw ValidationError("prime_divisors: argument must be positive");

  std::vector<BigInt> primes;
  for (unsigned long p = 2; p <= trial_bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p))
        n /= p;
    }
  }

  std::vector<BigInt> rest;
  factor_into(n, rest);
  primes.insert(primes.end(), rest.begin(), rest.end());

  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

unsigned long multiplicative_order(BigInt const &q, BigInt const &p)
{
  BigInt qm = q % p;
  if (qm < 0)
    qm += p;
  if (qm == 0)
    throw ValidationError("multiplicative_order: p divides q");

  // Order divides p - 1; strip prime factors of p - 1 while q^(o/r) == 1.
  BigInt order = p - 1;
  for (auto const &r : prime_divisors(p - 1)) {
    while (mpz_divisible_p(order.get_mpz_t(), r.get_mpz_t())) {
      BigInt const cand = order / r;
      BigInt v;
      mpz_powm(v.get_mpz_t(), qm.get_mpz_t(), cand.get_mpz_t(), p.get_mpz_t());
      if (v != 1)
        break;
      order = cand;
    }
  }
  return order.get_ui();
}

std::optional<BigInt> zsigmondy(BigInt const &q, unsigned n)
{
  if (q < 2 || n < 2)
    throw ValidationError("zsigmondy: requires q >= 2 and n >= 2");

  BigInt qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  BigInt limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 2, 128);
  if (qn > limit)
    throw CapacityError("zsigmondy: q^n exceeds 2^128");

  for (auto const &p : prime_divisors(qn - 1)) {
    if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()))
      continue;
    if (multiplicative_order(q, p) == n)
      return p;
  }
  return std::nullopt;
}

} // namespace hcw
