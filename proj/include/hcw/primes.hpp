#ifndef HCW_PRIMES_HPP
#define HCW_PRIMES_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace hcw
{

using BigInt = mpz_class;

bool is_probable_prime(BigInt const &n);

// Distinct prime divisors of n > 0 in ascending order: trial division up
// to 10^6, then Brent's variant of Pollard rho on the cofactor.
std::vector<BigInt> prime_divisors(BigInt n);

// Multiplicative order of q modulo the prime p (p must not divide q).
unsigned long multiplicative_order(BigInt const &q, BigInt const &p);

// Smallest prime dividing q^n - 1 but no q^m - 1 with 1 <= m < n, or
// nothing in the exceptional cases (q, n) = (2, 6) and n = 2 with q + 1 a
// power of two. Requires q >= 2, n >= 2 and q^n <= 2^128.
std::optional<BigInt> zsigmondy(BigInt const &q, unsigned n);

} // namespace hcw

#endif // HCW_PRIMES_HPP
