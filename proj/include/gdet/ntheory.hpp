#pragma once

// Elementary integer number theory shared by the engines and the laws.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gdet {

using Int = mpz_class;

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);
bool is_prime(const Int& n);

// Largest k with p^k | v. v must be nonzero.
int valuation(const Int& v, std::uint64_t p);
int valuation(std::uint64_t v, std::uint64_t p);

// v with every factor p removed; v must be nonzero.
Int strip_prime(const Int& v, std::uint64_t p);

// Trial division of |v| up to `trial_limit`. `complete` is set when the
// remaining cofactor is 1 or a prime, so `primes` lists every prime factor.
struct Factorization {
  std::vector<std::pair<Int, int>> primes;
  bool complete = false;
};
Factorization factor_int(const Int& v, std::uint64_t trial_limit = 1'000'000);

// Smallest prime p with p not dividing m (m != 0).
std::uint64_t smallest_prime_not_dividing(const Int& m);

Int ipow(const Int& base, unsigned long exp);

}  // namespace gdet
