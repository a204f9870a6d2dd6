#pragma once

// Word-sized modular arithmetic used by the CRT accelerators.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace gdet::modular {

using u64 = std::uint64_t;

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 pow_mod(u64 base, u64 exp, u64 p);

// p must be prime and a != 0 mod p.
u64 inv_mod(u64 a, u64 p);

u64 reduce(const mpz_class& v, u64 p);

inline u64 reduce(std::int64_t v, u64 p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

bool is_prime_u64(u64 n);

// The i-th prime below 2^62, counting downward from 2^62 (i = 0 is the
// largest). The sequence is fixed, so every CRT run uses the same moduli.
u64 crt_prime(std::size_t i);

// Resultant over F_p of dense residue polynomials (index = exponent).
// Trailing zeros are tolerated. Zero polynomial gives 0.
u64 resultant_mod(std::vector<u64> a, std::vector<u64> b, u64 p);

// Incremental CRT with symmetric lift into (-M/2, M/2].
class CrtAccumulator {
 public:
  void add(u64 residue, u64 prime);
  mpz_class value() const;
  const mpz_class& modulus() const { return modulus_; }

 private:
  mpz_class value_ = 0;
  mpz_class modulus_ = 1;
};

}  // namespace gdet::modular
