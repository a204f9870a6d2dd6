#include "gdet/modular.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace gdet::modular {

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
  // extended Euclid; p < 2^63 so the cofactors fit in int64
  std::int64_t t = 0, new_t = 1;
  u64 r = p, new_r = a;
  while (new_r) {
    const u64 q = r / new_r;
    const std::int64_t tt = t - static_cast<std::int64_t>(q) * new_t;
    t = new_t;
    new_t = tt;
    const u64 rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(p)) : static_cast<u64>(t);
}

u64 reduce(const mpz_class& v, u64 p) {
  mpz_class r;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit inputs.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 crt_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard lock(mu);
  u64 candidate = primes.empty() ? (u64{1} << 62) : primes.back();
  while (primes.size() <= i) {
    do {
      --candidate;
    } while (!is_prime_u64(candidate));
    primes.push_back(candidate);
  }
  return primes[i];
}

namespace {

void trim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

u64 resultant_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  u64 result = 1;
  for (;;) {
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    if (n == 0) return mul_mod(result, pow_mod(b[0], m, p), p);
    // a <- a mod b
    const u64 inv_lead = inv_mod(b.back(), p);
    for (std::size_t top = a.size(); top-- > n;) {
      const u64 q = mul_mod(a[top], inv_lead, p);
      if (q == 0) continue;
      const std::size_t shift = top - n;
      for (std::size_t k = 0; k <= n; ++k) {
        a[shift + k] = sub_mod(a[shift + k], mul_mod(q, b[k], p), p);
      }
    }
    a.resize(std::min(a.size(), n));
    trim(a);
    if (a.empty()) return 0;
    // Res(A,B) = (-1)^{mn} lc(B)^{m - deg R} Res(B,R)
    const std::size_t r = a.size() - 1;
    if ((m & 1) && (n & 1)) result = result == 0 ? 0 : p - result;
    result = mul_mod(result, pow_mod(b.back(), m - r, p), p);
    std::swap(a, b);
  }
}

void CrtAccumulator::add(u64 residue, u64 prime) {
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &prime);
  mpz_class rm;
  mpz_import(rm.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &residue);
  if (modulus_ == 1) {
    value_ = rm;
    modulus_ = pm;
    return;
  }
  // value_ + modulus_ * k == residue (mod prime)
  const u64 current = reduce(value_, prime);
  const u64 mod_inv = inv_mod(reduce(modulus_, prime), prime);
  const u64 k = mul_mod(sub_mod(residue, current, prime), mod_inv, prime);
  mpz_class km;
  mpz_import(km.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &k);
  value_ += modulus_ * km;
  modulus_ *= pm;
}

mpz_class CrtAccumulator::value() const {
  mpz_class half = modulus_ / 2;
  if (value_ > half) return value_ - modulus_;
  return value_;
}

}  // namespace gdet::modular
