#include "gdet/ntheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdet {

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factor_u64(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factor_u64(n)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factor_u64(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

int valuation(const Int& v, std::uint64_t p) {
  if (v == 0) throw std::invalid_argument("valuation of zero");
  Int q = v;
  int k = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++k;
  }
  return k;
}

int valuation(std::uint64_t v, std::uint64_t p) {
  if (v == 0) throw std::invalid_argument("valuation of zero");
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

Int strip_prime(const Int& v, std::uint64_t p) {
  if (v == 0) throw std::invalid_argument("strip_prime of zero");
  Int q = v;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
  return q;
}

Factorization factor_int(const Int& v, std::uint64_t trial_limit) {
  Factorization out;
  Int n = abs(v);
  if (n == 0) throw std::invalid_argument("factor_int of zero");
  for (std::uint64_t p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
    if (n == 1) break;
    if (Int(p) * p > n) break;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    out.primes.emplace_back(Int(p), e);
  }
  if (n == 1) {
    out.complete = true;
  } else if (is_prime(n)) {
    out.primes.emplace_back(n, 1);
    out.complete = true;
  }
  return out;
}

std::uint64_t smallest_prime_not_dividing(const Int& m) {
  if (m == 0) throw std::invalid_argument("every prime divides zero");
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(Int(p))) continue;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return p;
  }
}

Int ipow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace gdet
