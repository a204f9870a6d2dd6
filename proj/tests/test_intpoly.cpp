#include "doctest.h"

#include <random>
#include <thread>

#include "gdet/intpoly.hpp"
#include "gdet/modular.hpp"
#include "gdet/ntheory.hpp"
#include "gdet/verify/oracles.hpp"

using namespace gdet;

namespace {

CyclicPoly cyc(std::size_t n, std::vector<long> c) {
  std::vector<Int> v(n);
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i];
  return CyclicPoly(n, std::move(v));
}

CyclicPoly random_cyclic(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<Int> v(n);
  for (Int& c : v) c = dist(rng);
  return CyclicPoly(n, std::move(v));
}

}  // namespace

TEST_CASE("IntPoly normalizes trailing zeros") {
  IntPoly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
  CHECK((IntPoly{1, 1} * IntPoly{-1, 1}) == IntPoly{-1, 0, 1});
  CHECK(IntPoly{-1, 0, 1}.to_string() == "x^2 - 1");
}

TEST_CASE("cyclic_mul") {
  for (std::size_t n = 2; n <= 9; ++n) {
    auto x = CyclicPoly::monomial(n, 1, 1);
    auto xn1 = CyclicPoly::monomial(n, 1, n - 1);
    CHECK(cyclic_mul(x, xn1) == CyclicPoly::monomial(n, 1, 0));
    // h_N (x - 1) = x^N - 1 = 0
    CHECK(cyclic_mul(CyclicPoly::reduce(all_ones(n), n), CyclicPoly::reduce(IntPoly{-1, 1}, n)).is_zero());
  }
  CHECK(cyclic_mul(cyc(2, {1, 1}), cyc(2, {1, 1})) == cyc(2, {2, 2}));
  CHECK_THROWS_AS(cyclic_mul(cyc(3, {1}), cyc(4, {1})), std::invalid_argument);
}

TEST_CASE("CyclicPoly::reduce folds exponents") {
  auto r = CyclicPoly::reduce(IntPoly{1, 0, 0, 0, 5, 7}, 4);
  CHECK(r == cyc(4, {6, 7, 0, 0}));
  CHECK_THROWS_AS(CyclicPoly(3, std::vector<Int>(2)), std::invalid_argument);
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(cyc(4, {0, 1})) == cyc(4, {0, 0, 0, 1}));
  CHECK(reciprocal(cyc(4, {1, 2, 3})) == cyc(4, {1, 0, 3, 2}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 12;
    auto a = random_cyclic(n, rng);
    auto b = random_cyclic(n, rng);
    CHECK(reciprocal(reciprocal(a)) == a);
    CHECK(reciprocal(cyclic_mul(a, b)) == cyclic_mul(reciprocal(a), reciprocal(b)));
  }
}

TEST_CASE("cyclic_mul is commutative and associative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 12;
    auto a = random_cyclic(n, rng);
    auto b = random_cyclic(n, rng);
    auto c = random_cyclic(n, rng);
    REQUIRE(cyclic_mul(a, b) == cyclic_mul(b, a));
    REQUIRE(cyclic_mul(cyclic_mul(a, b), c) == cyclic_mul(a, cyclic_mul(b, c)));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(2) == IntPoly{1, 1});
  CHECK(cyclotomic(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  CHECK(cyclotomic(105).coeff(7) == -2);
  for (std::size_t d = 1; d <= 120; ++d) {
    CHECK(cyclotomic(d).degree() == static_cast<long>(euler_phi(d)));
    IntPoly prod = IntPoly::constant(1);
    for (auto e : divisors(d)) prod = prod * cyclotomic(e);
    IntPoly xd = IntPoly::monomial(1, d) - IntPoly::constant(1);
    CHECK(prod == xd);
  }
}

TEST_CASE("cyclotomic table tolerates concurrent first use") {
  std::vector<std::thread> workers;
  std::vector<long> degrees(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &degrees] { degrees[t] = cyclotomic(2310 + 2 * t).degree(); });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) CHECK(degrees[t] == static_cast<long>(euler_phi(2310 + 2 * t)));
}

TEST_CASE("resultant examples") {
  CHECK(resultant(IntPoly{-2, 1}, IntPoly{-1, 0, 1}) == 3);
  CHECK(abs(resultant(cyclotomic(3), cyclotomic(6))) == 4);
  CHECK(abs(resultant(cyclotomic(4), cyclotomic(7))) == 1);
  CHECK(resultant(IntPoly{}, IntPoly{1, 1}) == 0);
  CHECK(resultant(IntPoly{3}, IntPoly{1, 0, 1}) == 9);
  CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{3}) == 9);
  CHECK(resultant(IntPoly{5}, IntPoly{7}) == 1);
  // Common root x = 1.
  CHECK(resultant(IntPoly{-1, 1}, IntPoly{-1, 0, 1}) == 0);
}

TEST_CASE("resultant agrees with Sylvester oracle and CRT path; antisymmetry") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1500; ++i) {
    IntPoly a = verify::random_poly(8, -3, 3, rng);
    IntPoly b = verify::random_poly(8, -3, 3, rng);
    if (a.is_zero() || b.is_zero()) continue;
    const Int r = resultant(a, b);
    REQUIRE(r == verify::sylvester_resultant(a, b));
    REQUIRE(r == resultant_modular(a, b));
    const int sign = ((a.degree() * b.degree()) & 1) ? -1 : 1;
    REQUIRE(r == sign * resultant(b, a));
  }
}

TEST_CASE("resultant with large coefficients crosses several CRT primes") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    IntPoly a = verify::random_poly(12, -1000000, 1000000, rng);
    IntPoly b = verify::random_poly(12, -1000000, 1000000, rng) * Int("123456789123456789");
    if (a.is_zero() || b.is_zero()) continue;
    REQUIRE(resultant(a, b) == resultant_modular(a, b));
  }
}

TEST_CASE("cyclotomic resultant identity for 1 <= d < m <= 40") {
  for (std::uint64_t m = 2; m <= 40; ++m) {
    for (std::uint64_t d = 1; d < m; ++d) {
      const Int fast = abs(resultant(cyclotomic(d), cyclotomic(m)));
      REQUIRE(fast == abs(verify::sylvester_resultant(cyclotomic(d), cyclotomic(m))));
      REQUIRE(fast == verify::cyclotomic_resultant_formula(d, m));
    }
  }
}

TEST_CASE("all_ones") {
  CHECK(all_ones(1) == IntPoly{1});
  CHECK(all_ones(3) == IntPoly{1, 1, 1});
  for (std::size_t n = 1; n < 20; ++n) CHECK(all_ones(n).eval(1) == Int(n));
  CHECK_THROWS(all_ones(0));
}

TEST_CASE("pseudo_rem identity") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    IntPoly a = verify::random_poly(10, -5, 5, rng);
    IntPoly b = verify::random_poly(4, -5, 5, rng);
    if (b.is_zero() || a.degree() < b.degree()) continue;
    IntPoly r = pseudo_rem(a, b);
    CHECK(r.degree() < b.degree());
    // lc(b)^{e} a - r must be divisible by b; check at a few integer points
    const Int scale = ipow(b.leading(), static_cast<unsigned long>(a.degree() - b.degree() + 1));
    IntPoly diff = a * scale - r;
    for (long x = -3; x <= 3; ++x) {
      const Int bx = b.eval(x);
      if (bx != 0) CHECK(mpz_divisible_p(diff.eval(x).get_mpz_t(), bx.get_mpz_t()));
    }
  }
}

TEST_CASE("modular helpers") {
  CHECK(modular::is_prime_u64(modular::crt_prime(0)));
  CHECK(modular::crt_prime(0) < (1ULL << 62));
  CHECK(modular::crt_prime(1) < modular::crt_prime(0));
  modular::CrtAccumulator crt;
  const Int target("-98765432109876543210987654321");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto p = modular::crt_prime(i);
    crt.add(modular::reduce(target, p), p);
  }
  CHECK(crt.value() == target);
}
