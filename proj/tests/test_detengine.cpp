#include "doctest.h"

#include <random>

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/ntheory.hpp"
#include "gdet/verify/oracles.hpp"

using namespace gdet;

namespace {

RingElement dicyclic(std::size_t n, std::vector<long> f, std::vector<long> g) {
  const auto grp = GroupSpec::dicyclic(n);
  return RingElement(grp, CyclicPoly::reduce(IntPoly(std::vector<Int>(f.begin(), f.end())), 2 * n),
                     CyclicPoly::reduce(IntPoly(std::vector<Int>(g.begin(), g.end())), 2 * n));
}

std::vector<GroupSpec> small_groups(std::size_t max_order) {
  std::vector<GroupSpec> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    out.push_back(GroupSpec::cyclic(n));
    if (2 * n <= max_order) out.push_back(GroupSpec::dihedral(n));
    if (4 * n <= max_order) out.push_back(GroupSpec::dicyclic(n));
  }
  return out;
}

bool is_square(const Int& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()); }

}  // namespace

TEST_CASE("Q_12 with f = x^2 + 1") {
  const auto a = dicyclic(3, {1, 0, 1}, {});
  CHECK(measure_poly(a) == CyclicPoly::reduce(IntPoly{2, 0, 1, 0, 1}, 6));
  CHECK(det_exact(a) == 16);
  CHECK(det_matrix_oracle(a) == 16);
  const auto fd = det_factored(a);
  CHECK(fd.total == 16);
  const std::map<std::uint64_t, Int> expected{{1, 4}, {2, 4}, {3, 1}, {6, 1}};
  CHECK(fd.parts == expected);
}

TEST_CASE("small named values") {
  CHECK(det_exact(dicyclic(3, {}, {1})) == -1);
  for (const auto& g : {GroupSpec::dicyclic(3), GroupSpec::dihedral(4), GroupSpec::cyclic(7)}) {
    CHECK(det_exact(RingElement::identity(g)) == 1);
  }
  // 0 at the identity, 1 elsewhere
  const std::map<std::size_t, long> trivial{{2, -7}, {5, -19}};
  for (const auto& [n, expected] : trivial) {
    const auto g = GroupSpec::dicyclic(n);
    std::vector<Int> c(g.order(), 1);
    c[0] = 0;
    const auto e = RingElement::from_coefficients(g, c);
    CHECK(det_exact(e) == expected);
    CHECK(det_matrix_oracle(e) == expected);
    CHECK(det_factored(e).total == expected);
  }
  CHECK(det_exact(RingElement(GroupSpec::cyclic(5), CyclicPoly(5))) == 0);
  CHECK_THROWS_AS(measure_poly(RingElement::identity(GroupSpec::cyclic(3))), UsageError);
  const auto id_parts = det_factored(RingElement::identity(GroupSpec::dicyclic(6))).parts;
  for (const auto& [d, v] : id_parts) CHECK(v == 1);
}

TEST_CASE("measure polynomial matches brute-force convolution") {
  // index arithmetic only, no cyclic_mul or reciprocal
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto g = GroupSpec::dicyclic(n);
      const auto a = verify::random_element(g, -3, 3, rng);
      const std::size_t m = 2 * n;
      std::vector<Int> b(m);
      for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
          b[(p + m - q) % m] += a.f()[p] * a.f()[q];
          b[(p + m - q + n) % m] -= a.g()[p] * a.g()[q];
        }
      }
      REQUIRE(measure_poly(a) == CyclicPoly(m, b));
    }
  }
}

TEST_CASE("det_exact equals the matrix oracle (|G| <= 24)") {
  std::mt19937_64 rng(101);
  for (const auto& g : small_groups(24)) {
    for (int i = 0; i < 12; ++i) {
      const int hi = (i % 3 == 0) ? 1 : 4;
      const auto a = verify::random_element(g, -hi, hi, rng);
      const Int expected = det_matrix_oracle(a);
      REQUIRE(det_exact(a) == expected);
      REQUIRE(det_factored(a).total == expected);
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(7);
  for (const auto& g : small_groups(20)) {
    const auto a = verify::random_element(g, -2, 2, rng);
    const auto b = verify::random_element(g, -2, 2, rng);
    REQUIRE(det_exact(ring_mul(a, b)) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("swap and square laws") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto g = GroupSpec::dicyclic(n);
    for (int i = 0; i < 10; ++i) {
      const auto a = verify::random_element(g, -3, 3, rng);
      const Int sign = (n % 2) ? -1 : 1;
      REQUIRE(det_exact(a.swapped()) == sign * det_exact(a));
      REQUIRE(det_matrix_oracle(a.swapped()) == sign * det_matrix_oracle(a));
      const Int cyc = det_exact(RingElement(GroupSpec::cyclic(2 * n), a.f()));
      REQUIRE(det_exact(RingElement(g, a.f())) == cyc * cyc);
    }
  }
}

TEST_CASE("parts multiply to the total and are squares for d >= 3") {
  std::mt19937_64 rng(19);
  for (std::size_t n = 1; n <= 15; ++n) {
    for (auto grp : {GroupSpec::dicyclic(n), GroupSpec::dihedral(n)}) {
      for (int i = 0; i < 8; ++i) {
        const auto a = verify::random_element(grp, -3, 3, rng);
        const auto fd = det_factored(a);
        Int prod = 1;
        for (const auto& [d, v] : fd.parts) {
          prod *= v;
          if (d >= 3) REQUIRE(is_square(v));
        }
        REQUIRE(prod == fd.total);
        REQUIRE(fd.total == det_exact(a));
        const auto b = determinant_poly(a);
        REQUIRE(fd.parts.at(1) == b.sum());
        if (b.modulus() % 2 == 0) REQUIRE(fd.parts.at(2) == b.alternating_sum());
      }
    }
  }
}

TEST_CASE("cyclic_resultant: direct, parts and CRT routes agree") {
  std::mt19937_64 rng(29);
  for (std::size_t n : {3, 8, 30, 63, 64, 65, 96, 120, 210}) {
    for (int i = 0; i < 4; ++i) {
      std::uniform_int_distribution<int> dist(-2, 2);
      std::uniform_int_distribution<std::size_t> support(1, n);
      const std::size_t len = support(rng);
      std::vector<Int> c(n);
      for (std::size_t k = 0; k < len; ++k) c[k] = dist(rng);
      // random rotation exercises the shift sign
      const auto b = shift(CyclicPoly(n, c), static_cast<long>(rng() % n));
      const Int r = cyclic_resultant(b);
      REQUIRE(r == cyclic_resultant_modular(b));
      Int prod = 1;
      for (auto d : divisors(n)) prod *= resultant(cyclotomic(d), b.lift());
      REQUIRE(r == prod);
    }
  }
  // monic sparse B at large N takes the direct route
  const auto sparse = CyclicPoly::reduce(IntPoly{2, 0, 1, 0, 1}, 2310);
  CHECK(cyclic_resultant(sparse) == cyclic_resultant_modular(sparse));
}
