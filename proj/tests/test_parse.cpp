#include "doctest.h"

#include <random>

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/parse.hpp"
#include "gdet/verify/oracles.hpp"

using namespace gdet;

namespace {

std::size_t error_offset(const GroupSpec& g, const std::string& text) {
  try {
    parse_element(g, text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no ParseError for '" << text << "'");
  return 0;
}

RingElement poly_elem(const GroupSpec& g, std::vector<Int> f, std::vector<Int> gp = {}) {
  const std::size_t m = g.rotation_modulus();
  f.resize(m);
  if (!g.has_reflection()) return RingElement(g, CyclicPoly(m, f));
  gp.resize(m);
  return RingElement(g, CyclicPoly(m, f), CyclicPoly(m, gp));
}

}  // namespace

TEST_CASE("parse examples") {
  const auto q12 = GroupSpec::dicyclic(3);
  CHECK(parse_element(q12, "x^2+1") == poly_elem(q12, {1, 0, 1}));
  CHECK(parse_element(q12, "1 - x + y*(1+x^3)") == poly_elem(q12, {1, -1}, {1, 0, 0, 1}));
  CHECK(parse_element(q12, "1 - x + y*(1+x^3)") == parse_element(q12, "1,-1,0,0,0,0;1,0,0,1,0,0"));
  CHECK(det_exact(parse_element(q12, "x^2+1")) == 16);
  // exponents past the modulus reduce
  CHECK(parse_element(q12, "x^8") == parse_element(q12, "x^2"));
  CHECK(parse_element(q12, "x^18446744073709551615") == parse_element(q12, "x^3"));
  // x y = y x^{-1}
  CHECK(parse_element(q12, "x*y") == parse_element(q12, "y*x^5"));
  // y^2 = x^n
  CHECK(parse_element(q12, "y^2") == parse_element(q12, "x^3"));
  CHECK(parse_element(q12, "y^4") == parse_element(q12, "1"));
  CHECK(parse_element(q12, "y*y*y") == parse_element(q12, "y^3"));
  CHECK(parse_element(GroupSpec::dihedral(3), "y*y") == parse_element(GroupSpec::dihedral(3), "1"));
  CHECK(parse_element(q12, "3x^2 - 2(x+1)^2") == poly_elem(q12, {-2, -4, 1}));
  CHECK(parse_element(q12, "-(-x)") == parse_element(q12, "x"));
  CHECK(parse_element(q12, "(1+x)^3") == poly_elem(q12, {1, 3, 3, 1}));
  CHECK(parse_element(q12, "123456789012345678901234567890") ==
        poly_elem(q12, {Int("123456789012345678901234567890")}));
  CHECK(parse_element(GroupSpec::cyclic(4), "1,2,3,4,5") == poly_elem(GroupSpec::cyclic(4), {6, 2, 3, 4}));
}

TEST_CASE("parse errors carry offsets") {
  const auto q12 = GroupSpec::dicyclic(3);
  CHECK(error_offset(q12, "x^") == 1);
  CHECK(error_offset(q12, "x^^2") == 1);
  CHECK(error_offset(q12, "1 + ") == 4);
  CHECK(error_offset(q12, "(1+x") == 0);
  CHECK(error_offset(q12, "1 + z") == 4);
  CHECK(error_offset(q12, "x)") == 1);
  CHECK(error_offset(q12, "") == 0);
  CHECK(error_offset(q12, "x^99999999999999999999999") == 2);
  CHECK(error_offset(q12, "(1+x)^5000") == 5);
  CHECK(error_offset(GroupSpec::cyclic(5), "1 + y") == 4);
  CHECK(error_offset(q12, "1,2,3") == 5);
  CHECK(error_offset(q12, "1,2;3;4") == 5);
  CHECK(error_offset(q12, "1,,2;3") == 2);
  CHECK(error_offset(q12, "1,a;3") == 2);
  CHECK(error_offset(GroupSpec::cyclic(5), "1,2;3") == 3);
  CHECK_THROWS_AS(parse_element(q12, "x^"), UsageError);
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(11);
  std::vector<GroupSpec> groups;
  for (std::size_t n = 1; n <= 7; ++n) {
    groups.push_back(GroupSpec::cyclic(n));
    groups.push_back(GroupSpec::dihedral(n));
    groups.push_back(GroupSpec::dicyclic(n));
  }
  for (const auto& g : groups) {
    for (int i = 0; i < 60; ++i) {
      const auto a = verify::random_element(g, -9, 9, rng);
      REQUIRE(parse_element(g, serialize_element(a)) == a);
      REQUIRE(parse_element(g, format_element(a)) == a);
    }
    const auto z = RingElement::zero(g);
    CHECK(parse_element(g, format_element(z)) == z);
    CHECK(parse_element(g, serialize_element(z)) == z);
  }
  CHECK(format_element(parse_element(GroupSpec::dicyclic(3), "1 - x + y*(1+x^3)")) == "1 - x + y*(1 + x^3)");
  CHECK(serialize_element(parse_element(GroupSpec::dicyclic(3), "x^2+1")) == "1,0,1,0,0,0;0,0,0,0,0,0");
  CHECK(format_poly(CyclicPoly(4, {0, -1, 0, 2})) == "-x + 2*x^3");
}
