#include "doctest.h"

#include <random>

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/laws.hpp"
#include "gdet/ntheory.hpp"
#include "gdet/verify/oracles.hpp"
#include "gdet/witnesses.hpp"

using namespace gdet;

TEST_CASE("check_divisibility examples") {
  const auto q12 = GroupSpec::dicyclic(3);
  auto v = check_divisibility(q12, 6);
  CHECK(v.status == Status::out);
  CHECK(v.code == "DIV_2");
  v = check_divisibility(q12, 9);
  CHECK(v.status == Status::out);
  CHECK(v.code == "DIV_P_2A1");
  CHECK(check_divisibility(q12, 16).status == Status::in);
  CHECK(check_divisibility(q12, 27).status == Status::in);
  CHECK_THROWS_AS(check_divisibility(q12, 0), UsageError);

  // Q_{4n}, n = 6: 2 || n needs 2^8; 3 || n needs 3^3
  const auto q24 = GroupSpec::dicyclic(6);
  CHECK(check_divisibility(q24, 128).status == Status::out);
  CHECK(check_divisibility(q24, 256).status != Status::out);
  CHECK(check_divisibility(q24, 9).status == Status::out);
  // cyclic: 4 | n needs 2^{alpha+2}
  CHECK(check_divisibility(GroupSpec::cyclic(4), 8).code == "DIV_CYCLIC_2");
  CHECK(check_divisibility(GroupSpec::cyclic(4), 16).status != Status::out);
  CHECK(check_divisibility(GroupSpec::cyclic(9), 9).code == "DIV_CYCLIC_P_A1");
  CHECK(check_divisibility(GroupSpec::cyclic(9), 27).status != Status::out);
  CHECK(check_divisibility(GroupSpec::cyclic(9), 2).status == Status::in);
  // dihedral: 2^2, 2^4, 2^{2t+4}
  CHECK(check_divisibility(GroupSpec::dihedral(9), 2).code == "DIV_DIHEDRAL_2");
  CHECK(check_divisibility(GroupSpec::dihedral(6), 8).code == "DIV_DIHEDRAL_2");
  CHECK(check_divisibility(GroupSpec::dihedral(12), 128).code == "DIV_DIHEDRAL_2");
  CHECK(check_divisibility(GroupSpec::dihedral(12), 256).status != Status::out);
  CHECK(check_divisibility(GroupSpec::dihedral(9), 3 * 3 * 3 * 3).code == "DIV_DIHEDRAL_P_2T1");
}

TEST_CASE("check_odd_residue") {
  const auto q8 = GroupSpec::dicyclic(2);
  CHECK(check_odd_residue(q8, 7).status == Status::out);
  CHECK(check_odd_residue(q8, 7).code == "RES_MOD8");
  CHECK(check_odd_residue(q8, -7).status != Status::out);
  CHECK(check_odd_residue(q8, 5).code == "RES_SQUARE_FACTOR");
  CHECK(check_odd_residue(q8, 45).status != Status::out);
  CHECK(check_odd_residue(q8, 17).status != Status::out);
  // Q_{24}: 2 || 6, 3 || 6; -3^beta needs beta >= 7
  const auto q24 = GroupSpec::dicyclic(6);
  CHECK(check_odd_residue(q24, -27).code == "RES_PRIME_POWER");
  CHECK(check_odd_residue(q24, ipow(Int(-3), 7)).status != Status::out);
  CHECK_THROWS_AS(check_odd_residue(GroupSpec::dicyclic(3), 5), UsageError);
  CHECK_THROWS_AS(check_odd_residue(q8, 4), UsageError);
}

TEST_CASE("classify examples") {
  CHECK(classify(SetId::Q8, {}, 9).status == Status::in);
  CHECK(classify(SetId::Q8, {}, -7).status == Status::in);
  CHECK(classify(SetId::Q8, {}, 7).status == Status::out);
  CHECK(classify(SetId::Q8, {}, 45).status == Status::in);
  CHECK(classify(SetId::Q8, {}, 256).status == Status::in);
  CHECK(classify(SetId::Q8, {}, 128).status == Status::out);

  CHECK(classify(SetId::Q12, {}, 5).status == Status::in);
  CHECK(classify(SetId::Q12, {}, 160).status == Status::in);
  CHECK(classify(SetId::Q12, {}, 32).status == Status::out);
  CHECK(classify(SetId::Q12, {}, 32 * 7).status == Status::out);
  CHECK(classify(SetId::Q12, {}, 32 * 121).status == Status::in);
  CHECK(classify(SetId::Q12, {}, 32 * 11).status == Status::out);

  // 96 = 2^5 3 with p = 3: 3 || M is what rules it out
  const auto v96 = classify(SetId::Q4p, 3, 96);
  CHECK(v96.status == Status::out);
  CHECK(v96.code == "Q4P_L_FORBIDDEN");
  CHECK(v96.decomposition->k == 5);
  CHECK(v96.decomposition->ell == 1);
  for (long m : {1, -1}) CHECK(classify(SetId::Q4p, 3, 32 * m).code == "Q12_TWO_FIVE");
  CHECK(classify(SetId::Q4p, 3, 160).status == Status::in);
  CHECK(classify(SetId::Q4p, 7, 32 * 3).code == "Q4P_M_TOO_SMALL");
  CHECK(classify(SetId::Q4p, 7, 32 * 25).status == Status::in);
  CHECK(classify(SetId::Q4p, 7, 32 * 27).code == "Q4P_UNRESOLVED");

  const auto frontier = classify(SetId::Q4p, 13, Int(32) * 13 * 13 * 13 * 7);
  CHECK(frontier.status == Status::unknown);
  CHECK(frontier.code == "Q4P_FRONTIER_OPEN");
  CHECK(frontier.decomposition->m == 7);
  CHECK(classify(SetId::Q4p, 5, Int(32) * 125 * 3).status == Status::in);
  CHECK(classify(SetId::Q4p, 13, Int(32) * ipow(Int(13), 5) * 3).status == Status::in);
  CHECK(classify(SetId::Q4p, 11, Int(32) * ipow(Int(11), 5) * 3).code == "Q4P_M_TOO_SMALL");
  CHECK(classify(SetId::Q4p, 11, Int(8) * 3).code == "Q4P_K_FORBIDDEN");
  CHECK(classify(SetId::Q4p, 11, Int(64) * ipow(Int(11), 4)).status == Status::in);

  CHECK(classify(SetId::Zp, 2, 2).status == Status::out);
  CHECK(classify(SetId::Zp, 2, 4).status == Status::in);
  CHECK(classify(SetId::Zp, 5, 5).status == Status::out);
  CHECK(classify(SetId::Z2p, 3, 18).status == Status::out);
  CHECK(classify(SetId::Z2p, 3, 36).status == Status::in);
  CHECK(classify(SetId::D2p, 3, 9).status == Status::out);
  CHECK(classify(SetId::D2p, 3, 27 * 4).status == Status::in);
  CHECK(classify(SetId::D4p, 3, -1).status == Status::out);
  CHECK(classify(SetId::D4p, 3, 5).status == Status::in);
  CHECK(classify(SetId::D4p, 3, 32).status == Status::out);
  CHECK(classify(SetId::D4p, 3, 64).status == Status::in);

  CHECK_THROWS_AS(classify(SetId::Q4p, {}, 5), UsageError);
  CHECK_THROWS_AS(classify(SetId::Q4p, 9, 5), UsageError);
  CHECK_THROWS_AS(classify(SetId::D2p, 2, 5), UsageError);
  CHECK_THROWS_AS(set_from_string("Q16"), UsageError);
}

TEST_CASE("lambda_formula") {
  const std::map<std::size_t, long> table{{3, 5}, {5, 3}, {9, 5}, {15, 7}, {105, 11}, {1155, 13}, {15015, 16}, {1, 3}};
  for (const auto& [n, lam] : table) {
    const auto r = lambda_formula(GroupSpec::dicyclic(n));
    CHECK(r.exact);
    CHECK(r.value == lam);
    CHECK(r.certificate.size() == 2 * static_cast<std::size_t>(lam - 2));
  }
  const auto q8 = lambda_formula(GroupSpec::dicyclic(2));
  CHECK(q8.exact);
  CHECK(q8.value == 7);
  // 2 || 6: min(2^8, 5^2)
  const auto q24 = lambda_formula(GroupSpec::dicyclic(6));
  CHECK_FALSE(q24.exact);
  CHECK(q24.value == 25);
  // 4 || 4: min(2^16, 3^2)
  CHECK(lambda_formula(GroupSpec::dicyclic(4)).value == 9);
  CHECK_THROWS_AS(lambda_formula(GroupSpec::dihedral(3)), UsageError);
}

TEST_CASE("laws never exclude computed determinants") {
  std::mt19937_64 rng(5);
  std::vector<GroupSpec> groups;
  for (std::size_t n = 1; n <= 12; ++n) groups.push_back(GroupSpec::cyclic(n));
  for (std::size_t n = 1; n <= 8; ++n) groups.push_back(GroupSpec::dihedral(n));
  for (std::size_t n = 1; n <= 6; ++n) groups.push_back(GroupSpec::dicyclic(n));
  for (const auto& g : groups) {
    for (int i = 0; i < 300; ++i) {
      const int hi = 1 + i % 3;
      const auto a = verify::random_element(g, -hi, hi, rng);
      const Int d = det_exact(a);
      const Verdict v = check_laws(g, d);
      INFO(g.name(), " value ", d.get_str(), " code ", v.code);
      REQUIRE(v.status != Status::out);
    }
  }
}

TEST_CASE("classify agrees with witnesses") {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (unsigned k : {4, 6, 7, 9, 10}) {
      CHECK(classify(SetId::Q4p, p, witness_q4p_two_powers(p, k).claimed).status == Status::in);
    }
    for (long m = -2; m <= 2; ++m) {
      CHECK(classify(SetId::Q4p, p, witness_q4p_p_cubed(p, m).claimed).status == Status::in);
    }
    CHECK(classify(SetId::Q4p, p, witness_q4p_frontier(p, FrontierKind::half_p2plus1_2_5).claimed).status ==
          Status::in);
    for (unsigned t : {0, 1}) {
      CHECK(classify(SetId::Q4p, p, witness_q4p_frontier(p, FrontierKind::neg_2_5_p_2tplus4, {.t = t}).claimed)
                .status == Status::in);
    }
    for (int mu : {1, 2}) {
      CHECK(classify(SetId::Q4p, p, witness_q4p_frontier(p, FrontierKind::neg_half_2_4_p3_mu, {.mu = mu}).claimed)
                .status == Status::in);
    }
  }
  CHECK(classify(SetId::Q4p, 5, -4000).status == Status::in);
  CHECK(classify(SetId::Q4p, 13, witness_q4p_frontier(13, FrontierKind::p5_sum_of_squares).claimed).status ==
        Status::in);
}
