#include "doctest.h"

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/laws.hpp"
#include "gdet/parse.hpp"
#include "gdet/search.hpp"

#include <set>

using namespace gdet;

namespace {

SearchSpec box(GroupSpec g, long b = 1, SearchMode mode = SearchMode::min_nontrivial) {
  SearchSpec s;
  s.group = g;
  s.coeff_bound = b;
  s.mode = mode;
  return s;
}

bool same(const SearchReport& a, const SearchReport& b) {
  if (a.best_value != b.best_value || a.best_element != b.best_element || a.spectrum.size() != b.spectrum.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.spectrum.size(); ++i) {
    const auto& x = a.spectrum[i];
    const auto& y = b.spectrum[i];
    if (x.value != y.value || x.multiplicity != y.multiplicity || !(x.example == y.example)) return false;
  }
  return a.elements_visited == b.elements_visited && a.exhausted == b.exhausted;
}

}  // namespace

TEST_CASE("lambda by box search") {
  const auto q8 = search_box(box(GroupSpec::dicyclic(2)));
  CHECK(q8.exhausted);
  CHECK(q8.elements_visited == 6561);
  CHECK(abs(q8.best_value) == 7);
  // -7 is in S(Q_8), 7 is not
  CHECK(q8.best_value == -7);
  CHECK(det_exact(*q8.best_element) == -7);

  const auto q12 = search_box(box(GroupSpec::dicyclic(3)));
  CHECK(q12.exhausted);
  CHECK(abs(q12.best_value) == 5);

  // a^2 - b^2 with |a|, |b| <= 1 never reaches 3; lambda(Z_2) = 3 needs b = 2
  const auto z2_small = search_box(box(GroupSpec::cyclic(2)));
  CHECK_FALSE(z2_small.found);
  CHECK(z2_small.elements_visited == 9);
  const auto z2 = search_box(box(GroupSpec::cyclic(2), 2));
  CHECK(z2.best_value == -3);
}

TEST_CASE("pruning is conservative") {
  for (const auto g : {GroupSpec::dicyclic(2), GroupSpec::dicyclic(3)}) {
    auto s = box(g);
    const auto pruned = search_box(s);
    s.prune = false;
    const auto full = search_box(s);
    CHECK(pruned.elements_pruned > 0);
    CHECK(full.elements_pruned == 0);
    CHECK(same(pruned, full));
  }
  auto s = box(GroupSpec::dihedral(4), 1, SearchMode::spectrum);
  s.value_cap = Int(40);
  const auto pruned = search_box(s);
  s.prune = false;
  CHECK(same(pruned, search_box(s)));
}

TEST_CASE("spectrum of Q_8 lies in the characterized set") {
  auto s = box(GroupSpec::dicyclic(2), 1, SearchMode::spectrum);
  const auto r = search_box(s);
  CHECK(r.exhausted);
  std::uint64_t total = 0;
  for (const auto& e : r.spectrum) {
    CHECK(classify(SetId::Q8, {}, e.value).status == Status::in);
    CHECK(det_exact(e.example) == e.value);
    total += e.multiplicity;
  }
  CHECK(total <= 6561);
  CHECK(r.spectrum.front().value < r.spectrum.back().value);
}

TEST_CASE("serial and sharded runs agree") {
  auto s = box(GroupSpec::dicyclic(3), 1, SearchMode::spectrum);
  s.value_cap = Int(200);
  s.threads = 1;
  const auto serial = search_box(s);
  s.threads = 4;
  const auto sharded = search_box(s);
  CHECK(same(serial, sharded));
}

TEST_CASE("budgets and random mode") {
  auto s = box(GroupSpec::dicyclic(3));
  s.max_elements = 1000;
  const auto r = search_box(s);
  CHECK_FALSE(r.exhausted);
  CHECK(r.elements_visited == 1000);
  s.max_elements = 0;
  CHECK_THROWS_AS(search_box(s), UsageError);
  s.max_elements.reset();
  s.coeff_bound = 0;
  CHECK_THROWS_AS(search_box(s), UsageError);

  auto rs = box(GroupSpec::dicyclic(5), 2, SearchMode::spectrum);
  rs.random_samples = 2000;
  rs.seed = 42;
  rs.value_cap = Int(1000);
  const auto a = search_box(rs);
  const auto b = search_box(rs);
  CHECK(same(a, b));
  CHECK_FALSE(a.exhausted);
  CHECK(a.elements_visited == 2000);
}

TEST_CASE("large values fall back to exact arithmetic") {
  auto s = box(GroupSpec::dicyclic(5), 20, SearchMode::spectrum);
  s.random_samples = 200;
  const auto r = search_box(s);
  bool big = false;
  for (const auto& e : r.spectrum) {
    if (abs(e.value) > Int(1) << 61) big = true;
  }
  CHECK(big);
}

TEST_CASE("frontier search") {
  CHECK(is_frontier_value(5, -4000));
  CHECK_FALSE(is_frontier_value(5, 32 * 13));
  CHECK(is_frontier_value(5, 32 * 11));
  CHECK_FALSE(is_frontier_value(3, 160));

  const auto p5 = search_frontier(5, 1, std::nullopt);
  CHECK(p5.exhausted);
  bool hit = false;
  for (const auto& e : p5.spectrum) {
    CHECK(is_frontier_value(5, e.value));
    if (e.value == -4000) hit = true;
  }
  CHECK(hit);

  const auto p3 = search_frontier(3, 1, std::nullopt, -1);
  CHECK(p3.exhausted);
  CHECK(p3.spectrum.empty());

  const auto p13 = search_frontier(13, 1, 20000);
  CHECK_FALSE(p13.exhausted);
  CHECK(p13.spectrum.empty());
  CHECK_THROWS_AS(search_frontier(9, 1, 10), UsageError);
}

TEST_CASE("verify_lambda") {
  const std::map<std::uint64_t, long> table{{3, 5}, {5, 3}, {9, 5}, {15, 7}, {105, 11}, {1155, 13}, {15015, 16}};
  for (const auto& [n, lam] : table) {
    const auto v = verify_lambda(n);
    CHECK(v.report.exact);
    CHECK(v.report.value == lam);
    CHECK(abs(v.witness.claimed) == lam);
    CHECK(v.report.certificate.size() == 2 * static_cast<std::size_t>(lam - 2));
  }
  CHECK_THROWS_AS(verify_lambda(6), UsageError);
  CHECK_THROWS_AS(verify_lambda(1), UsageError);
}

TEST_CASE("every Q_8 value in [-300, 300] that classifies In is realized") {
  const GroupSpec q8 = GroupSpec::dicyclic(2);
  SearchSpec s;
  s.group = q8;
  s.coeff_bound = 2;
  s.mode = SearchMode::spectrum;
  s.value_cap = Int(300);
  std::set<long> realized;
  for (const auto& e : search_box(s).spectrum) realized.insert(e.value.get_si());
  // 1 + m h - y m h with h = 1 + x + x^2 + x^3: M_1 = 8m + 1, the other parts are 1
  for (long m = -38; m <= 37; ++m) {
    const auto a = parse_element(q8, "1 + " + std::to_string(m) + "*(1+x+x^2+x^3) - y*" + std::to_string(m) +
                                         "*(1+x+x^2+x^3)");
    const Int d = det_exact(a);
    REQUIRE(d == 8 * m + 1);
    realized.insert(d.get_si());
  }
  // 9q for q = 5 mod 8: M_1 = -1, M_2 = -q and |f(i)|^2 + |g(i)|^2 = 3. With
  // d = (q-1)/2, b = (q+1)/2: f(1) = 0, f(-1) = d, f(i) = 1 + i, g(1) = -1,
  // g(-1) = b, g(i) = 1.
  for (long q = -27; q <= 29; q += 8) {
    const long u = (q - 1) / 4, U = (q - 1) / 4, W = -(q + 3) / 4;
    const std::vector<Int> c{(u + 1) / 2, (-u + 1) / 2, (u - 1) / 2, (-u - 1) / 2,
                             (U + 1) / 2, W / 2,        (U - 1) / 2, W / 2};
    const Int d = det_exact(RingElement::from_coefficients(q8, c));
    REQUIRE(d == 9 * q);
    realized.insert(d.get_si());
  }
  for (int round = 0; round < 2; ++round) {
    const std::vector<long> cur(realized.begin(), realized.end());
    for (long a : cur) {
      for (long b : cur) {
        if (std::abs(a * b) <= 300) realized.insert(a * b);
      }
    }
  }
  for (long v = -300; v <= 300; ++v) {
    if (v == 0 || classify(SetId::Q8, {}, v).status != Status::in) continue;
    INFO("value ", v);
    CHECK(realized.count(v));
  }
  for (long v : realized) CHECK(classify(SetId::Q8, {}, v).status == Status::in);
}
