#include "gdet/verify/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/laws.hpp"
#include "gdet/ntheory.hpp"
#include "gdet/parse.hpp"
#include "gdet/search.hpp"
#include "gdet/verify/oracles.hpp"
#include "gdet/witnesses.hpp"

namespace gdet::verify {

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (first_.size() < 5) first_.push_back(what);
  }

  bool pass() const { return failed_ == 0 && checks_ > 0; }
  long checks() const { return checks_; }

  std::string summary(const std::string& ok_text) const {
    if (pass()) return ok_text;
    std::string s = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed";
    for (const auto& f : first_) s += "; " + f;
    return s;
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> first_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

Int u(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

std::vector<RingElement> q8_box() {
  const GroupSpec q8 = GroupSpec::dicyclic(2);
  std::vector<RingElement> out;
  std::vector<Int> c(8);
  for (int idx = 0; idx < 6561; ++idx) {
    int rest = idx;
    for (int i = 7; i >= 0; --i) {
      c[i] = rest % 3 - 1;
      rest /= 3;
    }
    out.push_back(RingElement::from_coefficients(q8, c));
  }
  return out;
}

// Criterion 1's inputs; criterion 4 reuses them.
std::vector<RingElement> engine_inputs() {
  std::vector<RingElement> out = q8_box();
  std::mt19937_64 rng(20240601);
  for (const GroupSpec& g : {GroupSpec::dicyclic(3), GroupSpec::dicyclic(5), GroupSpec::dicyclic(6),
                             GroupSpec::dihedral(6), GroupSpec::cyclic(12)}) {
    for (int i = 0; i < 1000; ++i) out.push_back(random_element(g, -5, 5, rng));
  }
  return out;
}

Outcome criterion1() {
  Tally t;
  for (const auto& a : engine_inputs()) {
    const Int exact = det_exact(a);
    const Int oracle = det_matrix_oracle(a);
    t.expect(exact == oracle, a.group().name() + " " + serialize_element(a) + ": " + exact.get_str() +
                                  " vs oracle " + oracle.get_str());
  }
  return {t.pass(), t.summary(std::to_string(t.checks()) + " elements, det_exact == matrix oracle")};
}

Outcome criterion2() {
  Tally t;
  SearchSpec s;
  s.coeff_bound = 1;
  s.group = GroupSpec::dicyclic(2);
  const auto q8 = search_box(s);
  t.expect(q8.exhausted && q8.found && abs(q8.best_value) == 7,
           "Q_8 box minimum " + q8.best_value.get_str());
  s.group = GroupSpec::dicyclic(3);
  const auto q12 = search_box(s);
  t.expect(q12.exhausted && q12.found && abs(q12.best_value) == 5,
           "Q_12 box minimum " + q12.best_value.get_str());
  const std::map<std::uint64_t, long> table{{3, 5}, {5, 3}, {9, 5}, {15, 7}, {105, 11}, {1155, 13}, {15015, 16}};
  std::string rows;
  for (const auto& [n, lam] : table) {
    const auto v = verify_lambda(n);
    bool ok = v.report.exact && v.report.value == lam && abs(det_exact(v.witness.element)) == lam &&
              v.report.certificate.size() == 2 * static_cast<std::size_t>(lam - 2);
    for (const auto& step : v.report.certificate) {
      ok = ok && check_laws(GroupSpec::dicyclic(n), step.value).status == Status::out;
    }
    t.expect(ok, "lambda(Q_" + std::to_string(4 * n) + ") = " + v.report.value.get_str());
    rows += (rows.empty() ? "" : ",") + std::to_string(n) + ":" + v.report.value.get_str();
  }
  return {t.pass(), t.summary("lambda(Q_8)=" + Int(abs(q8.best_value)).get_str() + " and lambda(Q_12)=" +
                              Int(abs(q12.best_value)).get_str() + " by search; table " + rows)};
}

// Witness w must have det exactly `want`, recomputed here.
void expect_value(Tally& t, const Witness& w, const Int& want, const std::string& label) {
  const Int d = det_exact(w.element);
  t.expect(d == want && w.claimed == want, label + ": got " + d.get_str() + ", want " + want.get_str());
}

void expect_exact_power(Tally& t, const Witness& w, std::uint64_t p, int e, const std::string& label) {
  const Int d = det_exact(w.element);
  t.expect(d != 0 && valuation(d, p) == e,
           label + ": " + std::to_string(p) + "-adic valuation " + std::to_string(d == 0 ? -1 : valuation(d, p)) +
               ", want " + std::to_string(e));
}

Outcome criterion3() {
  Tally t;
  expect_value(t, witness_basic(GroupSpec::dicyclic(3), BasicKind::sixteen), 16, "x^2+1 in Q_12");
  for (std::uint64_t n : {3, 5, 7}) {
    expect_value(t, witness_basic(GroupSpec::dicyclic(n), BasicKind::two_n_minus_one), u(2 * n - 1),
                 "2n-1, n=" + std::to_string(n));
  }
  for (std::uint64_t n : {3, 5, 7, 9, 15}) {
    int found = 0;
    for (std::uint64_t p = 3; found < 3; p += 2) {
      if (!is_prime(u(p)) || n % p == 0) continue;
      ++found;
      const Int want = (p % 4 == 1 ? 1 : -1) * u(p);
      expect_value(t, witness_prime(n, p), want, "delta p, n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  }
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const Int P = u(p);
    const std::string tag = " p=" + std::to_string(p);
    for (unsigned k : {4, 6, 7, 9}) expect_value(t, witness_q4p_two_powers(p, k), Int(1) << k, "2^" + std::to_string(k) + tag);
    const long delta = p % 4 == 1 ? 1 : -1;
    for (long m = -2; m <= 2; ++m) {
      expect_value(t, witness_q4p_p_cubed(p, m), delta * P * P * P * (1 + 4 * m),
                   "delta p^3 (1+4m), m=" + std::to_string(m) + tag);
    }
    for (unsigned tt : {0u, 1u}) {
      expect_value(t, witness_q4p_frontier(p, FrontierKind::neg_2_5_p_2tplus4, {.t = tt}),
                   -32 * ipow(P, 2 * tt + 4), "-2^5 p^(2t+4), t=" + std::to_string(tt) + tag);
    }
    const Int half = (P * P + 1) / 2;
    expect_value(t, witness_q4p_frontier(p, FrontierKind::half_p2plus1_2_5), 32 * half, "(p^2+1)/2 2^5" + tag);
    for (int mu : {1, 2}) {
      expect_value(t, witness_q4p_frontier(p, FrontierKind::neg_half_2_4_p3_mu, {.mu = mu}),
                   -16 * half * P * P * P * mu, "-(p^2+1)/2 2^4 p^3 mu, mu=" + std::to_string(mu) + tag);
    }
  }
  for (std::uint64_t p : {5, 13}) {
    expect_value(t, witness_q4p_frontier(p, FrontierKind::p5_sum_of_squares), 32 * ipow(u(p), 5),
                 "2^5 p^5, p=" + std::to_string(p));
  }
  expect_value(t, witness_q4p_frontier(5, FrontierKind::p5_special), -32 * 125, "-2^5 5^3");
  for (std::uint64_t n : {4, 6, 9}) {
    const auto w = witness_divisibility_sharpness(GroupSpec::cyclic(n), SharpnessKind::cyclic_n_sq);
    const Int d = det_exact(w.element);
    // the value carries the sign (-1)^{n-1}; its magnitude is n^2
    t.expect(abs(d) == u(n * n) && d == w.claimed, "cyclic n^2, n=" + std::to_string(n) + ": " + d.get_str());
  }
  for (std::uint64_t n : {9, 27, 6, 12}) {
    const std::string tag = " n=" + std::to_string(n);
    const int a3 = valuation(n, 3);
    const int a2 = valuation(n, 2);
    expect_exact_power(t, witness_divisibility_sharpness(GroupSpec::cyclic(n), SharpnessKind::cyclic_p_shift, {.p = 3}),
                       3, a3 + 1, "3^(alpha+1) in Z_n" + tag);
    if (a2 >= 2) {
      expect_exact_power(t, witness_divisibility_sharpness(GroupSpec::cyclic(n), SharpnessKind::cyclic_4_shift), 2,
                         a2 + 2, "2^(alpha+2) in Z_n" + tag);
    }
    expect_exact_power(t,
                       witness_divisibility_sharpness(GroupSpec::dicyclic(n), SharpnessKind::odd_p_dicyclic, {.p = 3}),
                       3, 2 * a3 + 1, "3^(2 alpha+1) in Q_4n" + tag);
    if (a2 >= 1) {
      expect_exact_power(t, witness_divisibility_sharpness(GroupSpec::dicyclic(n), SharpnessKind::four_x_minus_1), 2,
                         2 * a2 + 6, "2^(2 alpha+6) in Q_4n" + tag);
    }
    for (long m : {-1, 1, 2}) {
      const Int want = (Int(1) << (1u << (a2 + 2))) * (1 + 2 * m * u(n));
      expect_value(t,
                   witness_divisibility_sharpness(GroupSpec::dicyclic(n), SharpnessKind::two_power_dicyclic, {.m = m}),
                   want, "2^(2^(alpha+2)) (1+2mn), m=" + std::to_string(m) + tag);
    }
  }
  return {t.pass(), t.summary(std::to_string(t.checks()) + " witness values and valuations recomputed")};
}

bool law_out(const GroupSpec& g, const Int& v) {
  if (v == 0) return false;
  if (check_divisibility(g, v).status == Status::out) return true;
  if (g.family == Family::dicyclic && g.n % 2 == 0 && mpz_odd_p(v.get_mpz_t())) {
    return check_odd_residue(g, v).status == Status::out;
  }
  return false;
}

Outcome criterion4() {
  Tally t;
  long values = 0;
  auto run = [&](const RingElement& a) {
    const Int v = det_exact(a);
    ++values;
    t.expect(!law_out(a.group(), v), a.group().name() + " value " + v.get_str() + " from " + serialize_element(a));
  };
  for (const auto& a : engine_inputs()) run(a);
  std::mt19937_64 rng(777);
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const GroupSpec g = GroupSpec::dicyclic(n);
    for (int i = 0; i < 10000; ++i) {
      const int b = 1 + i % 3;
      run(random_element(g, -b, b, rng));
    }
  }
  return {t.pass(), t.summary(std::to_string(values) + " determinants, no law reported Out")};
}

Outcome criterion5() {
  Tally t;
  SearchSpec s;
  s.coeff_bound = 1;
  s.mode = SearchMode::spectrum;
  s.group = GroupSpec::dicyclic(2);
  const auto q8 = search_box(s);
  t.expect(q8.exhausted, "Q_8 box not exhausted");
  for (const auto& e : q8.spectrum) {
    t.expect(classify(SetId::Q8, {}, e.value).status == Status::in, "Q_8 value " + e.value.get_str());
  }
  s.group = GroupSpec::dicyclic(3);
  const auto q12 = search_box(s);
  t.expect(q12.exhausted, "Q_12 box not exhausted");
  for (const auto& e : q12.spectrum) {
    t.expect(classify(SetId::Q12, {}, e.value).status == Status::in, "Q_12 value " + e.value.get_str());
  }
  // 2^5 m with m odd, |m| < 5 is Out. (Even m raises the power of 2 to 6
  // or 7, which is In and checked with witnesses.)
  for (long m : {-4, -3, -2, -1, 1, 2, 3, 4}) {
    const Int v = 32 * m;
    const Status st = classify(SetId::Q4p, 3, v).status;
    if (m % 2) {
      t.expect(st == Status::out, "32*" + std::to_string(m) + " not Out");
      continue;
    }
    t.expect(st == Status::in, "32*" + std::to_string(m) + " not In");
    const auto w = witness_q4p_two_powers(3, valuation(v, 2));
    const Int d = det_exact(m > 0 ? w.element : w.element.swapped());
    t.expect(d == v, "witness for 32*" + std::to_string(m) + " gives " + d.get_str());
  }
  const auto w160 = witness_q4p_frontier(3, FrontierKind::half_p2plus1_2_5);
  for (long sign : {1, -1}) {
    const Int v = 160 * sign;
    t.expect(classify(SetId::Q4p, 3, v).status == Status::in, v.get_str() + " not In");
    // swapping f and g multiplies by (-1)^3
    const Int d = det_exact(sign > 0 ? w160.element : w160.element.swapped());
    t.expect(d == v, "witness for " + v.get_str() + " gives " + d.get_str());
  }
  return {t.pass(), t.summary(std::to_string(q8.spectrum.size()) + " Q_8 and " + std::to_string(q12.spectrum.size()) +
                              " Q_12 box values In; 2^5 m frontier for p = 3 as described")};
}

Outcome criterion6() {
  Tally t;
  long pairs = 0;
  for (std::uint64_t m = 2; m <= 40; ++m) {
    for (std::uint64_t d = 1; d < m; ++d) {
      const IntPoly& a = cyclotomic(d);
      const IntPoly& b = cyclotomic(m);
      const Int syl = sylvester_resultant(a, b);
      const Int formula = cyclotomic_resultant_formula(d, m);
      const Int engine = resultant(a, b);
      ++pairs;
      t.expect(abs(syl) == formula && engine == syl,
               "Res(Phi_" + std::to_string(d) + ", Phi_" + std::to_string(m) + "): sylvester " + syl.get_str() +
                   ", formula " + formula.get_str() + ", engine " + engine.get_str());
    }
  }
  return {t.pass(), t.summary(std::to_string(pairs) + " pairs 1 <= d < m <= 40 agree")};
}

Outcome criterion7() {
  Tally t;
  std::mt19937_64 rng(4242);
  std::vector<std::vector<GroupSpec>> families(3);
  for (std::size_t n = 1; n <= 12; ++n) families[0].push_back(GroupSpec::cyclic(n));
  for (std::size_t n = 1; n <= 8; ++n) families[1].push_back(GroupSpec::dihedral(n));
  for (std::size_t n = 1; n <= 6; ++n) families[2].push_back(GroupSpec::dicyclic(n));
  for (const auto& fam : families) {
    for (int i = 0; i < 500; ++i) {
      const GroupSpec& g = fam[i % fam.size()];
      const auto a = random_element(g, -3, 3, rng);
      const auto b = random_element(g, -3, 3, rng);
      t.expect(det_exact(ring_mul(a, b)) == det_exact(a) * det_exact(b),
               "multiplicativity in " + g.name() + " at " + serialize_element(a) + " * " + serialize_element(b));
    }
  }
  for (int i = 0; i < 500; ++i) {
    const GroupSpec& g = families[2][i % families[2].size()];
    const auto a = random_element(g, -3, 3, rng);
    const Int sign = g.n % 2 ? -1 : 1;
    t.expect(det_exact(a.swapped()) == sign * det_exact(a), "swap law in " + g.name() + " at " + serialize_element(a));
  }
  for (int i = 0; i < 500; ++i) {
    const GroupSpec& g = families[2][i % families[2].size()];
    const auto full = random_element(g, -3, 3, rng);
    const RingElement a(g, full.f(), CyclicPoly(g.rotation_modulus()));
    const Int cyc = det_exact(RingElement(GroupSpec::cyclic(2 * g.n), full.f()));
    t.expect(det_exact(a) == cyc * cyc, "g = 0 square law in " + g.name() + " at " + serialize_element(a));
  }
  return {t.pass(), t.summary("1500 products, 500 swaps, 500 g = 0 elements")};
}

std::size_t parse_error_offset(const GroupSpec& g, const std::string& s) {
  try {
    parse_element(g, s);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

Outcome criterion8() {
  Tally t;
  const GroupSpec q12 = GroupSpec::dicyclic(3);
  const auto a = parse_element(q12, "x^2+1");
  t.expect(serialize_element(a) == "1,0,1,0,0,0;0,0,0,0,0,0", "x^2+1 parsed as " + serialize_element(a));
  const auto b = parse_element(q12, "1 - x + y*(1+x^3)");
  t.expect(serialize_element(b) == "1,-1,0,0,0,0;1,0,0,1,0,0", "1 - x + y*(1+x^3) parsed as " + serialize_element(b));
  const std::vector<std::pair<std::string, std::size_t>> errors{
      {"x^", 1}, {"1 + ", 4}, {"(1+x", 0}, {"1 + z", 4}, {"x)", 1}, {"1,,2;3", 2}, {"1,2;3;4", 5}};
  for (const auto& [text, off] : errors) {
    const std::size_t got = parse_error_offset(q12, text);
    t.expect(got == off, "'" + text + "' error offset " + (got == std::string::npos ? "none" : std::to_string(got)));
  }
  std::mt19937_64 rng(8);
  long trips = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const GroupSpec& g : {GroupSpec::cyclic(n), GroupSpec::dihedral(n), GroupSpec::dicyclic(n)}) {
      for (int i = 0; i < 40; ++i) {
        const auto e = random_element(g, -20, 20, rng);
        t.expect(parse_element(g, serialize_element(e)) == e, "raw round trip " + serialize_element(e));
        t.expect(parse_element(g, format_element(e)) == e, "expression round trip " + format_element(e));
        trips += 2;
      }
    }
  }
  return {t.pass(), t.summary(std::to_string(trips) + " round trips, " + std::to_string(errors.size()) +
                              " error offsets")};
}

}  // namespace

std::vector<int> all_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8}; }

std::string criterion_title(int id) {
  switch (id) {
    case 1: return "engine equivalence";
    case 2: return "lambda values";
    case 3: return "witness regression";
    case 4: return "law soundness";
    case 5: return "characterized-set sweeps";
    case 6: return "cyclotomic resultant identity";
    case 7: return "multiplicativity and symmetry";
    case 8: return "parser";
  }
  throw UsageError("no acceptance criterion " + std::to_string(id));
}

CriterionResult run_criterion(int id) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o{false, ""};
    switch (id) {
      case 1: o = criterion1(); break;
      case 2: o = criterion2(); break;
      case 3: o = criterion3(); break;
      case 4: o = criterion4(); break;
      case 5: o = criterion5(); break;
      case 6: o = criterion6(); break;
      case 7: o = criterion7(); break;
      case 8: o = criterion8(); break;
    }
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    criterion_title(id);
    out.push_back(run_criterion(id));
    if (on_done) on_done(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
  return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " " + r.title + ": " + r.detail +
         " (" + secs + " s)";
}

}  // namespace gdet::verify
