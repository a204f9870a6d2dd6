#include "gdet/witnesses.hpp"

#include <array>
#include <utility>

#include "gdet/detengine.hpp"
#include "gdet/error.hpp"
#include "gdet/modular.hpp"
#include "gdet/ntheory.hpp"

namespace gdet {

namespace {

constexpr std::array<std::pair<BasicKind, const char*>, 4> kBasicNames{{
    {BasicKind::trivial, "trivial"},
    {BasicKind::sixteen, "sixteen"},
    {BasicKind::two_n_minus_one, "two_n_minus_one"},
    {BasicKind::crude2, "crude2"},
}};
constexpr std::array<std::pair<FrontierKind, const char*>, 5> kFrontierNames{{
    {FrontierKind::half_p2plus1_2_5, "half_p2plus1_2_5"},
    {FrontierKind::neg_2_5_p_2tplus4, "neg_2_5_p_2tplus4"},
    {FrontierKind::neg_half_2_4_p3_mu, "neg_half_2_4_p3_mu"},
    {FrontierKind::p5_sum_of_squares, "p5_sum_of_squares"},
    {FrontierKind::p5_special, "p5_special"},
}};
constexpr std::array<std::pair<SharpnessKind, const char*>, 6> kSharpnessNames{{
    {SharpnessKind::odd_p_dicyclic, "odd_p_dicyclic"},
    {SharpnessKind::two_power_dicyclic, "two_power_dicyclic"},
    {SharpnessKind::four_x_minus_1, "four_x_minus_1"},
    {SharpnessKind::cyclic_n_sq, "cyclic_n_sq"},
    {SharpnessKind::cyclic_p_shift, "cyclic_p_shift"},
    {SharpnessKind::cyclic_4_shift, "cyclic_4_shift"},
}};

template <typename Kind, std::size_t N>
Kind kind_from(const std::array<std::pair<Kind, const char*>, N>& table, const std::string& s, const char* what) {
  for (const auto& [k, name] : table) {
    if (s == name) return k;
  }
  std::string msg = std::string("unknown ") + what + " '" + s + "' (expected one of";
  for (const auto& entry : table) msg += std::string(" ") + entry.second;
  throw UsageError(msg + ")");
}

template <typename Kind, std::size_t N>
std::string name_of(const std::array<std::pair<Kind, const char*>, N>& table, Kind k) {
  for (const auto& [kk, name] : table) {
    if (kk == k) return name;
  }
  return "?";
}

IntPoly x_pow(std::size_t k) { return IntPoly::monomial(1, k); }
IntPoly x_pow_plus_one(std::size_t k) { return x_pow(k) + IntPoly{1}; }

// (x^m + 1)/(x + 1) = 1 - x + x^2 - ... + x^{m-1} for odd m.
IntPoly alternating_ones(std::size_t m) {
  std::vector<Int> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = (i % 2) ? -1 : 1;
  return IntPoly(std::move(c));
}

RingElement make(const GroupSpec& g, const IntPoly& f, const IntPoly& gp = IntPoly{}) {
  const std::size_t m = g.rotation_modulus();
  if (g.family == Family::cyclic) return RingElement(g, CyclicPoly::reduce(f, m));
  return RingElement(g, CyclicPoly::reduce(f, m), CyclicPoly::reduce(gp, m));
}

Witness finish(Witness w, Check check) {
  if (check == Check::verify) {
    const Int got = det_exact(w.element);
    if (got != w.claimed) {
      throw VerificationError("witness '" + w.anchor + "' claims " + w.claimed.get_str() + " but the determinant is " +
                              got.get_str());
    }
  }
  return w;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void require_odd_prime(std::uint64_t p) {
  require(p >= 3 && modular::is_prime_u64(p), "p must be an odd prime, got " + std::to_string(p));
}

void require_family(const GroupSpec& g, Family f) {
  require(g.family == f, "this witness needs a " + to_string(f) + " group, got " + g.name());
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Full determinant plus an exact-valuation assertion.
Witness valuation_witness(RingElement e, std::string anchor, std::uint64_t prime, int expected, Check check,
                          std::map<std::string, Int> params) {
  const Int det = det_exact(e);
  params["prime"] = static_cast<unsigned long>(prime);
  params["valuation"] = expected;
  if (check == Check::verify && (det == 0 || valuation(det, prime) != expected)) {
    throw VerificationError("witness '" + anchor + "': expected " + std::to_string(prime) + "^" +
                            std::to_string(expected) + " to divide " + det.get_str() + " exactly");
  }
  return Witness{std::move(e), det, std::move(anchor), std::move(params)};
}

}  // namespace

BasicKind basic_kind_from_string(const std::string& s) { return kind_from(kBasicNames, s, "witness kind"); }
FrontierKind frontier_kind_from_string(const std::string& s) { return kind_from(kFrontierNames, s, "frontier kind"); }
SharpnessKind sharpness_kind_from_string(const std::string& s) {
  return kind_from(kSharpnessNames, s, "sharpness case");
}
std::string to_string(BasicKind k) { return name_of(kBasicNames, k); }
std::string to_string(FrontierKind k) { return name_of(kFrontierNames, k); }
std::string to_string(SharpnessKind k) { return name_of(kSharpnessNames, k); }

Witness witness_basic(const GroupSpec& g, BasicKind kind, Check check) {
  const std::size_t n = g.n;
  switch (kind) {
    case BasicKind::trivial: {
      std::vector<Int> c(g.order(), 1);
      c[0] = 0;
      const long order = static_cast<long>(g.order());
      const Int claimed = (order % 2 ? 1 : -1) * Int(order - 1);
      return finish({RingElement::from_coefficients(g, c), claimed, "0 at the identity, 1 elsewhere", {}}, check);
    }
    case BasicKind::sixteen:
      require_family(g, Family::dicyclic);
      require(n % 2 == 1, "sixteen needs n odd");
      return finish({make(g, IntPoly{1, 0, 1}), 16, "M(x^2 + 1) = 16 for odd n", {}}, check);
    case BasicKind::two_n_minus_one: {
      require_family(g, Family::dicyclic);
      require(n % 2 == 1, "two_n_minus_one needs n odd");
      // (x^n + 1)(x + ... + x^{(n-1)/2})
      IntPoly run;
      for (std::size_t i = 1; i <= (n - 1) / 2; ++i) run += x_pow(i);
      const IntPoly common = x_pow_plus_one(n) * run;
      return finish({make(g, IntPoly{1} + common, common), Int(static_cast<unsigned long>(2 * n - 1)),
                     "1 + (x^n+1)(x+...+x^{(n-1)/2}) + y (x^n+1)(x+...+x^{(n-1)/2}) = 2n - 1", {}},
                    check);
    }
    case BasicKind::crude2: {
      require_family(g, Family::dicyclic);
      const int t = valuation(static_cast<std::uint64_t>(n), 2);
      Int claimed;
      mpz_ui_pow_ui(claimed.get_mpz_t(), 2, 1UL << (t + 2));
      return finish({make(g, x_pow_plus_one(std::size_t{1} << (t + 1))), claimed,
                     "2^t || n gives M(x^{2^{t+1}} + 1) = 2^{2^{t+2}}", {{"t", t}}},
                    check);
    }
  }
  throw UsageError("unknown witness kind");
}

Witness witness_prime(std::uint64_t n, std::uint64_t p, std::uint64_t representative_shift, Check check) {
  require(n % 2 == 1, "n must be odd");
  require_odd_prime(p);
  require(n % p != 0, "p must not divide n");
  const GroupSpec g = GroupSpec::dicyclic(n);
  const int delta = (p % 4 == 1) ? 1 : -1;
  const std::uint64_t t = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;

  // Odd m' with p m' = 1 mod n.
  std::uint64_t mp = n == 1 ? 1 : modular::pow_mod(p % n, euler_phi(n) - 1, n);
  if (mp == 0) mp = n;
  if (mp % 2 == 0) mp += n;

  // Residues 1, 3, ..., (p-3)/2 for delta = 1 and 0, 2, ..., (p-3)/2 for delta = -1.
  const std::size_t m2 = 2 * n;
  std::vector<Int> sum(m2);
  for (std::uint64_t k = 0; k < t; ++k) {
    const std::uint64_t r = 2 * k + (delta == 1 ? 1 : 0);
    const std::uint64_t a = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r % n) * mp) % n);
    sum[(a + (representative_shift % 2) * n) % m2] += 1;
  }
  const CyclicPoly h = cyclic_mul(CyclicPoly::reduce(alternating_ones(mp), m2), CyclicPoly(m2, std::move(sum)));
  const CyclicPoly common = cyclic_mul(CyclicPoly::reduce(x_pow_plus_one(n), m2), h);
  CyclicPoly f = common;
  f += CyclicPoly::reduce(IntPoly::constant(delta), m2);

  Witness w{RingElement(g, std::move(f), common), Int(delta) * Int(static_cast<unsigned long>(p)),
            "f = delta + (x^n+1)H, g = (x^n+1)H with H = ((x^m+1)/(x+1)) sum x^{a_i} gives delta p",
            {{"p", static_cast<unsigned long>(p)},
             {"delta", delta},
             {"t", static_cast<unsigned long>(t)},
             {"m", static_cast<unsigned long>(mp)}}};
  return finish(std::move(w), check);
}

Witness witness_coprime(std::uint64_t n, const Int& m, Check check) {
  require(n >= 3 && n % 2 == 1, "witness_coprime needs odd n >= 3");
  require(m != 0 && gcd(m, Int(static_cast<unsigned long>(2 * n))) == 1, "witness_coprime needs gcd(m, 2n) = 1");
  const GroupSpec g = GroupSpec::dicyclic(n);
  const auto fac = factor_int(m);
  require(fac.complete, "could not factor " + m.get_str());

  RingElement e = RingElement::identity(g);
  Int value = 1;
  for (const auto& [q, mult] : fac.primes) {
    require(q.fits_ulong_p() && q < Int(1'000'000'000UL), "prime factor " + q.get_str() + " is too large");
    const Witness w = witness_prime(n, q.get_ui(), 0, Check::skip);
    for (int i = 0; i < mult; ++i) {
      e = ring_mul(e, w.element);
      value *= w.claimed;
    }
  }
  // M(g + y f) = -M(f + y g) for odd n.
  if (sgn(value) != sgn(m)) e = e.swapped();
  return finish({std::move(e), m, "products of delta p witnesses, sign fixed by swapping f and g", {{"m", m}}},
                check);
}

Witness witness_q4p_two_powers(std::uint64_t p, unsigned k, Check check) {
  require_odd_prime(p);
  require(k == 4 || k >= 6, "2^k is not a determinant of Q_{4p} for k in {1, 2, 3, 5}");
  const GroupSpec g = GroupSpec::dicyclic(p);
  const IntPoly xp1 = x_pow_plus_one(p);
  const IntPoly x2p1{1, 0, 1};
  const IntPoly x4p1{1, 0, 0, 0, 1};

  unsigned base = 0;
  RingElement e = RingElement::identity(g);
  switch (k % 4) {
    case 0:
      base = 0;
      break;
    case 2:
      base = 6;
      e = make(g, x2p1 + xp1 * IntPoly{0, 1});
      break;
    case 3:
      base = 7;
      e = make(g, x4p1 + xp1 * IntPoly{0, 1, 1}, xp1);
      break;
    case 1:
      require(k >= 9, "2^k is not a determinant of Q_{4p} for k in {1, 2, 3, 5}");
      base = 9;
      e = make(g, x4p1 * x2p1 + IntPoly{0, 0, 1} * xp1, xp1);
      break;
  }
  e = ring_mul(e, ring_pow(make(g, x2p1), (k - base) / 4));
  Int claimed;
  mpz_ui_pow_ui(claimed.get_mpz_t(), 2, k);
  return finish({std::move(e), claimed, "2^4, 2^6, 2^7, 2^9 constructions and their products",
                 {{"p", static_cast<unsigned long>(p)}, {"k", k}}},
                check);
}

Witness witness_q4p_p_cubed(std::uint64_t p, const Int& m, Check check) {
  require_odd_prime(p);
  const GroupSpec g = GroupSpec::dicyclic(p);
  const int delta = (p % 4 == 1) ? 1 : -1;
  const std::uint64_t b = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;
  const std::uint64_t a = 2 * b + delta;
  const IntPoly mh = all_ones(2 * p) * m;
  const RingElement e = make(g, all_ones(a) + mh, x_pow_plus_one(p) * all_ones(b) + mh);
  Int claimed = Int(delta) * ipow(Int(static_cast<unsigned long>(p)), 3) * (1 + 4 * m);
  return finish({e, claimed, "f = (x^a-1)/(x-1) + m h, g = (x^p+1)(x^b-1)/(x-1) + m h gives delta p^3 (1 + 4m)",
                 {{"p", static_cast<unsigned long>(p)},
                  {"delta", delta},
                  {"a", static_cast<unsigned long>(a)},
                  {"b", static_cast<unsigned long>(b)},
                  {"m", m}}},
                check);
}

Witness witness_q4p_p_powers(std::uint64_t p, unsigned ell, int sign, Check check) {
  require_odd_prime(p);
  require(ell >= 3, "p^ell with ell in {1, 2} is not a determinant of Q_{4p}");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  const Int pe = ipow(Int(static_cast<unsigned long>(p)), ell - 3);
  // 1 + 4m = eps p^{ell-3} with eps = p^{ell-3} mod 4.
  const int eps = (pe % 4 == 1) ? 1 : -1;
  const Int m = (eps * pe - 1) / 4;
  Witness w = witness_q4p_p_cubed(p, m, Check::skip);
  const int delta = (p % 4 == 1) ? 1 : -1;
  if (delta * eps != sign) w.element = w.element.swapped();
  w.claimed = sign * pe * ipow(Int(static_cast<unsigned long>(p)), 3);
  w.params["ell"] = ell;
  w.params["sign"] = sign;
  return finish(std::move(w), check);
}

Witness witness_q4p_frontier(std::uint64_t p, FrontierKind kind, const FrontierParams& params, Check check) {
  require_odd_prime(p);
  const GroupSpec g = GroupSpec::dicyclic(p);
  const std::size_t m2 = 2 * p;
  const Int P = static_cast<unsigned long>(p);
  const Int half = (P * P + 1) / 2;
  const IntPoly phi_x2 = cyclotomic(p).compose_power(2);
  const IntPoly h = all_ones(m2);
  std::map<std::string, Int> info{{"p", P}};

  switch (kind) {
    case FrontierKind::half_p2plus1_2_5:
      return finish({make(g, IntPoly{1, 0, 1}, IntPoly{-1, 1} * phi_x2), half * 32,
                     "f = 1 + x^2, g = (x - 1) Phi_p(x^2) gives (p^2+1)/2 * 2^5", info},
                    check);
    case FrontierKind::neg_2_5_p_2tplus4: {
      const unsigned t = params.t;
      // Phi_p(x^2)^{t+1} reduced mod x^{2p} - 1 as it is built.
      const CyclicPoly base = CyclicPoly::reduce(phi_x2, m2);
      CyclicPoly power = base;
      for (unsigned i = 0; i < t; ++i) power = cyclic_mul(power, base);
      CyclicPoly common = power;
      common += power;
      common -= CyclicPoly::reduce(h * ipow(P, t), m2);
      CyclicPoly f = CyclicPoly::reduce(IntPoly{1, 0, -1}, m2);
      f += common;
      CyclicPoly gp = CyclicPoly::reduce(x_pow_plus_one(p), m2);
      gp += common;
      info["t"] = t;
      return finish({RingElement(g, std::move(f), std::move(gp)), -32 * ipow(P, 2 * t + 4),
                     "f = 1 - x^2 + 2 Phi_p(x^2)^{t+1} - p^t h, g = x^p + 1 + 2 Phi_p(x^2)^{t+1} - p^t h", info},
                    check);
    }
    case FrontierKind::neg_half_2_4_p3_mu: {
      require(params.mu >= 1, "mu must be >= 1");
      const IntPoly muh = h * params.mu;
      info["mu"] = params.mu;
      return finish({make(g, IntPoly{-1} + muh, cyclotomic(p).negate_variable() + muh),
                     -half * 16 * ipow(P, 3) * params.mu,
                     "f = -1 + mu h, g = Phi_p(-x) + mu h gives -(p^2+1)/2 * 2^4 p^3 mu", info},
                    check);
    }
    case FrontierKind::p5_sum_of_squares: {
      require(p % 4 == 1, "p5_sum_of_squares needs p = 1 mod 4");
      Int A = 1;
      Int B = 0;
      for (;; ++A) {
        const Int rest = 2 * P - A * A;
        require(rest >= 0, "no representation 2p = A^2 + B^2");
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
          B = sqrt(rest);
          break;
        }
      }
      const IntPoly q = (x_pow(p) - IntPoly{1}) * phi_x2;
      info["A"] = A;
      info["B"] = B;
      return finish({make(g, IntPoly{1, 1} + q * A, q * B), 32 * ipow(P, 5),
                     "2p = A^2 + B^2, f = 1 + x + A(x^p-1)Phi_p(x^2), g = B(x^p-1)Phi_p(x^2) gives 2^5 p^5", info},
                    check);
    }
    case FrontierKind::p5_special: {
      require(p == 5, "p5_special needs p = 5");
      const IntPoly xp1 = x_pow_plus_one(p);
      return finish({make(g, IntPoly{1, -1, 1} + xp1 * IntPoly{0, 1}, IntPoly{1} + xp1 * IntPoly{0, 1, 1}), -4000,
                     "f = 1 - x + x^2 + (1+x^p)x, g = 1 + (1+x^p)(x+x^2) gives -2^5 p^3 for p = 5", info},
                    check);
    }
  }
  throw UsageError("unknown frontier kind");
}

Witness witness_divisibility_sharpness(const GroupSpec& g, SharpnessKind kind, const SharpnessParams& params,
                                       Check check) {
  const std::uint64_t n = g.n;
  switch (kind) {
    case SharpnessKind::odd_p_dicyclic: {
      require_family(g, Family::dicyclic);
      const std::uint64_t p = params.p;
      require_odd_prime(p);
      require(n % p == 0, "p must divide n");
      const int alpha = valuation(n, p);
      const IntPoly xn1 = x_pow_plus_one(n);
      const RingElement e = make(g, IntPoly{1} - xn1 * IntPoly{1, -1}, xn1 * Int(static_cast<unsigned long>((p - 1) / 2)));
      return valuation_witness(e, "p^{2 alpha + 1} || M(1 - (1+x^n)(1-x) + y ((p-1)/2)(1+x^n))", p, 2 * alpha + 1,
                               check, {{"p", static_cast<unsigned long>(p)}, {"alpha", alpha}});
    }
    case SharpnessKind::two_power_dicyclic: {
      require_family(g, Family::dicyclic);
      const int alpha = valuation(n, 2);
      require(alpha <= 8, "two_power_dicyclic supports 2^alpha || n with alpha <= 8");
      const IntPoly mh = all_ones(2 * n) * params.m;
      Int claimed;
      mpz_ui_pow_ui(claimed.get_mpz_t(), 2, 1UL << (alpha + 2));
      claimed *= 1 + 2 * params.m * Int(static_cast<unsigned long>(n));
      Witness w{make(g, x_pow_plus_one(std::size_t{1} << (alpha + 1)) + mh, mh), claimed,
                "M(x^{2^{alpha+1}} + 1 + m h + y m h) = 2^{2^{alpha+2}} (1 + 2mn)",
                {{"alpha", alpha}, {"m", params.m}, {"prime", 2}, {"valuation", 1L << (alpha + 2)}}};
      return finish(std::move(w), check);
    }
    case SharpnessKind::four_x_minus_1: {
      require_family(g, Family::dicyclic);
      require(n % 2 == 0, "four_x_minus_1 needs n even");
      const int alpha = valuation(n, 2);
      return valuation_witness(make(g, IntPoly{3, 1}), "2^{2 alpha + 6} || M(4 + (x - 1))", 2, 2 * alpha + 6, check,
                               {{"alpha", alpha}});
    }
    case SharpnessKind::cyclic_n_sq: {
      require_family(g, Family::cyclic);
      // prod of (w - 1) over the nontrivial n-th roots is (-1)^{n-1} n, so
      // the value is -n^2 for even n.
      const Int nn = static_cast<unsigned long>(n);
      const Int claimed = (n % 2 ? 1 : -1) * nn * nn;
      return finish({make(g, IntPoly{-1, 1} + all_ones(n)), claimed, "|M(x - 1 + (x^n-1)/(x-1))| = n^2", {{"n", nn}}},
                    check);
    }
    case SharpnessKind::cyclic_p_shift: {
      require_family(g, Family::cyclic);
      const std::uint64_t p = params.p;
      require_odd_prime(p);
      require(n % p == 0, "p must divide n");
      const int alpha = valuation(n, p);
      const IntPoly f = IntPoly{static_cast<long>(p) - 1, 1};
      return valuation_witness(make(g, f), "p^{alpha + 1} || M(p + (x - 1))", p, alpha + 1, check,
                               {{"p", static_cast<unsigned long>(p)}, {"alpha", alpha}});
    }
    case SharpnessKind::cyclic_4_shift: {
      require_family(g, Family::cyclic);
      const int alpha = valuation(n, 2);
      require(alpha >= 2, "cyclic_4_shift needs 4 | n");
      return valuation_witness(make(g, IntPoly{3, 1}), "2^{alpha + 2} || M(4 + (x - 1))", 2, alpha + 2, check,
                               {{"alpha", alpha}});
    }
  }
  throw UsageError("unknown sharpness case");
}

}  // namespace gdet
