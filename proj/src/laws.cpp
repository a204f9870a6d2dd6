#include "gdet/laws.hpp"

#include <array>
#include <utility>

#include "gdet/error.hpp"
#include "gdet/modular.hpp"
#include "gdet/ntheory.hpp"

namespace gdet {

namespace {

constexpr std::array<std::pair<SetId, const char*>, 7> kSetNames{{
    {SetId::Zp, "Zp"},
    {SetId::Z2p, "Z2p"},
    {SetId::D2p, "D2p"},
    {SetId::D4p, "D4p"},
    {SetId::Q8, "Q8"},
    {SetId::Q12, "Q12"},
    {SetId::Q4p, "Q4p"},
}};

Verdict in(std::string code, std::string message) { return {Status::in, std::move(code), std::move(message), {}}; }
Verdict out(std::string code, std::string message) { return {Status::out, std::move(code), std::move(message), {}}; }
Verdict unknown(std::string code, std::string message) {
  return {Status::unknown, std::move(code), std::move(message), {}};
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// Nonnegative residue of m mod k.
unsigned long residue(const Int& m, unsigned long k) { return mpz_fdiv_ui(m.get_mpz_t(), k); }

bool is_prime_small(std::uint64_t p) { return p >= 2 && modular::is_prime_u64(p); }

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int big(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

int val(const Int& m, std::uint64_t p) { return m == 0 ? 0 : valuation(m, p); }

// Exponent e such that p | M forces p^e | M.
int required_exponent(Family family, std::uint64_t p, int alpha) {
  switch (family) {
    case Family::cyclic:
      if (p == 2 && alpha >= 2) return alpha + 2;
      return alpha + 1;
    case Family::dihedral:
      if (p != 2) return 2 * alpha + 1;
      if (alpha == 0) return 2;
      if (alpha == 1) return 4;
      return 2 * alpha + 4;
    case Family::dicyclic:
      if (p != 2) return 2 * alpha + 1;
      return alpha == 0 ? 4 : 2 * alpha + 6;
  }
  return 0;
}

std::string divisibility_code(Family family, std::uint64_t p) {
  switch (family) {
    case Family::cyclic:
      return p == 2 ? "DIV_CYCLIC_2" : "DIV_CYCLIC_P_A1";
    case Family::dihedral:
      return p == 2 ? "DIV_DIHEDRAL_2" : "DIV_DIHEDRAL_P_2T1";
    case Family::dicyclic:
      break;
  }
  return p == 2 ? "DIV_2" : "DIV_P_2A1";
}

// Q_12 with 2^5 || M and 3^b || M, b in {0, 3, 5}: M is a determinant iff
// the unit part has a prime factor = 5 mod 12 or the square of a prime = 5 mod 6.
Verdict q12_two_five(const Int& unit) {
  const Factorization f = factor_int(unit);
  for (const auto& [q, e] : f.primes) {
    const unsigned long r = residue(q, 12);
    if (r == 5) return in("Q12_TWO_FIVE", "unit part has the prime factor " + q.get_str() + " = 5 mod 12");
    if (r == 11 && e >= 2) return in("Q12_TWO_FIVE", "unit part is divisible by " + q.get_str() + "^2, 5 mod 6");
  }
  if (!f.complete) return unknown("FACTORIZATION_INCOMPLETE", "could not factor the unit part " + unit.get_str());
  return out("Q12_TWO_FIVE",
             "2^5 3^b m with b in {0,3,5} needs a prime = 5 mod 12 or a squared prime = 5 mod 6 in m");
}

// Some prime q = 3 mod 4 with q^2 | m: yes / no / undecided.
std::optional<bool> has_square_of_3mod4_prime(const Int& m) {
  const Factorization f = factor_int(m);
  for (const auto& [q, e] : f.primes) {
    if (residue(q, 4) == 3 && e >= 2) return true;
  }
  if (!f.complete) return std::nullopt;
  return false;
}

Verdict classify_q4p(std::uint64_t p, const Int& m) {
  const Int P = big(p);
  const int k = val(m, 2);
  const int ell = val(m, p);
  Int unit = m;
  const Int scale = ipow(Int(2), k) * ipow(P, ell);
  mpz_divexact(unit.get_mpz_t(), unit.get_mpz_t(), scale.get_mpz_t());
  const Decomposition dec{k, ell, unit};
  auto with = [&](Verdict v) {
    v.decomposition = dec;
    return v;
  };
  const std::string shape = "2^" + std::to_string(k) + " p^" + std::to_string(ell) + " m, m = " + unit.get_str();

  if (k >= 1 && k <= 3) return with(out("Q4P_K_FORBIDDEN", shape + ": an even determinant needs 2^4"));
  if (ell == 1 || ell == 2) return with(out("Q4P_L_FORBIDDEN", shape + ": p | M needs p^3 | M"));
  if (k != 5) return with(in("Q4P_ACHIEVED", shape + ": k in {0, 4} or k >= 6"));
  if (ell == 4 || ell >= 6) return with(in("Q4P_ACHIEVED", shape + ": k = 5 with ell = 4 or ell >= 6"));

  // k = 5, ell in {0, 3, 5}.
  if (p == 3) {
    Verdict v = q12_two_five(unit);
    v.message = shape + ": " + v.message;
    return with(v);
  }
  const Int half = (P * P + 1) / 2;
  const Int au = abs(unit);
  const bool small = au < half;
  const bool multiple = mpz_divisible_p(unit.get_mpz_t(), half.get_mpz_t()) != 0;
  const std::string h = "(p^2+1)/2 = " + half.get_str();
  const Verdict unresolved = unknown("Q4P_UNRESOLVED", shape + ": |m| >= " + h + " but not a multiple of it");

  if (ell == 5 && p % 4 == 1) return with(in("Q4P_ACHIEVED", shape + ": every 2^5 p^5 m is attained for p = 1 mod 4"));
  if (ell == 3 && p == 5) return with(in("Q4P_ACHIEVED", shape + ": every 2^5 5^3 m is attained"));
  if (ell == 3 && p % 4 == 1) {
    if (small) return with(unknown("Q4P_FRONTIER_OPEN", shape + ": open for p = 1 mod 4, p > 5, |m| < " + h));
  } else if (small) {
    return with(out("Q4P_M_TOO_SMALL", shape + ": the smallest such |m| is " + h));
  }
  if (multiple) return with(in("Q4P_ACHIEVED", shape + ": m is a multiple of " + h));
  return with(unresolved);
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::in:
      return "In";
    case Status::out:
      return "Out";
    case Status::unknown:
      return "Unknown";
  }
  return "?";
}

std::string to_string(SetId s) {
  for (const auto& [id, name] : kSetNames) {
    if (id == s) return name;
  }
  return "?";
}

SetId set_from_string(const std::string& s) {
  for (const auto& [id, name] : kSetNames) {
    if (s == name) return id;
  }
  throw UsageError("unknown set '" + s + "' (expected Zp, Z2p, D2p, D4p, Q8, Q12 or Q4p)");
}

std::optional<CharacterizedSet> characterized_set(const GroupSpec& g) {
  const std::uint64_t n = g.n;
  switch (g.family) {
    case Family::cyclic:
      if (is_prime_small(n)) return CharacterizedSet{SetId::Zp, n};
      if (n % 4 == 2 && n > 2 && is_prime_small(n / 2)) return CharacterizedSet{SetId::Z2p, n / 2};
      return std::nullopt;
    case Family::dihedral:
      // D_2 is Z_2.
      if (n == 1) return CharacterizedSet{SetId::Zp, 2};
      if (n % 2 == 1 && is_prime_small(n)) return CharacterizedSet{SetId::D2p, n};
      if (n % 4 == 2 && n > 2 && is_prime_small(n / 2)) return CharacterizedSet{SetId::D4p, n / 2};
      return std::nullopt;
    case Family::dicyclic:
      if (n == 2) return CharacterizedSet{SetId::Q8, 0};
      if (n == 3) return CharacterizedSet{SetId::Q12, 0};
      if (n % 2 == 1 && is_prime_small(n)) return CharacterizedSet{SetId::Q4p, n};
      return std::nullopt;
  }
  return std::nullopt;
}

Verdict check_divisibility(const GroupSpec& g, const Int& m) {
  if (m == 0) throw UsageError("check_divisibility needs M != 0 (zero is always a determinant)");
  const std::uint64_t n = g.n;
  auto primes = factor_u64(n);
  if (g.family != Family::cyclic && n % 2 == 1) primes.insert(primes.begin(), {2, 0});
  for (const auto& [p, alpha] : primes) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    const int need = required_exponent(g.family, p, alpha);
    const int have = valuation(m, p);
    if (have < need) {
      return out(divisibility_code(g.family, p), std::to_string(p) + " | M forces " + std::to_string(p) + "^" +
                                                     std::to_string(need) + " | M in " + g.name() + ", but only " +
                                                     std::to_string(p) + "^" + std::to_string(have) + " divides it");
    }
  }

  if (const auto cs = characterized_set(g)) {
    Verdict v = classify(cs->set, cs->p, m);
    v.message = to_string(cs->set) + ": " + v.message;
    return v;
  }

  const Int N = big(n);
  const bool coprime_2n = gcd(m, 2 * N) == 1;
  switch (g.family) {
    case Family::cyclic:
      if (gcd(m, N) == 1) return in("COPRIME", "every M coprime to n is a circulant determinant");
      break;
    case Family::dihedral:
      if (coprime_2n && (n % 2 == 1 || residue(m, 4) == 1)) {
        return in("COPRIME", n % 2 ? "every M coprime to 2n is attained" : "M coprime to 2n and 1 mod 4 is attained");
      }
      break;
    case Family::dicyclic:
      if (n % 2 == 1) {
        if (coprime_2n) return in("COPRIME", "every M coprime to 2n is attained for odd n");
        if (valuation(m, 2) == 4 && gcd(m / 16, 2 * N) == 1) {
          return in("CONSTRUCTED", "16 times a value coprime to 2n is attained for odd n");
        }
      }
      break;
  }
  return unknown("NOT_EXCLUDED", "no divisibility law excludes M in " + g.name());
}

Verdict check_odd_residue(const GroupSpec& g, const Int& m) {
  if (g.family != Family::dicyclic || g.n % 2 != 0) throw UsageError("check_odd_residue needs Q_{4n} with n even");
  if (residue(m, 2) == 0) throw UsageError("check_odd_residue needs odd M");
  const unsigned long r = residue(m, 8);
  if (r == 3 || r == 7) {
    return out("RES_MOD8", "odd determinants of " + g.name() + " are 1 or -3 mod 8; M = " + str(r) + " mod 8");
  }
  if (r == 1 || g.n % 4 == 0) return unknown("NOT_EXCLUDED", "M mod 8 is allowed");

  // 2 || n and M = -3 mod 8.
  const Factorization f = factor_int(m);
  if (f.complete && f.primes.size() == 1) {
    const auto& [q, beta] = f.primes.front();
    if (q.fits_ulong_p() && g.n % q.get_ui() == 0) {
      const int alpha = valuation(static_cast<std::uint64_t>(g.n), q.get_ui());
      if (beta < 4 * alpha + 3) {
        return out("RES_PRIME_POWER", "M = +-" + q.get_str() + "^" + std::to_string(beta) + " = -3 mod 8 with " +
                                          q.get_str() + "^" + std::to_string(alpha) + " || n needs exponent >= " +
                                          std::to_string(4 * alpha + 3));
      }
    }
  }
  const auto sq = has_square_of_3mod4_prime(m);
  if (sq && !*sq) {
    return out("RES_SQUARE_FACTOR", "M = -3 mod 8 with 2 || n needs k^2 | M for some k = 3 mod 4");
  }
  return unknown("NOT_EXCLUDED", "M = -3 mod 8 and no residue law excludes it");
}

Verdict check_laws(const GroupSpec& g, const Int& m) {
  if (m == 0) return in("ZERO", "zero is always a determinant");
  Verdict v = check_divisibility(g, m);
  if (v.status == Status::out) return v;
  if (g.family == Family::dicyclic && g.n % 2 == 0 && residue(m, 2) == 1) {
    Verdict r = check_odd_residue(g, m);
    if (r.status == Status::out) return r;
  }
  return v;
}

Verdict classify(SetId set, std::optional<std::uint64_t> p_opt, const Int& m) {
  std::uint64_t p = 0;
  if (set != SetId::Q8 && set != SetId::Q12) {
    if (!p_opt) throw UsageError(to_string(set) + " needs a prime p");
    p = *p_opt;
    if (!is_prime_small(p)) throw UsageError("p = " + str(p) + " is not prime");
    if (set != SetId::Zp && p == 2) throw UsageError(to_string(set) + " needs an odd prime p");
  }
  if (m == 0) return in("ZERO", "zero is always a determinant");

  const int a = val(m, 2);
  const int b = p ? val(m, p) : 0;
  auto exp_ok = [](int e, int lo) { return e == 0 || e >= lo; };

  switch (set) {
    case SetId::Zp: {
      if (exp_ok(b, 2)) return in("ZP", "p^a m with a = 0 or a >= 2");
      return out("ZP_EXPONENT", "p || M is not attained in Z_p");
    }
    case SetId::Z2p: {
      if (!exp_ok(a, 2)) return out("Z2P_EXPONENT", "2 || M is not attained in Z_2p");
      if (!exp_ok(b, 2)) return out("Z2P_EXPONENT", "p || M is not attained in Z_2p");
      return in("Z2P", "2^a p^b m with a, b = 0 or >= 2");
    }
    case SetId::D2p: {
      if (!exp_ok(a, 2)) return out("D2P_EXPONENT", "2 || M is not attained in D_2p");
      if (!exp_ok(b, 3)) return out("D2P_EXPONENT", "p || M or p^2 || M is not attained in D_2p");
      return in("D2P", "2^a p^b m with a = 0 or a >= 2, b = 0 or b >= 3");
    }
    case SetId::D4p: {
      if (!exp_ok(b, 3)) return out("D4P_EXPONENT", "p | M needs p^3 | M in D_4p");
      if (a == 0) {
        if (residue(m, 4) == 1) return in("D4P", "odd M = 1 mod 4");
        return out("D4P_ODD_RESIDUE", "odd determinants of D_4p are 1 mod 4");
      }
      if (a == 4 || a >= 6) return in("D4P", "2^a p^b m with a = 4 or a >= 6");
      return out("D4P_EXPONENT", "2^" + std::to_string(a) + " || M is not attained in D_4p");
    }
    case SetId::Q8: {
      if (a > 0) {
        if (a >= 8) return in("Q8", "multiple of 2^8");
        return out("Q8_TWO_POWER", "even determinants of Q_8 are multiples of 2^8");
      }
      const unsigned long r = residue(m, 8);
      if (r == 1) return in("Q8", "8m + 1");
      if (r == 3 || r == 7) return out("Q8_RESIDUE", "odd determinants of Q_8 are 1 or 5 mod 8");
      const auto sq = has_square_of_3mod4_prime(m);
      if (!sq) return unknown("FACTORIZATION_INCOMPLETE", "could not factor " + m.get_str());
      if (*sq) return in("Q8", "(8m - 3) q^2 with q = 3 mod 4");
      return out("Q8_SQUARE_FACTOR", "M = 5 mod 8 needs q^2 | M for a prime q = 3 mod 4");
    }
    case SetId::Q12:
    case SetId::Q4p:
      return classify_q4p(set == SetId::Q12 ? 3 : p, m);
  }
  throw UsageError("unknown set");
}

LambdaReport lambda_formula(const GroupSpec& g) {
  if (g.family != Family::dicyclic) throw UsageError("lambda_formula is implemented for dicyclic groups only");
  const std::uint64_t n = g.n;
  LambdaReport r;
  r.group = g;
  r.p0 = smallest_prime_not_dividing(big(2 * n));
  const Int p0 = big(r.p0);

  if (n % 2 == 1 || n == 2) {
    r.exact = true;
    r.value = n == 2 ? Int(7) : (p0 < 16 ? p0 : Int(16));
    r.note = n == 2 ? "lambda(Q_8) = 7" : "min(16, p0) for odd n";
    for (Int v = 2; v < r.value; ++v) {
      for (const Int& s : {v, Int(-v)}) {
        const Verdict verdict = check_laws(g, s);
        if (verdict.status != Status::out) {
          throw VerificationError("no exclusion certificate for " + s.get_str() + " in " + g.name());
        }
        r.certificate.push_back({s, verdict.code, verdict.message});
      }
    }
    return r;
  }

  const int t = valuation(n, 2);
  const Int square = p0 * p0;
  Int two;
  if (t <= 6) mpz_ui_pow_ui(two.get_mpz_t(), 2, 1UL << (t + 2));
  r.value = (t <= 6 && two < square) ? two : square;
  r.exact = false;
  r.note = "upper bound min(2^{2^{t+2}}, p0^2) with 2^" + std::to_string(t) + " || n";
  return r;
}

}  // namespace gdet
