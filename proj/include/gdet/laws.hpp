#pragma once

// Necessary conditions on determinant values, the complete descriptions of
// S(G) for the small families where one is known, and lambda(Q_{4n}).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdet/groupring.hpp"

namespace gdet {

enum class Status { in, out, unknown };
std::string to_string(Status s);

// M = 2^k p^ell m with gcd(m, 2p) = 1; m carries the sign.
struct Decomposition {
  int k = 0;
  int ell = 0;
  Int m;
};

struct Verdict {
  Status status = Status::unknown;
  // Stable reason code, e.g. DIV_P_2A1, RES_MOD8, Q4P_FRONTIER_OPEN.
  std::string code;
  std::string message;
  std::optional<Decomposition> decomposition;
};

enum class SetId { Zp, Z2p, D2p, D4p, Q8, Q12, Q4p };
std::string to_string(SetId s);
SetId set_from_string(const std::string& s);

struct CharacterizedSet {
  SetId set;
  std::uint64_t p = 0;
};

// The characterized set equal to S(G), if there is one.
std::optional<CharacterizedSet> characterized_set(const GroupSpec& g);

// Out when M breaks a prime-power divisibility law for G. Otherwise In when a
// complete description or a coprime result covers M, else Unknown. M != 0.
Verdict check_divisibility(const GroupSpec& g, const Int& m);

// Q_{4n}, n even, M odd. Sign-sensitive.
Verdict check_odd_residue(const GroupSpec& g, const Int& m);

// check_divisibility, then check_odd_residue where it applies; the first Out
// wins. Zero is In.
Verdict check_laws(const GroupSpec& g, const Int& m);

// Membership in a characterized set. p is required for Zp, Z2p, D2p, D4p
// and Q4p (odd for all but Zp) and ignored for Q8 and Q12.
Verdict classify(SetId set, std::optional<std::uint64_t> p, const Int& m);

struct CertificateStep {
  Int value;
  std::string code;
  std::string message;
};

struct LambdaReport {
  GroupSpec group;
  Int value;
  // False when value is only an upper bound.
  bool exact = false;
  std::uint64_t p0 = 0;
  // For exact reports: why each 2 <= |v| < value is not a determinant.
  std::vector<CertificateStep> certificate;
  std::string note;
};

// Dicyclic groups only. Odd n: min(16, p0) with a certificate. Even n: the
// bound min(2^{2^{t+2}}, p0^2) for 2^t || n, exact only for Q_8.
LambdaReport lambda_formula(const GroupSpec& g);

}  // namespace gdet
