#pragma once

// Explicit group-ring elements with known determinants. Every constructor
// verifies its element with det_exact unless Check::skip is passed, and
// throws VerificationError on a mismatch.

#include <cstdint>
#include <map>
#include <string>

#include "gdet/groupring.hpp"

namespace gdet {

struct Witness {
  RingElement element;
  // The determinant of `element`.
  Int claimed;
  std::string anchor;
  std::map<std::string, Int> params;
};

enum class Check { verify, skip };

enum class BasicKind { trivial, sixteen, two_n_minus_one, crude2 };
enum class FrontierKind { half_p2plus1_2_5, neg_2_5_p_2tplus4, neg_half_2_4_p3_mu, p5_sum_of_squares, p5_special };
enum class SharpnessKind { odd_p_dicyclic, two_power_dicyclic, four_x_minus_1, cyclic_n_sq, cyclic_p_shift, cyclic_4_shift };

BasicKind basic_kind_from_string(const std::string& s);
FrontierKind frontier_kind_from_string(const std::string& s);
SharpnessKind sharpness_kind_from_string(const std::string& s);
std::string to_string(BasicKind k);
std::string to_string(FrontierKind k);
std::string to_string(SharpnessKind k);

// trivial: 0 at the identity, 1 elsewhere; any group.
// sixteen, two_n_minus_one: Q_{4n}, n odd.  crude2: Q_{4n}, any n.
Witness witness_basic(const GroupSpec& g, BasicKind kind, Check check = Check::verify);

// Determinant exactly m in Q_{4n}; n odd >= 3, gcd(m, 2n) = 1.
Witness witness_coprime(std::uint64_t n, const Int& m, Check check = Check::verify);

// Q_{4n}, n odd, p an odd prime not dividing n: determinant delta * p where
// p = delta mod 4. `representative_shift` adds that multiple of n to every
// exponent a_i; the determinant does not depend on it.
Witness witness_prime(std::uint64_t n, std::uint64_t p, std::uint64_t representative_shift = 0,
                      Check check = Check::verify);

// 2^k in Q_{4p}; k = 4 or k >= 6.
Witness witness_q4p_two_powers(std::uint64_t p, unsigned k, Check check = Check::verify);

// delta p^3 (1 + 4m) in Q_{4p}.
Witness witness_q4p_p_cubed(std::uint64_t p, const Int& m, Check check = Check::verify);

// sign * p^ell in Q_{4p}; ell >= 3, sign = +-1.
Witness witness_q4p_p_powers(std::uint64_t p, unsigned ell, int sign, Check check = Check::verify);

struct FrontierParams {
  unsigned t = 0;  // neg_2_5_p_2tplus4
  Int mu = 1;      // neg_half_2_4_p3_mu, nonzero
};

Witness witness_q4p_frontier(std::uint64_t p, FrontierKind kind, const FrontierParams& params = {},
                             Check check = Check::verify);

struct SharpnessParams {
  std::uint64_t p = 0;  // odd_p_dicyclic, cyclic_p_shift
  Int m = 1;            // two_power_dicyclic
};

// Elements attaining the divisibility exponents exactly. `claimed` is the
// full determinant; params["valuation"] is the exponent of params["prime"]
// asserted to divide it exactly.
Witness witness_divisibility_sharpness(const GroupSpec& g, SharpnessKind kind, const SharpnessParams& params = {},
                                       Check check = Check::verify);

}  // namespace gdet
