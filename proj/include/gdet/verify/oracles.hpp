#pragma once

// Reference computations that share no code path with the engines they
// check. Slow by design; used by the unit tests and the acceptance suite.

#include <cstdint>
#include <random>

#include "gdet/groupring.hpp"
#include "gdet/intpoly.hpp"

namespace gdet::verify {

// Determinant of the Sylvester matrix of a and b.
Int sylvester_resultant(const IntPoly& a, const IntPoly& b);

// |Res(Phi_d, Phi_m)| for d < m from the closed form: p^{phi(d)} when
// m = d p^t for a prime p and t >= 1, else 1.
Int cyclotomic_resultant_formula(std::uint64_t d, std::uint64_t m);

// c_g = sum over u v = g of a_u b_v, using only word_mul.
RingElement convolve_words(const RingElement& a, const RingElement& b);

// Uniform coefficients in [lo, hi] for every group element.
RingElement random_element(const GroupSpec& g, int lo, int hi, std::mt19937_64& rng);

IntPoly random_poly(int max_degree, int lo, int hi, std::mt19937_64& rng);

}  // namespace gdet::verify
