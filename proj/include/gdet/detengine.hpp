#pragma once

// Integer group determinants. Three routes that must agree:
//   det_exact         Res(x^N - 1, B) for the measure polynomial B
//   det_factored      prod over d | N of M_d = Res(Phi_d, B)
//   det_matrix_oracle Bareiss elimination on the full |G| x |G| matrix

#include <cstdint>
#include <map>

#include "gdet/groupring.hpp"
#include "gdet/intpoly.hpp"

namespace gdet {

// Dicyclic: f f* - x^n g g* mod x^{2n} - 1.  Dihedral: f f* - g g* mod x^n - 1.
// (f* = reciprocal(f).) Throws for the cyclic family.
CyclicPoly measure_poly(const RingElement& a);

// The polynomial whose product over the N-th roots of unity is the
// determinant: measure_poly for dihedral/dicyclic, f itself for cyclic.
CyclicPoly determinant_poly(const RingElement& a);

struct FactoredDeterminant {
  Int total;
  std::map<std::uint64_t, Int> parts;
};

Int det_exact(const RingElement& a);
FactoredDeterminant det_factored(const RingElement& a);
Int det_matrix_oracle(const RingElement& a);

// Res(x^N - 1, B) for a residue class B mod x^N - 1.
Int cyclic_resultant(const CyclicPoly& b);

// Same value through the CRT accelerator. |Res| <= ||B||_2^N bounds the
// number of primes (product of |B| over the roots, then AM-GM and Parseval).
Int cyclic_resultant_modular(const CyclicPoly& b);

}  // namespace gdet
