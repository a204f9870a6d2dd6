#include "gdet/detengine.hpp"

#include "gdet/error.hpp"
#include "gdet/modular.hpp"
#include "gdet/ntheory.hpp"

namespace gdet {

CyclicPoly measure_poly(const RingElement& a) {
  const GroupSpec& grp = a.group();
  if (grp.family == Family::cyclic) {
    throw UsageError("measure_poly is defined for dihedral and dicyclic groups only");
  }
  CyclicPoly ff = cyclic_mul(a.f(), reciprocal(a.f()));
  CyclicPoly gg = cyclic_mul(a.g(), reciprocal(a.g()));
  if (grp.family == Family::dicyclic) gg = shift(gg, static_cast<long>(grp.n));
  return ff - gg;
}

CyclicPoly determinant_poly(const RingElement& a) {
  if (a.group().family == Family::cyclic) return a.f();
  return measure_poly(a);
}

namespace {

// x^k B (mod x^N - 1) with the smallest possible degree, found by starting
// right after the longest cyclic run of zero coefficients.
struct Rotation {
  IntPoly poly;
  std::size_t shift = 0;
};

Rotation rotate_to_min_degree(const CyclicPoly& b) {
  const std::size_t n = b.modulus();
  std::size_t best_start = 0;
  std::size_t best_gap = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i] == 0) continue;
    // length of the zero run that ends just before index i (cyclically)
    std::size_t gap = 0;
    std::size_t j = (i + n - 1) % n;
    while (gap < n && b[j] == 0) {
      ++gap;
      j = (j + n - 1) % n;
    }
    if (gap > best_gap) {
      best_gap = gap;
      best_start = i;
    }
  }
  // x^{N - start} moves index start to 0.
  const std::size_t k = (n - best_start) % n;
  return {shift(b, static_cast<long>(k)).lift(), k};
}

IntPoly x_pow_minus_one(std::size_t n) {
  std::vector<Int> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

constexpr std::size_t kDirectModulusLimit = 64;
constexpr long kDirectDegreeLimit = 64;

Int part_for_divisor(const Rotation& rot, std::uint64_t d) {
  const IntPoly& phi = cyclotomic(d);
  // Fold mod x^d - 1 (Phi_d divides it), then reduce mod Phi_d.
  IntPoly folded = rot.poly;
  if (folded.degree() >= static_cast<long>(d)) folded = CyclicPoly::reduce(folded, d).lift();
  IntPoly reduced = rem_monic(folded, phi);
  Int part = resultant(phi, reduced);
  // Res(Phi_d, x) is 1 except for d = 2, where it is -1.
  if (d == 2 && (rot.shift & 1)) part = -part;
  return part;
}

FactoredDeterminant factor_cyclic(const CyclicPoly& b) {
  FactoredDeterminant out;
  const auto divs = divisors(b.modulus());
  if (b.is_zero()) {
    out.total = 0;
    for (auto d : divs) out.parts[d] = 0;
    return out;
  }
  const Rotation rot = rotate_to_min_degree(b);
  out.total = 1;
  for (auto d : divs) {
    Int part = part_for_divisor(rot, d);
    out.total *= part;
    out.parts.emplace(d, std::move(part));
  }
  return out;
}

}  // namespace

Int cyclic_resultant(const CyclicPoly& b) {
  if (b.is_zero()) return 0;
  const std::size_t n = b.modulus();
  const Rotation rot = rotate_to_min_degree(b);
  const bool unit_lead = abs(rot.poly.leading()) == 1;
  if (n <= kDirectModulusLimit || (rot.poly.degree() <= kDirectDegreeLimit && unit_lead)) {
    Int r = resultant(x_pow_minus_one(n), rot.poly);
    // Res(x^N - 1, x) = (-1)^{N+1}
    if (((n + 1) * rot.shift) & 1) r = -r;
    return r;
  }
  return factor_cyclic(b).total;
}

Int cyclic_resultant_modular(const CyclicPoly& b) {
  if (b.is_zero()) return 0;
  const std::size_t n = b.modulus();
  const Rotation rot = rotate_to_min_degree(b);
  Int normsq = 0;
  for (const Int& c : b.coeffs()) mpz_addmul(normsq.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
  const unsigned long bound_bits = n * ((mpz_sizeinbase(normsq.get_mpz_t(), 2) + 1) / 2);

  modular::CrtAccumulator crt;
  for (std::size_t i = 0; mpz_sizeinbase(crt.modulus().get_mpz_t(), 2) <= bound_bits + 1; ++i) {
    const modular::u64 p = modular::crt_prime(i);
    if (modular::reduce(rot.poly.leading(), p) == 0) continue;
    std::vector<modular::u64> xn(n + 1, 0);
    xn[0] = p - 1;
    xn[n] = 1;
    std::vector<modular::u64> bp;
    bp.reserve(rot.poly.coeffs().size());
    for (const Int& c : rot.poly.coeffs()) bp.push_back(modular::reduce(c, p));
    crt.add(modular::resultant_mod(std::move(xn), std::move(bp), p), p);
  }
  Int r = crt.value();
  if (((n + 1) * rot.shift) & 1) r = -r;
  return r;
}

Int det_exact(const RingElement& a) { return cyclic_resultant(determinant_poly(a)); }

FactoredDeterminant det_factored(const RingElement& a) { return factor_cyclic(determinant_poly(a)); }

Int det_matrix_oracle(const RingElement& a) { return bareiss_determinant(to_matrix(a)); }

}  // namespace gdet
