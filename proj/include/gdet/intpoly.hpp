#pragma once

// Dense exact polynomials over Z, their residues mod x^N - 1, cyclotomic
// polynomials and resultants.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gdet {

using Int = mpz_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t k);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Int> coeffs() const { return coeffs_; }
  // Coefficient of x^i, zero past the degree.
  Int coeff(std::size_t i) const;
  const Int& leading() const;

  Int eval(const Int& x) const;
  // Content with positive sign; zero for the zero polynomial.
  Int content() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Int& c);
  // Exact division of every coefficient; throws if not exact.
  IntPoly& divide_exact(const Int& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  // p(x) -> p(x^k), k >= 1.
  IntPoly compose_power(std::size_t k) const;
  // p(x) -> p(-x).
  IntPoly negate_variable() const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly pow(const IntPoly& p, unsigned exp);

// Remainder and quotient by a divisor whose leading coefficient is +-1.
IntPoly rem_monic(const IntPoly& a, const IntPoly& b);
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

// lc(b)^{deg a - deg b + 1} * a = q*b + r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// 1 + x + ... + x^{N-1}.
IntPoly all_ones(std::size_t n);

// Phi_d, memoized; safe for concurrent callers.
const IntPoly& cyclotomic(std::size_t d);

// Res(a, b) = lc(a)^{deg b} * prod_{a(alpha)=0} b(alpha), computed by the
// subresultant PRS. Zero when either argument is zero.
Int resultant(const IntPoly& a, const IntPoly& b);

// Same value via residues modulo the fixed 62-bit primes, enough of them to
// exceed twice the Hadamard bound ||a||^{deg b} ||b||^{deg a}.
Int resultant_modular(const IntPoly& a, const IntPoly& b);

// Residue class modulo x^N - 1: exactly N coefficients.
class CyclicPoly {
 public:
  explicit CyclicPoly(std::size_t modulus);
  CyclicPoly(std::size_t modulus, std::vector<Int> coeffs);

  // Folds index i onto i mod N.
  static CyclicPoly reduce(const IntPoly& p, std::size_t modulus);
  static CyclicPoly monomial(std::size_t modulus, const Int& c, std::size_t k);

  std::size_t modulus() const { return coeffs_.size(); }
  std::span<const Int> coeffs() const { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  Int& operator[](std::size_t i) { return coeffs_[i]; }
  bool is_zero() const;

  // Representative of degree < N.
  IntPoly lift() const;
  // Value at x = 1 and x = -1 (the latter only meaningful for even N).
  Int sum() const;
  Int alternating_sum() const;

  CyclicPoly& operator+=(const CyclicPoly& o);
  CyclicPoly& operator-=(const CyclicPoly& o);
  CyclicPoly& operator*=(const Int& c);
  friend CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { return a += b; }
  friend CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { return a -= b; }
  friend CyclicPoly operator*(CyclicPoly a, const Int& c) { return a *= c; }
  CyclicPoly operator-() const;

  friend bool operator==(const CyclicPoly& a, const CyclicPoly& b) = default;

 private:
  std::vector<Int> coeffs_;
};

CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b);
// x^i -> x^{-i}.
CyclicPoly reciprocal(const CyclicPoly& a);
// Multiplication by x^k.
CyclicPoly shift(const CyclicPoly& a, long k);

}  // namespace gdet
