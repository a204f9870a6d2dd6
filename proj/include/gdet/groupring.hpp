#pragma once

// The groups Z_n, D_{2n} = <x,y : x^n = y^2 = 1, xy = yx^-1> and
// Q_{4n} = <x,y : x^{2n} = 1, y^2 = x^n, xy = yx^-1>, and their integral
// group rings. Ring elements are stored as f(x) + y g(x).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gdet/intpoly.hpp"
#include "gdet/matrix.hpp"

namespace gdet {

enum class Family { cyclic, dihedral, dicyclic };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct GroupSpec {
  Family family = Family::cyclic;
  std::size_t n = 1;

  static GroupSpec cyclic(std::size_t n);
  static GroupSpec dihedral(std::size_t n);
  static GroupSpec dicyclic(std::size_t n);

  std::size_t order() const;
  // Order of x: n for cyclic and dihedral, 2n for dicyclic.
  std::size_t rotation_modulus() const;
  bool has_reflection() const { return family != Family::cyclic; }
  // Z_n, D_{2n} or Q_{4n}.
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// y^{y} x^{x}, with x in [0, rotation_modulus).
struct GroupWord {
  int y = 0;
  std::size_t x = 0;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

GroupWord word_mul(const GroupSpec& g, GroupWord a, GroupWord b);
GroupWord word_inverse(const GroupSpec& g, GroupWord a);

// Fixed enumeration x^0..x^{m-1}, then y x^0..y x^{m-1}.
std::vector<GroupWord> elements(const GroupSpec& g);
std::size_t word_index(const GroupSpec& g, GroupWord w);

class RingElement {
 public:
  // g_part must be zero for the cyclic family.
  RingElement(GroupSpec group, CyclicPoly f_part, CyclicPoly g_part);
  RingElement(GroupSpec group, CyclicPoly f_part);

  static RingElement zero(GroupSpec group);
  static RingElement identity(GroupSpec group);
  // Coefficients in the fixed element enumeration.
  static RingElement from_coefficients(GroupSpec group, std::span<const Int> coeffs);

  const GroupSpec& group() const { return group_; }
  const CyclicPoly& f() const { return f_; }
  const CyclicPoly& g() const { return g_; }

  Int coefficient(GroupWord w) const;
  std::vector<Int> coefficients() const;

  // f + y g  ->  g + y f.
  RingElement swapped() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  GroupSpec group_;
  CyclicPoly f_;
  CyclicPoly g_;
};

RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_pow(const RingElement& a, unsigned long exp);

// Entry (i, j) is the coefficient at g_i g_j^{-1}.
IntMatrix to_matrix(const RingElement& a);

}  // namespace gdet
