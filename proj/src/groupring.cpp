#include "gdet/groupring.hpp"

#include <stdexcept>

#include "gdet/error.hpp"

namespace gdet {

std::string to_string(Family f) {
  switch (f) {
    case Family::cyclic:
      return "cyclic";
    case Family::dihedral:
      return "dihedral";
    case Family::dicyclic:
      return "dicyclic";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "cyclic") return Family::cyclic;
  if (s == "dihedral") return Family::dihedral;
  if (s == "dicyclic") return Family::dicyclic;
  throw UsageError("unknown group family '" + s + "' (expected cyclic, dihedral or dicyclic)");
}

namespace {

GroupSpec make_group(Family f, std::size_t n) {
  if (n == 0) throw UsageError("group parameter n must be positive");
  return GroupSpec{f, n};
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::size_t n) { return make_group(Family::cyclic, n); }
GroupSpec GroupSpec::dihedral(std::size_t n) { return make_group(Family::dihedral, n); }
GroupSpec GroupSpec::dicyclic(std::size_t n) { return make_group(Family::dicyclic, n); }

std::size_t GroupSpec::order() const {
  switch (family) {
    case Family::cyclic:
      return n;
    case Family::dihedral:
      return 2 * n;
    case Family::dicyclic:
      return 4 * n;
  }
  return 0;
}

std::size_t GroupSpec::rotation_modulus() const { return family == Family::dicyclic ? 2 * n : n; }

std::string GroupSpec::name() const {
  switch (family) {
    case Family::cyclic:
      return "Z_" + std::to_string(n);
    case Family::dihedral:
      return "D_" + std::to_string(2 * n);
    case Family::dicyclic:
      return "Q_" + std::to_string(4 * n);
  }
  return "?";
}

GroupWord word_mul(const GroupSpec& g, GroupWord a, GroupWord b) {
  const std::size_t m = g.rotation_modulus();
  if (b.y == 0) return {a.y, (a.x + b.x) % m};
  // y^a x^i y x^j = y^{a+1} x^{j-i}
  std::size_t x = (b.x + m - a.x) % m;
  if (a.y == 0) return {1, x};
  // y^2 = 1 (dihedral) or x^n (dicyclic)
  if (g.family == Family::dicyclic) x = (x + g.n) % m;
  return {0, x};
}

GroupWord word_inverse(const GroupSpec& g, GroupWord a) {
  const std::size_t m = g.rotation_modulus();
  if (a.y == 0) return {0, (m - a.x) % m};
  // (y x^i)^{-1} = x^{-i} y^{-1} = y x^i y^{-2}; dicyclic y^{-2} = x^n.
  if (g.family == Family::dicyclic) return {1, (a.x + g.n) % m};
  return a;
}

std::vector<GroupWord> elements(const GroupSpec& g) {
  const std::size_t m = g.rotation_modulus();
  std::vector<GroupWord> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < m; ++i) out.push_back({0, i});
  if (g.has_reflection()) {
    for (std::size_t i = 0; i < m; ++i) out.push_back({1, i});
  }
  return out;
}

std::size_t word_index(const GroupSpec& g, GroupWord w) {
  return static_cast<std::size_t>(w.y) * g.rotation_modulus() + w.x;
}

// ------------------------------------------------------------ RingElement

RingElement::RingElement(GroupSpec group, CyclicPoly f_part, CyclicPoly g_part)
    : group_(group), f_(std::move(f_part)), g_(std::move(g_part)) {
  const std::size_t m = group_.rotation_modulus();
  if (f_.modulus() != m || g_.modulus() != m) {
    throw UsageError("ring element for " + group_.name() + " needs parts modulo x^" +
                     std::to_string(m) + " - 1");
  }
  if (group_.family == Family::cyclic && !g_.is_zero()) {
    throw UsageError("cyclic group ring elements have no y-part");
  }
}

RingElement::RingElement(GroupSpec group, CyclicPoly f_part)
    : RingElement(group, std::move(f_part), CyclicPoly(group.rotation_modulus())) {}

RingElement RingElement::zero(GroupSpec group) {
  return RingElement(group, CyclicPoly(group.rotation_modulus()));
}

RingElement RingElement::identity(GroupSpec group) {
  return RingElement(group, CyclicPoly::monomial(group.rotation_modulus(), 1, 0));
}

RingElement RingElement::from_coefficients(GroupSpec group, std::span<const Int> coeffs) {
  if (coeffs.size() != group.order()) {
    throw UsageError(group.name() + " needs " + std::to_string(group.order()) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  const std::size_t m = group.rotation_modulus();
  std::vector<Int> f(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<Int> g(m);
  if (group.has_reflection()) g.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(m), coeffs.end());
  return RingElement(group, CyclicPoly(m, std::move(f)), CyclicPoly(m, std::move(g)));
}

Int RingElement::coefficient(GroupWord w) const { return w.y ? g_[w.x] : f_[w.x]; }

std::vector<Int> RingElement::coefficients() const {
  std::vector<Int> out(f_.coeffs().begin(), f_.coeffs().end());
  if (group_.has_reflection()) out.insert(out.end(), g_.coeffs().begin(), g_.coeffs().end());
  return out;
}

RingElement RingElement::swapped() const {
  if (!group_.has_reflection()) throw UsageError("swap needs a y-part (dihedral or dicyclic)");
  return RingElement(group_, g_, f_);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (!(group_ == o.group_)) throw UsageError("group mismatch in ring addition");
  f_ += o.f_;
  g_ += o.g_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  if (!(group_ == o.group_)) throw UsageError("group mismatch in ring subtraction");
  f_ -= o.f_;
  g_ -= o.g_;
  return *this;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  if (!(a.group() == b.group())) {
    throw UsageError("group mismatch: " + a.group().name() + " vs " + b.group().name());
  }
  const GroupSpec& grp = a.group();
  if (grp.family == Family::cyclic) return RingElement(grp, cyclic_mul(a.f(), b.f()));
  // (f1 + y g1)(f2 + y g2): x^i y = y x^{-i}, y^2 = 1 or x^n.
  CyclicPoly gg = cyclic_mul(reciprocal(a.g()), b.g());
  if (grp.family == Family::dicyclic) gg = shift(gg, static_cast<long>(grp.n));
  CyclicPoly f = cyclic_mul(a.f(), b.f()) + gg;
  CyclicPoly g = cyclic_mul(reciprocal(a.f()), b.g()) + cyclic_mul(a.g(), b.f());
  return RingElement(grp, std::move(f), std::move(g));
}

RingElement ring_pow(const RingElement& a, unsigned long exp) {
  RingElement result = RingElement::identity(a.group());
  RingElement base = a;
  while (exp) {
    if (exp & 1) result = ring_mul(result, base);
    exp >>= 1;
    if (exp) base = ring_mul(base, base);
  }
  return result;
}

IntMatrix to_matrix(const RingElement& a) {
  const GroupSpec& grp = a.group();
  const auto words = elements(grp);
  std::vector<GroupWord> inverses;
  inverses.reserve(words.size());
  for (const GroupWord& w : words) inverses.push_back(word_inverse(grp, w));
  IntMatrix m(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      m(i, j) = a.coefficient(word_mul(grp, words[i], inverses[j]));
    }
  }
  return m;
}

}  // namespace gdet
