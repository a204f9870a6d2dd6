#include "gdet/verify/oracles.hpp"

#include "gdet/matrix.hpp"
#include "gdet/ntheory.hpp"

namespace gdet::verify {

Int sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  IntMatrix s(m + n);
  // n shifted copies of a, then m shifted copies of b; highest degree first.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = a.coeff(m - k);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = b.coeff(n - k);
  }
  return bareiss_determinant(std::move(s));
}

Int cyclotomic_resultant_formula(std::uint64_t d, std::uint64_t m) {
  if (m % d != 0) return 1;
  const auto f = factor_u64(m / d);
  if (f.size() != 1) return 1;
  return ipow(Int(f.front().first), static_cast<unsigned long>(euler_phi(d)));
}

RingElement convolve_words(const RingElement& a, const RingElement& b) {
  const GroupSpec& grp = a.group();
  const auto words = elements(grp);
  std::vector<Int> c(words.size());
  for (const GroupWord& u : words) {
    const Int au = a.coefficient(u);
    if (au == 0) continue;
    for (const GroupWord& v : words) {
      c[word_index(grp, word_mul(grp, u, v))] += au * b.coefficient(v);
    }
  }
  return RingElement::from_coefficients(grp, c);
}

RingElement random_element(const GroupSpec& g, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Int> c(g.order());
  for (Int& v : c) v = dist(rng);
  return RingElement::from_coefficients(g, c);
}

IntPoly random_poly(int max_degree, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (Int& v : c) v = dist(rng);
  return IntPoly(std::move(c));
}

}  // namespace gdet::verify
