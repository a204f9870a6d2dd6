#include "gdet/intpoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "gdet/modular.hpp"
#include "gdet/ntheory.hpp"

namespace gdet {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t k) {
  std::vector<Int> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

const Int& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Int& v : coeffs_) v *= c;
  return *this;
}

IntPoly& IntPoly::divide_exact(const Int& c) {
  for (Int& v : coeffs_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) {
      throw std::domain_error("IntPoly::divide_exact: inexact coefficient division");
    }
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (Int& v : out.coeffs_) v = -v;
  return out;
}

IntPoly IntPoly::compose_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("compose_power: k must be positive");
  if (is_zero()) return {};
  std::vector<Int> out((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::negate_variable() const {
  IntPoly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly pow(const IntPoly& p, unsigned exp) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (exp) {
    if (exp & 1) result = result * base;
    exp >>= 1;
    if (exp) base = base * base;
  }
  return result;
}

namespace {

// Long division by b with lc(b) = +-1; returns {quotient, remainder}.
std::pair<IntPoly, IntPoly> divmod_unit(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Int& lead = b.leading();
  if (abs(lead) != 1) throw std::domain_error("divisor must have leading coefficient +-1");
  const long db = b.degree();
  std::vector<Int> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Int> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  auto bc = b.coeffs();
  Int q;
  for (long top = a.degree(); top >= db; --top) {
    q = rem[top];
    if (q == 0) continue;
    if (lead < 0) q = -q;
    const std::size_t shift = static_cast<std::size_t>(top - db);
    quot[shift] = q;
    for (long k = 0; k <= db; ++k) {
      if (bc[k] != 0) mpz_submul(rem[shift + k].get_mpz_t(), q.get_mpz_t(), bc[k].get_mpz_t());
    }
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

}  // namespace

IntPoly rem_monic(const IntPoly& a, const IntPoly& b) { return divmod_unit(a, b).second; }

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod_unit(a, b);
  if (!r.is_zero()) throw std::domain_error("div_exact: nonzero remainder");
  return q;
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  const long db = b.degree();
  if (a.degree() < db) return a;
  const Int& lead = b.leading();
  if (abs(lead) == 1) {
    IntPoly r = divmod_unit(a, b).second;
    if (lead < 0 && ((a.degree() - db + 1) & 1)) r = -r;
    return r;
  }
  auto bc = b.coeffs();
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  for (long top = a.degree(); top >= db; --top) {
    const Int c = r[top];
    for (long i = 0; i < top; ++i) r[i] *= lead;
    if (c != 0) {
      const std::size_t shift = static_cast<std::size_t>(top - db);
      for (long k = 0; k < db; ++k) {
        if (bc[k] != 0) mpz_submul(r[shift + k].get_mpz_t(), c.get_mpz_t(), bc[k].get_mpz_t());
      }
    }
    r[top] = 0;
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

IntPoly all_ones(std::size_t n) {
  if (n == 0) throw std::invalid_argument("all_ones: N must be positive");
  return IntPoly(std::vector<Int>(n, Int(1)));
}

// ------------------------------------------------------------ cyclotomic

namespace {

struct CyclotomicTable {
  std::shared_mutex mu;
  std::map<std::size_t, std::unique_ptr<const IntPoly>> polys;
};

CyclotomicTable& cyclotomic_table() {
  static CyclotomicTable table;
  return table;
}

IntPoly compute_cyclotomic(std::size_t d) {
  if (d == 1) return IntPoly{-1, 1};
  if (d == 2) return IntPoly{1, 1};
  const auto factors = factor_u64(d);
  // Phi_{p m}(x) = Phi_m(x^p) when p | m.
  for (auto [p, e] : factors) {
    if (e > 1) return cyclotomic(d / p).compose_power(p);
  }
  // Squarefree from here on. Phi_{2m}(x) = Phi_m(-x) for odd m > 1.
  if (d % 2 == 0) return cyclotomic(d / 2).negate_variable();
  // Phi_{p m}(x) = Phi_m(x^p) / Phi_m(x) for p not dividing m; divide by the
  // smallest possible Phi_m by taking p as the largest prime factor.
  const std::size_t p = factors.back().first;
  const IntPoly& inner = cyclotomic(d / p);
  return div_exact(inner.compose_power(p), inner);
}

}  // namespace

const IntPoly& cyclotomic(std::size_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: d must be positive");
  auto& table = cyclotomic_table();
  {
    std::shared_lock lock(table.mu);
    auto it = table.polys.find(d);
    if (it != table.polys.end()) return *it->second;
  }
  auto computed = std::make_unique<const IntPoly>(compute_cyclotomic(d));
  std::unique_lock lock(table.mu);
  auto [it, inserted] = table.polys.emplace(d, std::move(computed));
  return *it->second;
}

// ------------------------------------------------------------ resultants

Int resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  if (a_in.degree() == 0) return ipow(a_in.leading(), static_cast<unsigned long>(b_in.degree()));
  if (b_in.degree() == 0) return ipow(b_in.leading(), static_cast<unsigned long>(a_in.degree()));

  // Subresultant PRS on primitive parts; contents are restored through t.
  IntPoly a = a_in;
  IntPoly b = b_in;
  const Int ca = a.content();
  const Int cb = b.content();
  a.divide_exact(ca);
  b.divide_exact(cb);
  const Int t = ipow(ca, static_cast<unsigned long>(b.degree())) *
                ipow(cb, static_cast<unsigned long>(a.degree()));
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
  }
  Int g = 1;
  Int h = 1;
  for (;;) {
    const unsigned long delta = static_cast<unsigned long>(a.degree() - b.degree());
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    r.divide_exact(g * ipow(h, delta));
    b = std::move(r);
    g = a.leading();
    if (delta > 0) {
      // h <- g^delta / h^(delta-1)
      Int next = ipow(g, delta);
      const Int den = ipow(h, delta - 1);
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), den.get_mpz_t());
      h = std::move(next);
    }
    if (b.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(a.degree());
      Int last = ipow(b.leading(), da);
      const Int den = ipow(h, da - 1);
      mpz_divexact(last.get_mpz_t(), last.get_mpz_t(), den.get_mpz_t());
      return sign * t * last;
    }
  }
}

namespace {

// Upper bound on log2 ||p||_2.
unsigned long norm_bits(const IntPoly& p) {
  Int sq = 0;
  for (const Int& c : p.coeffs()) mpz_addmul(sq.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
  return (mpz_sizeinbase(sq.get_mpz_t(), 2) + 1) / 2;
}

std::vector<modular::u64> residues(const IntPoly& p, modular::u64 prime) {
  std::vector<modular::u64> out;
  out.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) out.push_back(modular::reduce(c, prime));
  return out;
}

}  // namespace

Int resultant_modular(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const unsigned long bound_bits = static_cast<unsigned long>(b.degree()) * norm_bits(a) +
                                   static_cast<unsigned long>(a.degree()) * norm_bits(b);
  modular::CrtAccumulator crt;
  for (std::size_t i = 0; mpz_sizeinbase(crt.modulus().get_mpz_t(), 2) <= bound_bits + 1; ++i) {
    const modular::u64 p = modular::crt_prime(i);
    // Primes dividing a leading coefficient would change the degree.
    if (modular::reduce(a.leading(), p) == 0 || modular::reduce(b.leading(), p) == 0) continue;
    crt.add(modular::resultant_mod(residues(a, p), residues(b, p), p), p);
  }
  return crt.value();
}

// ------------------------------------------------------------ CyclicPoly

CyclicPoly::CyclicPoly(std::size_t modulus) : coeffs_(modulus) {
  if (modulus == 0) throw std::invalid_argument("CyclicPoly: modulus must be positive");
}

CyclicPoly::CyclicPoly(std::size_t modulus, std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (modulus == 0) throw std::invalid_argument("CyclicPoly: modulus must be positive");
  if (coeffs_.size() != modulus) {
    throw std::invalid_argument("CyclicPoly: expected " + std::to_string(modulus) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

CyclicPoly CyclicPoly::reduce(const IntPoly& p, std::size_t modulus) {
  CyclicPoly out(modulus);
  auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out.coeffs_[i % modulus] += c[i];
  return out;
}

CyclicPoly CyclicPoly::monomial(std::size_t modulus, const Int& c, std::size_t k) {
  CyclicPoly out(modulus);
  out.coeffs_[k % modulus] = c;
  return out;
}

bool CyclicPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

IntPoly CyclicPoly::lift() const { return IntPoly(coeffs_); }

Int CyclicPoly::sum() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

Int CyclicPoly::alternating_sum() const {
  Int s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i & 1) {
      s -= coeffs_[i];
    } else {
      s += coeffs_[i];
    }
  }
  return s;
}

namespace {

void require_same_modulus(const CyclicPoly& a, const CyclicPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("cyclic modulus mismatch: " + std::to_string(a.modulus()) +
                                " vs " + std::to_string(b.modulus()));
  }
}

}  // namespace

CyclicPoly& CyclicPoly::operator+=(const CyclicPoly& o) {
  require_same_modulus(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclicPoly& CyclicPoly::operator-=(const CyclicPoly& o) {
  require_same_modulus(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclicPoly& CyclicPoly::operator*=(const Int& c) {
  for (Int& v : coeffs_) v *= c;
  return *this;
}

CyclicPoly CyclicPoly::operator-() const {
  CyclicPoly out = *this;
  for (Int& v : out.coeffs_) v = -v;
  return out;
}

CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b) {
  require_same_modulus(a, b);
  const std::size_t n = a.modulus();
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(out[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return CyclicPoly(n, std::move(out));
}

CyclicPoly reciprocal(const CyclicPoly& a) {
  const std::size_t n = a.modulus();
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[(n - i) % n] = a[i];
  return CyclicPoly(n, std::move(out));
}

CyclicPoly shift(const CyclicPoly& a, long k) {
  const long n = static_cast<long>(a.modulus());
  const long s = ((k % n) + n) % n;
  std::vector<Int> out(a.modulus());
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>((i + s) % n)] = a[static_cast<std::size_t>(i)];
  return CyclicPoly(a.modulus(), std::move(out));
}

}  // namespace gdet
