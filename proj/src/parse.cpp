#include "gdet/parse.hpp"

#include <cctype>
#include <limits>

#include "gdet/error.hpp"

namespace gdet {

namespace {

// Powers of a general element beyond this are refused; x^e and y^e reduce
// their exponent first and accept anything that fits in 64 bits.
constexpr unsigned long kMaxGeneralExponent = 4096;

class Parser {
 public:
  Parser(const GroupSpec& g, const std::string& s) : g_(g), s_(s) {}

  RingElement parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    RingElement v = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
  }

  RingElement expr() {
    RingElement v = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      RingElement t = term();
      if (c == '+') v += t;
      else v -= t;
    }
  }

  RingElement term() {
    RingElement v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = ring_mul(v, unary());
      } else if (starts_factor(c)) {
        v = ring_mul(v, power());
      } else {
        return v;
      }
    }
  }

  RingElement unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return RingElement::zero(g_) - unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RingElement power() {
    skip();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      const unsigned long e = exponent_or_one();
      return c == 'x' ? x_power(e) : y_power(e, start);
    }
    RingElement base = atom();
    if (peek() != '^') return base;
    const std::size_t caret = pos_;
    const unsigned long e = exponent_or_one();
    if (e > kMaxGeneralExponent) fail_at("exponent too large", caret);
    return ring_pow(base, e);
  }

  unsigned long exponent_or_one() {
    if (peek() != '^') return 1;
    const std::size_t caret = pos_;
    ++pos_;
    skip();
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail_at("expected exponent after '^'", caret);
    }
    const std::size_t start = pos_;
    unsigned long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const unsigned d = static_cast<unsigned>(s_[pos_] - '0');
      if (e > (std::numeric_limits<unsigned long>::max() - d) / 10) fail_at("exponent overflow", start);
      e = e * 10 + d;
      ++pos_;
    }
    return e;
  }

  RingElement x_power(unsigned long e) const {
    const std::size_t m = g_.rotation_modulus();
    return RingElement(g_, CyclicPoly::monomial(m, 1, e % m), CyclicPoly(m));
  }

  RingElement y_power(unsigned long e, std::size_t at) const {
    if (!g_.has_reflection()) fail_at("y is not available for " + g_.name(), at);
    const std::size_t m = g_.rotation_modulus();
    // y^2 = 1 (dihedral) or x^n (dicyclic), so y^4 = 1 in both.
    const unsigned long r = e % 4;
    const std::size_t xk = g_.family == Family::dicyclic ? g_.n : 0;
    switch (r) {
      case 0: return RingElement::identity(g_);
      case 1: return RingElement(g_, CyclicPoly(m), CyclicPoly::monomial(m, 1, 0));
      case 2: return RingElement(g_, CyclicPoly::monomial(m, 1, xk), CyclicPoly(m));
      default: return RingElement(g_, CyclicPoly(m), CyclicPoly::monomial(m, 1, xk));
    }
  }

  RingElement atom() {
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      if (peek() == ')') fail("empty parentheses");
      RingElement v = expr();
      if (peek() != ')') {
        if (pos_ == s_.size()) fail_at("unclosed '('", open);
        fail("expected ')'");
      }
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const Int v(s_.substr(start, pos_ - start));
      const std::size_t m = g_.rotation_modulus();
      return RingElement(g_, CyclicPoly::monomial(m, v, 0), CyclicPoly(m));
    }
    if (pos_ == s_.size()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  const GroupSpec& g_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

// One comma-separated list starting at begin, ending at end (exclusive).
std::vector<Int> parse_list(const std::string& s, std::size_t begin, std::size_t end) {
  std::vector<Int> out;
  std::size_t pos = begin;
  for (;;) {
    while (pos < end && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    const std::size_t start = pos;
    if (pos < end && s[pos] == '-') ++pos;
    const std::size_t digits = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected integer", start);
    out.emplace_back(s.substr(start, pos - start));
    while (pos < end && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == end) return out;
    if (s[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
}

CyclicPoly fold(const std::vector<Int>& c, std::size_t m) {
  CyclicPoly p(m);
  for (std::size_t i = 0; i < c.size(); ++i) p[i % m] += c[i];
  return p;
}

RingElement parse_raw(const GroupSpec& g, const std::string& s) {
  const std::size_t semi = s.find(';');
  const std::size_t m = g.rotation_modulus();
  if (!g.has_reflection()) {
    if (semi != std::string::npos) throw ParseError(g.name() + " takes one coefficient list", semi);
    return RingElement(g, fold(parse_list(s, 0, s.size()), m));
  }
  if (semi == std::string::npos) throw ParseError(g.name() + " needs two lists 'f;g'", s.size());
  if (const std::size_t extra = s.find(';', semi + 1); extra != std::string::npos) {
    throw ParseError("too many ';'", extra);
  }
  return RingElement(g, fold(parse_list(s, 0, semi), m), fold(parse_list(s, semi + 1, s.size()), m));
}

std::string join(std::span<const Int> c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += c[i].get_str();
  }
  return out;
}

}  // namespace

RingElement parse_element(const GroupSpec& g, const std::string& text) {
  if (text.find_first_of(",;") != std::string::npos) return parse_raw(g, text);
  return Parser(g, text).parse();
}

std::string serialize_element(const RingElement& a) {
  std::string out = join(a.f().coeffs());
  if (a.group().has_reflection()) out += ";" + join(a.g().coeffs());
  return out;
}

std::string format_poly(const CyclicPoly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.modulus(); ++k) {
    const Int& c = p[k];
    if (c == 0) continue;
    const Int mag = abs(c);
    if (out.empty()) out = c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string format_element(const RingElement& a) {
  const bool has_f = !a.f().is_zero();
  const bool has_g = a.group().has_reflection() && !a.g().is_zero();
  if (!has_g) return format_poly(a.f());
  const std::string yg = "y*(" + format_poly(a.g()) + ")";
  return has_f ? format_poly(a.f()) + " + " + yg : yg;
}

}  // namespace gdet
