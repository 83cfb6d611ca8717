#include "hjac/polynomial_io.hpp"

#include <cctype>

namespace hjac {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parse_expression() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    skip_ws();
    if (at_end()) fail("expected a term");
    Term t{MultiIndex(ring_->nvars()), 1};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = parse_coefficient();
      skip_ws();
      if (at_end() || peek() != '*') return t;
      ++pos_;
      skip_ws();
    }
    parse_monomials(t.mono);
    return t;
  }

  Scalar parse_coefficient() {
    mpz_class num(parse_uint_digits());
    skip_ws();
    if (!at_end() && peek() == '/') {
      const std::size_t slash = pos_;
      if (!ring_->field().is_rational()) fail("division is only allowed over the rationals", slash);
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      const std::size_t den_pos = pos_;
      mpz_class den(parse_uint_digits());
      if (den == 0) fail("zero denominator", den_pos);
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }
    return Scalar(num);
  }

  void parse_monomials(MultiIndex& mono) {
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        if (!at_end() && peek() == '/') fail("division is not supported", pos_);
        fail("expected a variable");
      }
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'", start);
      unsigned long exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        const std::size_t epos = pos_;
        mpz_class e(parse_uint_digits());
        if (e > 60000) fail("exponent too large", epos);
        exponent = e.get_ui();
      }
      const unsigned long total = mono[*idx] + exponent;
      if (total > 60000) fail("exponent too large", start);
      mono.set(*idx, static_cast<unsigned>(total));
      skip_ws();
      if (at_end() || peek() != '*') return;
      ++pos_;
    }
  }

  std::string parse_uint_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(message, offset_ + at);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::vector<Polynomial> parse_separated(std::string_view text, const RingPtr& ring, char sep,
                                        std::size_t base) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    out.push_back(Parser(piece, ring, base + start).parse_expression());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, 0).parse_expression();
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingContext& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Scalar c = t.coeff;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string monos;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!monos.empty()) monos += "*";
      monos += ring.variable(i);
      if (t.mono[i] > 1) monos += "^" + std::to_string(t.mono[i]);
    }
    if (monos.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += monos;
    } else {
      out += c.get_str() + "*" + monos;
    }
  }
  return out;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  if (lo < hi && text[lo] == '(') {
    if (text[hi - 1] != ')') throw ParseError("unbalanced parenthesis", hi);
    ++lo;
    --hi;
  }
  std::string_view inner = text.substr(lo, hi - lo);
  // "()" denotes the zero ideal.
  if (inner.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  return parse_separated(inner, ring, ',', lo);
}

std::vector<Polynomial> parse_image_list(std::string_view text, const RingPtr& ring) {
  return parse_separated(text, ring, ';', 0);
}

}  // namespace hjac
