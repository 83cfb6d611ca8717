#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hjac/polynomial.hpp"

namespace hjac {

/// Malformed polynomial text. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the ASCII grammar
///
///   expression ::= ['+'|'-'] term (('+'|'-') term)*
///   term       ::= coeff | coeff '*' monos | monos
///   monos      ::= var ('^' uint)? ('*' var ('^' uint)?)*
///   coeff      ::= integer | integer '/' positive-integer
///
/// Whitespace is ignored. Coefficients are reduced into the ring's field;
/// fractions are rejected over F_p.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Canonical text: terms in graded-lex descending order, e.g. "x^2 - 3*y + 1/2".
/// The output always parses back to the same polynomial.
std::string format_polynomial(const Polynomial& f);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << format_polynomial(f); }

/// Comma-separated generator list, optionally wrapped in parentheses.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

/// Semicolon-separated list, used for substitution images "x+y^2;y".
std::vector<Polynomial> parse_image_list(std::string_view text, const RingPtr& ring);

}  // namespace hjac
