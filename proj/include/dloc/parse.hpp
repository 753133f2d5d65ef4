#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dloc/poly.hpp"

namespace dloc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    size_t offset;
};

// Grammar:
//   expr     := '-'? term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := rational | identifier ('^' nat)? | '(' expr ')' ('^' nat)?
//   rational := nat ('/' nat)?
// '*' is optional on input ("3x" parses); printing always emits it.
Poly parse_poly(std::string_view text, const Ring& ring);

// Variant used by the Weyl-operator parser: the ring holds n_comm commutative
// variables followed by derivation symbols, and within a term a commutative
// variable may not follow a derivation symbol (input must be in normal form).
// Parenthesized subexpressions must then be derivation-free.
Poly parse_poly_ordered(std::string_view text, const Ring& ring, int n_comm);

} // namespace dloc
