#pragma once

// Text grammars for ring elements (whitespace-insensitive, ASCII):
//   Z        -?digits
//   Q        -?digits[/digits]
//   F:p      digits (reduced mod p; a/b means a*b^-1)
//   F[X]     c*X^k +- ... +- c   (coefficient 1 and exponents 0/1 may be omitted)
//   Z[i]     a+-bi
//   Z[w]     a+-bw   (w is the cube root of unity j)
//   Z[s]     a+-bs   (s is sqrt 3)
//   M2       [[a,b],[c,d]]
// Ring ids: Z, Q, F:p, Q[X], F:p[X], Z[i], Z[w], Z[s], M2.

#include <string>
#include <string_view>

#include "csq/ring.hpp"

namespace csq {

RingId parse_ring(std::string_view text);

// Throws ParseError carrying the offending position in `text`.
Value parse_value(const RingId& ring, std::string_view text);

std::string format_value(const Value& a);

}  // namespace csq
