#pragma once

// Quaternion order literals such as "3+0.2e1-0.3e2+0.4e3" or "3+1/5e1".
//
//   literal   := term (sign term)*
//   term      := [sign] coefficient [unit] | [sign] unit
//   coefficient := decimal | decimal "/" decimal
//   unit      := "e1" | "e2" | "e3"
//
// Whitespace is allowed around signs. A unit without a coefficient has coefficient 1.
// Each component may appear at most once. Scientific notation is not
// accepted because "1e1" reads as a unit.

#include <string>
#include <string_view>

#include "qspline/quaternion.hpp"

namespace qspline::cli {

// Throws PreconditionError on malformed input.
Quaternion parse_order(std::string_view text);

// Canonical literal: the scalar, then each nonzero vector component with an
// explicit sign; a unit coefficient of 1 is omitted. Components use up to 15
// significant digits in positional notation, so parse_order reads them back.
std::string format_order(const Quaternion& q);

// "a + v1 e1 + v2 e2 + v3 e3" with 15 significant digits.
std::string format_value(const Quaternion& q);

// %.15g, with negative zero printed as 0.
std::string format_number(double x);

}  // namespace qspline::cli
