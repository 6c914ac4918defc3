#pragma once

#include <string>

#include "kur/forms.hpp"

namespace kur {

/// Parses the canonical expression grammar into a canonical form:
///   sums "+"/"-", products "*", wedge/power "^", value marker "@d(a)",
///   characters "E[1+i,0;-1+i,0]", monomials "v(1)", "vb(2)", "t(1)",
///   cotangent letters "dv(1)", "dvb(2)", rationals "3/2", the unit "i".
/// Parenthesized refs and bare-index forms ("dv1", "@d2", "t") are both
/// accepted; the renderer emits the bare-index style, so render-parse-render
/// is the identity on canonical text.  ParseError carries line/column;
/// TypeError reports degree or geometry misuse.
VForm parse_expression(const std::string& text, const Geometry& g);

/// "t^3", "t1^2*t2" -> exponent vector.
TMono parse_tmono(const std::string& text, int m);

/// Comma-separated monomial list -> monomial ideal, e.g. "t^3" or
/// "t1^2, t1*t2".
MonomialIdeal parse_ideal(const std::string& text, int m);

} // namespace kur
