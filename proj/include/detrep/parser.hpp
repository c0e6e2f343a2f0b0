#pragma once

#include <string>

#include "detrep/matrix.hpp"
#include "detrep/point.hpp"
#include "detrep/polynomial.hpp"

namespace detrep {

// Text formats. Shared grammar, whitespace insignificant:
//   poly   := '-'? term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)?
//   coeff  := nat ('/' nat)?
//   var    := 'x' digit+
// Signs are resolved at the expression level, so printed canonical text
// (leading '-' plus binary '+'/'-') always parses back. Variables run
// x0..x9 unless the text starts with a header "vars N;" raising the count
// (N <= 64); with a header the declared count becomes the ambient variable
// count of every parsed polynomial.
//
// Matrix:  '[' row (',' row)* ']' with row := '[' poly (',' poly)* ']';
//          rows of unequal length raise RaggedRows, a rectangular non-square
//          shape raises NotSquare.
// Factors: entries "poly ^ multiplicity" separated by ';' or newlines; the
//          final '^ nat' of each entry is the multiplicity.
// Point:   comma-separated rationals, "1,0,0" or "1/2,-3,0".
//
// All errors are InputError carrying a SourceSpan into the original text.

Polynomial parse_polynomial(const std::string& text);
PolyMatrix parse_matrix(const std::string& text);
HypersurfaceSpec parse_factors(const std::string& text);
ProjectivePoint parse_point(const std::string& text);

}  // namespace detrep
