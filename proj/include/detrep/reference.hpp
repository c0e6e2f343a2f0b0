#pragma once

#include "detrep/matrix.hpp"

namespace detrep::reference {

// Serial textbook implementations, kept as the comparison baseline for the
// memoized parallel versions and exercised by the same identity tests.
Polynomial determinant(const PolyMatrix& M);
PolyMatrix adjugate(const PolyMatrix& M);

}  // namespace detrep::reference
