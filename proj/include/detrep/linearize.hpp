#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "detrep/matrix.hpp"

namespace detrep {

// Output of the degree-reduction loop: L has entries of total degree <= 1,
// det(L) = unit * det(input) exactly, and L.size() = input size + step_count.
// measure_trace records (top degree, number of top-degree terms across all
// entries) before every step; it decreases strictly in lexicographic order,
// which is the termination argument.
struct LinearizationResult {
    PolyMatrix L;
    Rat unit;
    std::size_t step_count = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> measure_trace;
};

// Peel one variable off a maximal-degree monomial per step, growing the
// matrix by one: the chosen entry (i,j) gets a fresh row and column at index
// i carrying 1 on the diagonal; a column operation plants the split variable
// and a row operation removes the monomial. Determinant is preserved
// (unit = +1, asserted). Selection is deterministic: graded-lex largest
// monomial among the top-degree ones, row-major first entry holding it,
// split at its lowest-index variable.
LinearizationResult linearize(const PolyMatrix& N);

// Symmetric variant: each move augments by an off-diagonal 1-1 pair (two
// rows and columns, so step_count grows by 2 and the determinant by a
// factor -1) and applies the operations in transpose pairs, so symmetry is
// preserved exactly and unit = (-1)^(number of moves), with one
// measure_trace entry per move. Diagonal targets lose one top-degree term
// per move, off-diagonal targets lose their two mirrored terms at once.
LinearizationResult sym_linearize(const PolyMatrix& N);

// Fill every entry up to total degree 1 with x_{var_index}: constants c
// become c*x_{var_index}. The determinant of the result equals
// x_{var_index}^(d' - D) times the degree-D homogenization of det(L),
// D = deg det(L); asserted exactly.
PolyMatrix homogenize_matrix(const PolyMatrix& L, std::size_t var_index);

}  // namespace detrep
