#pragma once

#include <vector>

#include "detrep/localred.hpp"
#include "detrep/matrix.hpp"
#include "detrep/point.hpp"

namespace detrep {

// Symmetric congruence reduction of a symmetric matrix at a point: an
// invertible-at-center A with A * M * A^T = D (+) N, where D is diagonal
// with unit (invertible at the center) entries and N is symmetric and
// vanishes at the center. Over the rationals the pivots cannot be scaled
// to constants (that would need square roots), so D carries the unit
// entries themselves and d_center reports their values at the center.
struct SymmetricReduction {
    LocalMatrix D;            // diagonal, every entry a local unit
    std::vector<Rat> d_center;  // D evaluated at the center
    LocalMatrix N;            // symmetric, N(center) = 0
    LocalMatrix A;            // A * M * A^T = D (+) N exactly
    std::size_t rank;         // size of D = rank of M at the center
};

// Diagonalize the unit part of a symmetric matrix by congruence at pt.
// Pivots are chosen deterministically: the lowest-index diagonal unit, and
// when every diagonal entry vanishes at the center, the row-major-first
// off-diagonal unit (i, j) is folded onto the diagonal by the symmetric
// move R_i += R_j, C_i += C_j before pivoting. Errors: NotSymmetric,
// ZeroDeterminant.
SymmetricReduction sym_reduce(const PolyMatrix& M, const ProjectivePoint& pt);

// Check A * M * A^T == blockdiag(blocks) exactly and A invertible at the
// center. Returns false when a block is not symmetric.
bool verify_symmetric_decomposition(const LocalMatrix& M, const LocalMatrix& A,
                                    const std::vector<LocalMatrix>& blocks);

}  // namespace detrep
