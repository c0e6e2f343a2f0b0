#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "detrep/matrix.hpp"

namespace detrep {

// adj(M) = f2*N1 + f1*N2 with homogeneous entries of degrees
// deg(f1)-1 and deg(f2)-1. The split is unique when it exists.
struct AdjugateSplit {
    PolyMatrix N1;
    PolyMatrix N2;
};

// Outcome of the entrywise graded membership test. When no split exists,
// `witness` names the first failing entry in 1-based (row, column) form;
// by the decomposition theorem this certifies non-decomposability.
struct AdjugateSplitResult {
    std::optional<AdjugateSplit> split;
    std::pair<std::size_t, std::size_t> witness{0, 0};

    bool ok() const { return split.has_value(); }
};

// Solve f2*N1[i][j] + f1*N2[i][j] = adj(M)[i][j] for every entry as one
// graded linear system (one coefficient matrix, d*d right-hand sides).
// Requires M linear, f1, f2 homogeneous non-proportional with
// f1*f2 proportional to det(M) (BadFactorization otherwise; a rank-
// deficient system means the factors share a divisor and also raises
// BadFactorization).
AdjugateSplitResult adjugate_ideal_split(const PolyMatrix& M, const Polynomial& f1,
                                         const Polynomial& f2);

// U1*M*U2 is exactly block diagonal with the listed blocks;
// det(blocks[a]) = c_a * (declared factor a) for nonzero rational c_a.
struct DecompositionResult {
    RatMatrix U1;
    RatMatrix U2;
    std::vector<PolyMatrix> blocks;
    std::vector<Polynomial> block_dets;
};

// `result` on success. On failure `witness` carries the 1-based entry that
// blocked the adjugate split, and decompose_completely additionally attaches
// in `partial` whatever block split was achieved before the failure (its
// last block is the undecomposed remainder).
struct DecomposeOutcome {
    std::optional<DecompositionResult> result;
    std::pair<std::size_t, std::size_t> witness{0, 0};
    std::optional<DecompositionResult> partial;

    bool ok() const { return result.has_value(); }
};

// Two-factor split: from the adjugate split build the constant multiplier
// matrices A_a = M*N_a/(c*f_a) and B_a = N_a*M/(c*f_a) (c the scalar with
// det M = c*f1*f2), which form complementary idempotent pairs; U1 stacks row
// space bases of A1 and A2, U2 concatenates column space bases of B1 and B2.
// All identities the construction guarantees are asserted.
DecomposeOutcome decompose(const PolyMatrix& M, const Polynomial& f1, const Polynomial& f2);

// Split off one declared factor group f_a^{p_a} at a time, recursively.
// Blocks come back in the order of the declared factors, with
// det(blocks[a]) = c_a * f_a^{p_a}.
DecomposeOutcome decompose_completely(const PolyMatrix& M, const HypersurfaceSpec& spec);

}  // namespace detrep
