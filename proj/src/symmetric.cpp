#include "detrep/symmetric.hpp"

#include <cstddef>
#include <optional>
#include <utility>

#include "detrep/errors.hpp"

namespace detrep {

namespace {

// W <- E W E^T and A <- E A for E = I + c * e_r e_k^T (r != k).
void congruence_axpy(LocalMatrix& W, LocalMatrix& A, std::size_t r, std::size_t k,
                     const LocalRational& c) {
    const std::size_t d = W.size();
    for (std::size_t j = 0; j < d; ++j) W.at(r, j) = W.at(r, j) + c * W.at(k, j);
    for (std::size_t i = 0; i < d; ++i) W.at(i, r) = W.at(i, r) + c * W.at(i, k);
    for (std::size_t j = 0; j < d; ++j) A.at(r, j) = A.at(r, j) + c * A.at(k, j);
}

// Symmetric swap of rows/cols r and k, mirrored on A.
void congruence_swap(LocalMatrix& W, LocalMatrix& A, std::size_t r, std::size_t k) {
    if (r == k) return;
    const std::size_t d = W.size();
    for (std::size_t j = 0; j < d; ++j) std::swap(W.at(r, j), W.at(k, j));
    for (std::size_t i = 0; i < d; ++i) std::swap(W.at(i, r), W.at(i, k));
    for (std::size_t j = 0; j < d; ++j) std::swap(A.at(r, j), A.at(k, j));
}

}  // namespace

SymmetricReduction sym_reduce(const PolyMatrix& M, const ProjectivePoint& pt) {
    if (!M.is_symmetric())
        throw InputError("NotSymmetric", "symmetric reduction needs a symmetric matrix");
    if (determinant(M).is_zero())
        throw InputError("ZeroDeterminant", "matrix has identically zero determinant");

    const std::size_t d = M.size();
    LocalMatrix W = LocalMatrix::from_poly_matrix_at(M, pt);
    const LocalMatrix original = W;
    LocalMatrix A = LocalMatrix::identity(d, W.nvars());

    std::size_t k = 0;
    while (k < d) {
        // Lowest-index diagonal unit first.
        std::optional<std::size_t> diag;
        for (std::size_t t = k; t < d && !diag; ++t)
            if (W.at(t, t).is_unit()) diag = t;
        if (!diag) {
            // Fold the first off-diagonal unit onto the diagonal. Its new
            // diagonal entry has center value 2 * W[i][j](center) != 0
            // because every remaining diagonal entry vanishes there.
            std::optional<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t i = k; i < d && !off; ++i)
                for (std::size_t j = i + 1; j < d && !off; ++j)
                    if (W.at(i, j).is_unit()) off = {i, j};
            if (!off) break;  // remaining block vanishes at the center
            congruence_axpy(W, A, off->first, off->second,
                            LocalRational::constant(W.nvars(), 1));
            if (!W.is_symmetric())
                throw InternalError("congruence step broke symmetry");
            continue;
        }

        congruence_swap(W, A, k, *diag);
        const LocalRational pivot = W.at(k, k);
        for (std::size_t r = k + 1; r < d; ++r) {
            if (W.at(r, k).is_zero()) continue;
            congruence_axpy(W, A, r, k, -(W.at(r, k) / pivot));
        }
        if (!W.is_symmetric()) throw InternalError("congruence step broke symmetry");
        ++k;
    }

    SymmetricReduction red{LocalMatrix(k, W.nvars()), {}, W.submatrix(k, k, d - k),
                           std::move(A), k};
    for (std::size_t t = 0; t < k; ++t) {
        red.D.at(t, t) = W.at(t, t);
        if (!red.D.at(t, t).is_unit()) throw InternalError("non-unit pivot in D");
        red.d_center.push_back(red.D.at(t, t).value_at_center());
    }

    if (!red.N.is_symmetric() || !red.N.value_at_center().is_zero())
        throw InternalError("residual block must be symmetric and vanish at the center");
    if (!(red.A * original * red.A.transpose() == LocalMatrix::direct_sum(red.D, red.N)))
        throw InternalError("congruence identity A M A^T = D (+) N failed");
    if (!(red.A.determinant() * red.A.determinant() * original.determinant() ==
          LocalMatrix::direct_sum(red.D, red.N).determinant()))
        throw InternalError("determinant identity det(D (+) N) = det(A)^2 det(M) failed");
    if (red.rank != original.value_at_center().rank())
        throw InternalError("size of D must equal the rank of M at the center");
    return red;
}

bool verify_symmetric_decomposition(const LocalMatrix& M, const LocalMatrix& A,
                                    const std::vector<LocalMatrix>& blocks) {
    for (const auto& b : blocks)
        if (!b.is_symmetric()) return false;
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    if (total != M.size() || A.size() != M.size()) return false;
    if (!A.is_invertible_at_center()) return false;

    LocalMatrix sum(0, M.nvars());
    for (const auto& b : blocks) sum = LocalMatrix::direct_sum(sum, b);
    return A * M * A.transpose() == sum;
}

}  // namespace detrep
