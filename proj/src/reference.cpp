#include "detrep/reference.hpp"

#include <numeric>

namespace detrep::reference {

namespace {

Polynomial det_recursive(const PolyMatrix& M, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 0) return Polynomial::constant(M.nvars(), 1);
    if (k == 1) return M.at(rows[0], cols[0]);
    Polynomial acc(M.nvars());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < k; ++c) {
        const Polynomial& entry = M.at(rows[0], cols[c]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t t = 0; t < k; ++t)
            if (t != c) sub_cols.push_back(cols[t]);
        Polynomial term = entry * det_recursive(M, sub_rows, sub_cols);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

Polynomial determinant(const PolyMatrix& M) {
    std::vector<std::size_t> idx(M.size());
    std::iota(idx.begin(), idx.end(), 0);
    return det_recursive(M, idx, idx);
}

PolyMatrix adjugate(const PolyMatrix& M) {
    const std::size_t d = M.size();
    PolyMatrix adj(d, M.nvars());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t t = 0; t < d; ++t) {
                if (t != i) rows.push_back(t);
                if (t != j) cols.push_back(t);
            }
            Polynomial minor = det_recursive(M, rows, cols);
            adj.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    return adj;
}

}  // namespace detrep::reference
