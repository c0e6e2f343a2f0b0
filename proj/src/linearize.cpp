#include "detrep/linearize.hpp"

#include <optional>

#include "detrep/errors.hpp"

namespace detrep {

namespace {

struct Target {
    std::uint32_t degree;    // top total degree across all entries
    std::size_t count;       // number of top-degree terms across all entries
    std::size_t i, j;        // row-major first entry whose leading term is the target
    Monomial monomial;       // graded-lex largest monomial of the top degree
    Rat coefficient;
};

// The induction measure and the next monomial to remove; empty once every
// entry has total degree <= 1.
std::optional<Target> select_target(const PolyMatrix& M) {
    const std::size_t d = M.size();
    std::uint32_t top = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Polynomial& e = M.at(i, j);
            if (!e.is_zero()) top = std::max(top, *e.degree());
        }
    if (top <= 1) return std::nullopt;

    Target t;
    t.degree = top;
    t.count = 0;
    bool have = false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Polynomial& e = M.at(i, j);
            if (e.is_zero() || *e.degree() != top) continue;
            for (const auto& [m, c] : e.terms()) {
                if (m.total_degree() != top) continue;
                ++t.count;
            }
            const Monomial& lead = e.leading_monomial();
            if (!have || grlex_less(t.monomial, lead)) {
                have = true;
                t.monomial = lead;
                t.i = i;
                t.j = j;
                t.coefficient = e.leading_coefficient();
            }
        }
    return t;
}

std::size_t lowest_index_variable(const Monomial& m) {
    for (std::size_t k = 0; k < m.nvars(); ++k)
        if (m.exponent(k) > 0) return k;
    throw InternalError("constant monomial selected for splitting");
}

// Insert `extra` fresh zero rows and columns at index pos.
PolyMatrix insert_rowcols(const PolyMatrix& M, std::size_t pos, std::size_t extra) {
    const std::size_t d = M.size();
    PolyMatrix A(d + extra, M.nvars());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            A.at(i + (i >= pos ? extra : 0), j + (j >= pos ? extra : 0)) = M.at(i, j);
    return A;
}

// R_t += c * R_s
void row_axpy(PolyMatrix& M, std::size_t t, std::size_t s, const Polynomial& c) {
    for (std::size_t j = 0; j < M.size(); ++j)
        M.at(t, j) = M.at(t, j) + c * M.at(s, j);
}

// C_t += c * C_s
void col_axpy(PolyMatrix& M, std::size_t t, std::size_t s, const Polynomial& c) {
    for (std::size_t i = 0; i < M.size(); ++i)
        M.at(i, t) = M.at(i, t) + c * M.at(i, s);
}

}  // namespace

LinearizationResult linearize(const PolyMatrix& N) {
    Polynomial det_in = determinant(N);

    LinearizationResult res;
    res.L = N;
    res.unit = 1;
    const std::size_t n = N.nvars();
    while (auto t = select_target(res.L)) {
        res.measure_trace.emplace_back(t->degree, t->count);
        const std::size_t k = lowest_index_variable(t->monomial);
        const Polynomial xk = Polynomial::variable(n, k);
        const Polynomial rest = Polynomial::monomial(
            n, t->monomial.divided_by(Monomial::variable(n, k)), t->coefficient);

        const std::size_t u = t->i;
        PolyMatrix A = insert_rowcols(res.L, u, 1);
        A.at(u, u) = Polynomial::constant(n, 1);
        const std::size_t v = t->i + 1;
        const std::size_t w = t->j + (t->j >= u ? 1 : 0);
        col_axpy(A, w, u, xk);    // plants x_k at (u, w)
        row_axpy(A, v, u, -rest); // removes the monomial at (v, w), leaves -rest at (v, u)
        res.L = std::move(A);
        ++res.step_count;
    }

    if (!(determinant(res.L) == det_in))
        throw InternalError("linearization changed the determinant");
    if (res.L.size() != N.size() + res.step_count)
        throw InternalError("linearization size bookkeeping failed");
    return res;
}

LinearizationResult sym_linearize(const PolyMatrix& N) {
    if (!N.is_symmetric()) throw InputError("NotSymmetric", "input must equal its transpose");
    Polynomial det_in = determinant(N);

    LinearizationResult res;
    res.L = N;
    res.unit = 1;
    const std::size_t n = N.nvars();
    const Rat half(1, 2);
    while (auto t = select_target(res.L)) {
        res.measure_trace.emplace_back(t->degree, t->count);
        const std::size_t k = lowest_index_variable(t->monomial);
        const Polynomial xk = Polynomial::variable(n, k);
        const Polynomial rest = Polynomial::monomial(
            n, t->monomial.divided_by(Monomial::variable(n, k)), t->coefficient);

        // fresh pair block [[0,1],[1,0]] at rows/columns (u1, u2)
        const std::size_t u1 = t->i, u2 = t->i + 1;
        PolyMatrix A = insert_rowcols(res.L, t->i, 2);
        A.at(u1, u2) = Polynomial::constant(n, 1);
        A.at(u2, u1) = Polynomial::constant(n, 1);

        if (t->i == t->j) {
            // diagonal target, now at (v, v)
            const std::size_t v = t->i + 2;
            row_axpy(A, v, u2, rest);
            col_axpy(A, v, u2, rest);
            row_axpy(A, v, u1, -(xk * half));
            col_axpy(A, v, u1, -(xk * half));
        } else {
            // mirrored pair, now at (vi, vj) and (vj, vi)
            const std::size_t vi = t->i + 2;
            const std::size_t vj = t->j + 2;
            row_axpy(A, vi, u1, -rest);
            col_axpy(A, vi, u1, -rest);
            row_axpy(A, vj, u2, xk);
            col_axpy(A, vj, u2, xk);
        }
        if (!A.is_symmetric()) throw InternalError("symmetric linearization lost symmetry");
        res.L = std::move(A);
        res.unit = -res.unit;
        res.step_count += 2;  // two rows and columns per move, keeping d' = d + step_count
    }

    if (!(determinant(res.L) == res.unit * det_in))
        throw InternalError("symmetric linearization changed the determinant");
    if (res.L.size() != N.size() + res.step_count)
        throw InternalError("symmetric linearization size bookkeeping failed");
    return res;
}

PolyMatrix homogenize_matrix(const PolyMatrix& L, std::size_t var_index) {
    if (!L.is_affine_linear())
        throw InputError("NotAffineLinear", "entries must have total degree at most 1");
    const std::size_t n = std::max(L.nvars(), var_index + 1);
    const std::size_t d = L.size();
    PolyMatrix H(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial e = L.at(i, j).extended(n);
            Polynomial filled(n);
            for (const auto& [m, c] : e.terms()) {
                Monomial f = m;
                if (m.total_degree() == 0) f.exponent(var_index) += 1;
                filled.add_term(f, c);
            }
            H.at(i, j) = filled;
        }

    Polynomial det_l = determinant(L).extended(n);
    Polynomial det_h = determinant(H);
    Polynomial expected(n);
    if (!det_l.is_zero()) {
        std::uint32_t deficit = static_cast<std::uint32_t>(d) - *det_l.degree();
        expected = Polynomial::variable(n, var_index).pow(deficit) * homogenize(det_l, var_index);
    }
    if (!(det_h == expected))
        throw InternalError("homogenization determinant identity failed");
    return H;
}

}  // namespace detrep
