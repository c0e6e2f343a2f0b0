#include "detrep/decomp.hpp"

#include <algorithm>
#include <map>

#include "detrep/errors.hpp"

namespace detrep {

namespace {

void require_linear(const PolyMatrix& M) {
    if (!M.is_linear())
        throw InputError("NotLinear", "entries must be homogeneous of degree 1 or zero");
}

Polynomial validated_factor(const Polynomial& f, std::size_t nvars) {
    if (f.is_zero()) throw InputError("ZeroPolynomial", "zero factor");
    if (f.is_constant()) throw InputError("ConstantFactor", "factors must be nonconstant");
    if (!f.is_homogeneous()) throw InputError("NotHomogeneous", "factor " + f.to_string());
    return f.extended(nvars);
}

// Constant matrix P/(c*f) of a polynomial matrix whose entries are all
// divisible by f with constant quotient; the division is asserted exact.
RatMatrix constant_quotient(const PolyMatrix& P, const Polynomial& f, const Rat& c,
                            const char* what) {
    RatMatrix r(P.size(), P.size());
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < P.size(); ++j) {
            Polynomial q = exact_divide(P.at(i, j), f);
            if (!q.is_constant())
                throw InternalError(std::string(what) + " multiplier entry is not constant");
            r.at(i, j) = q.constant_term() / c;
        }
    return r;
}

}  // namespace

AdjugateSplitResult adjugate_ideal_split(const PolyMatrix& M_in, const Polynomial& f1_in,
                                         const Polynomial& f2_in) {
    require_linear(M_in);
    const std::size_t n = std::max({M_in.nvars(), f1_in.nvars(), f2_in.nvars()});
    PolyMatrix M = M_in.extended(n);
    Polynomial f1 = validated_factor(f1_in, n);
    Polynomial f2 = validated_factor(f2_in, n);
    if (proportionality_constant(f1, f2))
        throw InputError("ProportionalFactors", "factors are proportional");
    Polynomial det = determinant(M);
    if (!proportionality_constant(det, f1 * f2))
        throw InputError("BadFactorization",
                         "f1*f2 is not the determinant up to a nonzero scalar");

    const std::size_t d = M.size();
    const std::uint32_t d1 = *f1.degree(), d2 = *f2.degree();
    PolyMatrix adj = adjugate(M);

    // unknowns: coefficients of N1 entries (degree d1-1 monomials) then of
    // N2 entries (degree d2-1); equations: coefficients of degree d1+d2-1
    const auto rows_mon = monomials_of_degree(n, d1 + d2 - 1);
    const auto n1_mon = monomials_of_degree(n, d1 - 1);
    const auto n2_mon = monomials_of_degree(n, d2 - 1);
    std::map<Monomial, std::size_t, GrlexGreater> row_of;
    for (std::size_t r = 0; r < rows_mon.size(); ++r) row_of.emplace(rows_mon[r], r);

    const std::size_t cols = n1_mon.size() + n2_mon.size();
    RatMatrix system(rows_mon.size(), cols + d * d);
    for (std::size_t t = 0; t < n1_mon.size(); ++t)
        for (const auto& [m, c] : f2.terms()) system.at(row_of.at(m.times(n1_mon[t])), t) = c;
    for (std::size_t t = 0; t < n2_mon.size(); ++t)
        for (const auto& [m, c] : f1.terms())
            system.at(row_of.at(m.times(n2_mon[t])), n1_mon.size() + t) = c;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [m, c] : adj.at(i, j).terms())
                system.at(row_of.at(m), cols + i * d + j) = c;

    std::vector<std::size_t> pivots;
    RatMatrix red = system.rref(&pivots);
    std::size_t rank_s = 0;
    for (std::size_t p : pivots)
        if (p < cols) ++rank_s;
    if (rank_s < cols)
        throw InputError("BadFactorization", "the declared factors share a common divisor");

    // rows whose unknown part reduced to zero: any entry with a nonzero
    // coefficient there has no solution; report the row-major first one
    AdjugateSplitResult out;
    std::vector<std::size_t> bad_rows;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= cols) bad_rows.push_back(r);
    if (!bad_rows.empty()) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t r : bad_rows)
                    if (red.at(r, cols + i * d + j) != 0) {
                        out.witness = {i + 1, j + 1};
                        return out;
                    }
        throw InternalError("inconsistent split system without a witness entry");
    }

    PolyMatrix N1(d, n), N2(d, n);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::size_t t = pivots[r];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Rat& v = red.at(r, cols + i * d + j);
                if (v == 0) continue;
                if (t < n1_mon.size())
                    N1.at(i, j).add_term(n1_mon[t], v);
                else
                    N2.at(i, j).add_term(n2_mon[t - n1_mon.size()], v);
            }
    }
    if (!(N1 * f2 + N2 * f1 == adj))
        throw InternalError("adjugate split identity failed");
    out.split = AdjugateSplit{std::move(N1), std::move(N2)};
    return out;
}

DecomposeOutcome decompose(const PolyMatrix& M_in, const Polynomial& f1_in,
                           const Polynomial& f2_in) {
    AdjugateSplitResult split = adjugate_ideal_split(M_in, f1_in, f2_in);
    DecomposeOutcome out;
    if (!split.ok()) {
        out.witness = split.witness;
        return out;
    }

    const std::size_t n = std::max({M_in.nvars(), f1_in.nvars(), f2_in.nvars()});
    PolyMatrix M = M_in.extended(n);
    Polynomial f1 = f1_in.extended(n), f2 = f2_in.extended(n);
    const std::size_t d = M.size();
    Rat c = *proportionality_constant(determinant(M), f1 * f2);

    const PolyMatrix& N1 = split.split->N1;
    const PolyMatrix& N2 = split.split->N2;
    RatMatrix A1 = constant_quotient(M * N1, f1, c, "left");
    RatMatrix A2 = constant_quotient(M * N2, f2, c, "left");
    RatMatrix B1 = constant_quotient(N1 * M, f1, c, "right");
    RatMatrix B2 = constant_quotient(N2 * M, f2, c, "right");

    const RatMatrix I = RatMatrix::identity(d);
    if (!(A1 + A2 == I) || !(B1 + B2 == I))
        throw InternalError("multiplier matrices do not sum to the identity");
    if (!(A1 * A2).is_zero() || !(A2 * A1).is_zero() || !(B1 * B2).is_zero() ||
        !(B2 * B1).is_zero())
        throw InternalError("multiplier matrices are not complementary");
    if (!(A1 * A1 == A1) || !(A2 * A2 == A2) || !(B1 * B1 == B1) || !(B2 * B2 == B2))
        throw InternalError("multiplier matrices are not idempotent");

    RatMatrix rows1 = A1.row_space_basis(), rows2 = A2.row_space_basis();
    RatMatrix cols1 = B1.column_space_basis(), cols2 = B2.column_space_basis();
    const std::size_t r1 = rows1.rows(), r2 = rows2.rows();
    if (r1 + r2 != d || cols1.cols() != r1 || cols2.cols() != r2)
        throw InternalError("multiplier ranks do not add up to the size");
    if (r1 == 0 || r2 == 0) throw InternalError("empty block in a successful split");

    RatMatrix U1 = vcat(rows1, rows2);
    RatMatrix U2 = hcat(cols1, cols2);
    if (U1.rank() != d || U2.rank() != d)
        throw InternalError("block transformation is singular");

    PolyMatrix G = PolyMatrix::from_constant(U1, n) * M * PolyMatrix::from_constant(U2, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if ((i < r1) != (j < r1) && !G.at(i, j).is_zero())
                throw InternalError("transformed matrix is not block diagonal");

    DecompositionResult res;
    res.U1 = U1;
    res.U2 = U2;
    std::vector<std::size_t> idx1(r1), idx2(r2);
    for (std::size_t t = 0; t < r1; ++t) idx1[t] = t;
    for (std::size_t t = 0; t < r2; ++t) idx2[t] = r1 + t;
    res.blocks.push_back(G.submatrix(idx1, idx1));
    res.blocks.push_back(G.submatrix(idx2, idx2));
    const Polynomial fs[2] = {f1, f2};
    for (std::size_t b = 0; b < 2; ++b) {
        Polynomial bd = determinant(res.blocks[b]);
        auto cb = proportionality_constant(bd, fs[b]);
        if (!cb || *cb == 0)
            throw InternalError("block determinant is not proportional to its factor");
        res.block_dets.push_back(bd);
    }
    if (!(res.block_dets[0] * res.block_dets[1] ==
          determinant(M) * (U1.determinant() * U2.determinant())))
        throw InternalError("block determinants do not multiply to the determinant");
    out.result = std::move(res);
    return out;
}

DecomposeOutcome decompose_completely(const PolyMatrix& M_in, const HypersurfaceSpec& spec) {
    const std::size_t n = std::max(M_in.nvars(), spec.factors()[0].first.nvars());
    PolyMatrix M = M_in.extended(n);
    require_linear(M);
    Polynomial det = determinant(M);
    if (!proportionality_constant(det, spec.full_product().extended(n)))
        throw InputError("BadFactorization",
                         "the declared factorization does not match the determinant");

    std::vector<Polynomial> groups;
    for (const auto& [f, p] : spec.factors()) groups.push_back(f.extended(n).pow(p));

    DecompositionResult acc;
    acc.U1 = RatMatrix::identity(M.size());
    acc.U2 = RatMatrix::identity(M.size());
    PolyMatrix rest = M;
    std::size_t done = 0;  // rows/cols of acc.U1 already fixed by finished blocks

    DecomposeOutcome out;
    for (std::size_t a = 0; a + 1 < groups.size(); ++a) {
        Polynomial tail = Polynomial::constant(n, 1);
        for (std::size_t b = a + 1; b < groups.size(); ++b) tail = tail * groups[b];
        DecomposeOutcome step = decompose(rest, groups[a], tail);
        if (!step.ok()) {
            out.witness = step.witness;
            if (!acc.blocks.empty()) {
                DecompositionResult partial = acc;
                partial.blocks.push_back(rest);
                partial.block_dets.push_back(determinant(rest));
                out.partial = std::move(partial);
            }
            return out;
        }
        const DecompositionResult& sr = *step.result;
        // embed the step transforms below the rows already finished
        RatMatrix E1 = RatMatrix::identity(done + rest.size());
        RatMatrix E2 = RatMatrix::identity(done + rest.size());
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = 0; j < rest.size(); ++j) {
                E1.at(done + i, done + j) = sr.U1.at(i, j);
                E2.at(done + i, done + j) = sr.U2.at(i, j);
            }
        acc.U1 = E1 * acc.U1;
        acc.U2 = acc.U2 * E2;
        acc.blocks.push_back(sr.blocks[0]);
        acc.block_dets.push_back(sr.block_dets[0]);
        done += sr.blocks[0].size();
        rest = sr.blocks[1];
    }
    acc.blocks.push_back(rest);
    acc.block_dets.push_back(determinant(rest));

    for (std::size_t a = 0; a < groups.size(); ++a) {
        auto cb = proportionality_constant(acc.block_dets[a], groups[a]);
        if (!cb || *cb == 0)
            throw InternalError("block determinant is not proportional to its factor group");
    }
    PolyMatrix G =
        PolyMatrix::from_constant(acc.U1, n) * M * PolyMatrix::from_constant(acc.U2, n);
    std::size_t offset = 0;
    for (const auto& blk : acc.blocks) {
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = 0; j < blk.size(); ++j)
                if (!(G.at(offset + i, offset + j) == blk.at(i, j)))
                    throw InternalError("accumulated transforms do not reproduce the blocks");
        offset += blk.size();
    }
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j) {
            // zero outside the diagonal blocks
            std::size_t bi = G.size(), bj = G.size() + 1, at = 0;
            for (std::size_t b = 0; b < acc.blocks.size(); ++b) {
                if (i >= at && i < at + acc.blocks[b].size()) bi = b;
                if (j >= at && j < at + acc.blocks[b].size()) bj = b;
                at += acc.blocks[b].size();
            }
            if (bi != bj && !G.at(i, j).is_zero())
                throw InternalError("transformed matrix is not block diagonal");
        }
    out.result = std::move(acc);
    return out;
}

}  // namespace detrep
