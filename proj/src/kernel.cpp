#include "detrep/kernel.hpp"

#include <algorithm>

#include "detrep/errors.hpp"

namespace detrep {

namespace {

void require_linear(const PolyMatrix& M) {
    if (!M.is_linear())
        throw InputError("NotLinear", "entries must be homogeneous of degree 1 or zero");
}

Polynomial checked_determinant(const PolyMatrix& M) {
    Polynomial det = determinant(M);
    if (det.is_zero())
        throw InputError("ZeroDeterminant", "the determinant vanishes identically");
    return det;
}

}  // namespace

KernelGenerators kernel_generators(const PolyMatrix& M) {
    require_linear(M);
    Polynomial det = checked_determinant(M);
    PolyMatrix adj = adjugate(M);
    if (!(M * adj == PolyMatrix::scalar(M.size(), det)))
        throw InternalError("adjugate identity failed");
    KernelGenerators gens;
    gens.columns.resize(M.size());
    for (std::size_t j = 0; j < M.size(); ++j) {
        gens.columns[j].reserve(M.size());
        for (std::size_t i = 0; i < M.size(); ++i) gens.columns[j].push_back(adj.at(i, j));
    }
    return gens;
}

MGReport is_mg_at(const PolyMatrix& M, const Polynomial& f, const ProjectivePoint& pt) {
    require_linear(M);
    Polynomial det = checked_determinant(M);
    const std::size_t n = std::max(M.nvars(), f.nvars());
    if (!proportionality_constant(det.extended(n), f.extended(n)))
        throw InputError("BadFactorization", "f is not the determinant up to a nonzero scalar");
    if (f.extended(n).evaluate(ProjectivePoint(pt.coords()).canonical()) != 0)
        throw InputError("PointOffHypersurface", "the point does not lie on {f = 0}");

    MGPointRecord rec;
    rec.point = pt.coords();
    rec.corank = corank_at(M, pt);
    rec.multiplicity = multiplicity_at(f, pt);
    rec.mg = rec.corank == rec.multiplicity;

    MGReport report;
    report.verdict = rec.mg;
    report.points.push_back(std::move(rec));
    return report;
}

MGReport is_generically_mg(const PolyMatrix& M_in, const HypersurfaceSpec& spec) {
    std::size_t n = M_in.nvars();
    for (const auto& [f, p] : spec.factors()) n = std::max(n, f.nvars());
    PolyMatrix M = M_in.extended(n);
    require_linear(M);
    Polynomial det = checked_determinant(M);
    if (!proportionality_constant(det, spec.full_product().extended(n)))
        throw InputError("BadFactorization",
                         "the declared factorization does not match the determinant");

    MGReport report;
    report.verdict = true;
    for (const auto& [f, p] : spec.factors()) {
        MGFactorRecord rec;
        rec.factor = f;
        rec.declared_multiplicity = p;
        rec.generic_corank = generic_corank_mod(M, f);
        rec.mg = rec.generic_corank == p;
        report.verdict = report.verdict && rec.mg;
        report.factors.push_back(std::move(rec));
    }
    return report;
}

PolyMatrix reduced_kernel_generators(const PolyMatrix& M, const HypersurfaceSpec& spec) {
    MGReport report = is_generically_mg(M, spec);
    if (!report.verdict)
        throw InputError("NotGenericallyMG",
                         "a declared component has generic corank different from its "
                         "multiplicity");

    std::size_t n = M.nvars();
    for (const auto& [f, p] : spec.factors()) n = std::max(n, f.nvars());
    Polynomial divisor = Polynomial::constant(n, 1);
    for (const auto& [f, p] : spec.factors()) divisor = divisor * f.extended(n).pow(p - 1);

    PolyMatrix adj = adjugate(M.extended(n));
    if (divisor.is_constant()) return adj;  // all multiplicities are 1
    PolyMatrix N(M.size(), n);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) {
            try {
                N.at(i, j) = exact_divide(adj.at(i, j), divisor);
            } catch (const InputError&) {
                throw InternalError(
                    "adjugate entry not divisible despite generic maximal generation");
            }
        }
    return N;
}

PolyMatrix matrix_factorization(const PolyMatrix& M, const HypersurfaceSpec& spec) {
    PolyMatrix N = reduced_kernel_generators(M, spec);
    const std::size_t n = N.nvars();
    PolyMatrix Mx = M.extended(n);
    Polynomial reduced = spec.reduced_product().extended(n);
    Rat c = *proportionality_constant(determinant(Mx), spec.full_product().extended(n));
    N = N * (Rat(1) / c);
    PolyMatrix expected = PolyMatrix::scalar(M.size(), reduced);
    if (!(Mx * N == expected) || !(N * Mx == expected))
        throw InternalError("matrix factorization identity failed");
    return N;
}

PolyMatrix recover_from_adjoint(const PolyMatrix& A, const Polynomial& f_in) {
    const std::size_t d = A.size();
    if (d < 2)
        throw InputError("DegreeMismatch", "the reconstruction needs a matrix of size at least 2");
    const std::size_t n = std::max(A.nvars(), f_in.nvars());
    Polynomial f = f_in.extended(n);
    if (f.is_zero() || f.is_constant() || !f.is_homogeneous() || *f.degree() != d)
        throw InputError("DegreeMismatch",
                         "f must be homogeneous of degree equal to the matrix size");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Polynomial& e = A.at(i, j);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous() || *e.degree() != d - 1)
                throw InputError("DegreeMismatch",
                                 "adjoint entries must be homogeneous of degree " +
                                     std::to_string(d - 1));
        }

    PolyMatrix Ax = A.extended(n);
    Polynomial detA = determinant(Ax);
    auto c = proportionality_constant(detA, f.pow(static_cast<std::uint32_t>(d - 1)));
    if (!c || *c == 0)
        throw InputError("DeterminantMismatch",
                         "det(A) is not a nonzero scalar multiple of f^(d-1)");

    PolyMatrix adjA = adjugate(Ax);
    Polynomial divisor = f.pow(static_cast<std::uint32_t>(d - 2));
    PolyMatrix M0(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            try {
                M0.at(i, j) = exact_divide(adjA.at(i, j), divisor);
            } catch (const InputError&) {
                throw InputError("NotDivisible",
                                 "adj(A) entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") is not divisible by f^(d-2)");
            }
        }
    if (!M0.is_linear()) throw InternalError("reconstructed matrix is not linear");

    // det(M0) = c^(d-1) * f; a scalar s with s^d = c^(1-d) makes det exactly f
    Rat target = Rat(1) / rat_pow(*c, static_cast<long>(d) - 1);
    if (!(determinant(M0) == f * rat_pow(*c, static_cast<long>(d) - 1)))
        throw InternalError("determinant of the reconstruction has the wrong scalar");
    auto s = rational_nth_root(target, static_cast<unsigned>(d));
    if (!s)
        throw InputError("DeterminantMismatch",
                         "det can only be normalized to " + rational_to_string(*c) +
                             "^(d-1) * f: the required rational root of " +
                             rational_to_string(target) + " does not exist");
    PolyMatrix M = M0 * *s;
    if (!(determinant(M) == f)) throw InternalError("final determinant normalization failed");
    return M;
}

}  // namespace detrep
