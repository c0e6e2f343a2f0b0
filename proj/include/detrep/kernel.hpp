#pragma once

#include <cstdint>
#include <vector>

#include "detrep/matrix.hpp"
#include "detrep/point.hpp"

namespace detrep {

// The d adjugate columns: each is killed by M modulo det(M).
struct KernelGenerators {
    std::vector<std::vector<Polynomial>> columns;
};

struct MGFactorRecord {
    Polynomial factor;
    unsigned declared_multiplicity = 0;
    std::size_t generic_corank = 0;
    bool mg = false;  // generic corank equals the declared multiplicity
};

struct MGPointRecord {
    std::vector<Rat> point;
    std::size_t corank = 0;
    std::uint32_t multiplicity = 0;
    bool mg = false;  // corank equals the multiplicity
};

struct MGReport {
    bool verdict = false;
    std::vector<MGFactorRecord> factors;
    std::vector<MGPointRecord> points;
};

// Columns of adj(M); asserts M*adj(M) = det(M)*identity first.
KernelGenerators kernel_generators(const PolyMatrix& M);

// Maximal generation at one point: corank there equals the multiplicity of
// the hypersurface {f = 0}. f must be det(M) up to a nonzero scalar and must
// vanish at pt (PointOffHypersurface otherwise).
MGReport is_mg_at(const PolyMatrix& M, const Polynomial& f, const ProjectivePoint& pt);

// Maximal generation at the generic point of every declared component:
// generic_corank_mod(M, f_a) must equal the declared multiplicity p_a.
// Decided by exact minor divisibility, never by sampling points.
MGReport is_generically_mg(const PolyMatrix& M, const HypersurfaceSpec& spec);

// adj(M) divided entrywise by prod f_a^(p_a - 1); requires generic maximal
// generation (NotGenericallyMG otherwise), which guarantees the division.
PolyMatrix reduced_kernel_generators(const PolyMatrix& M, const HypersurfaceSpec& spec);

// N with M*N = N*M = (prod f_a)*identity exactly: the reduced kernel
// generators with the determinant's scalar divided out.
PolyMatrix matrix_factorization(const PolyMatrix& M, const HypersurfaceSpec& spec);

// Rebuild the linear representation whose adjugate the input claims to be:
// M = adj(A)/f^(d-2), rescaled so det(M) = f exactly. Validates the claimed
// shape first: entries homogeneous of degree d-1 with d >= 2 and deg f = d
// (DegreeMismatch), det(A) proportional to f^(d-1) (DeterminantMismatch),
// adj(A) entrywise divisible by f^(d-2) (NotDivisible). The final rescaling
// needs a rational d-th root; when none exists the exact normalization is
// impossible over the rationals and DeterminantMismatch reports it.
PolyMatrix recover_from_adjoint(const PolyMatrix& A, const Polynomial& f);

}  // namespace detrep
