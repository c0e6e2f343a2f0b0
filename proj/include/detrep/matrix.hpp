#pragma once

#include <string>
#include <vector>

#include "detrep/point.hpp"
#include "detrep/polynomial.hpp"
#include "detrep/rational.hpp"

namespace detrep {

// Constant rational matrix (possibly rectangular).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& c) const;
    RatMatrix transpose() const;
    bool operator==(const RatMatrix& o) const;

    bool is_zero() const;
    Rat determinant() const;  // square only, Gaussian elimination
    std::size_t rank() const;
    RatMatrix inverse() const;  // throws InputError("Singular") if singular

    // Reduced row echelon form.
    RatMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    // Basis of the column space: the original columns at rref pivot
    // positions, as matrix columns.
    RatMatrix column_space_basis() const;
    // Basis of the row space: the nonzero rows of the rref, as matrix rows.
    RatMatrix row_space_basis() const;

    // det of the upper-left k x k submatrices, k = 1..d (square only).
    std::vector<Rat> leading_principal_minors() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Concatenate blocks left|right (same row count) / top over bottom.
RatMatrix hcat(const RatMatrix& a, const RatMatrix& b);
RatMatrix vcat(const RatMatrix& a, const RatMatrix& b);

// Square matrix of polynomials sharing one ambient variable count.
class PolyMatrix {
public:
    PolyMatrix() : d_(0), nvars_(0) {}
    PolyMatrix(std::size_t d, std::size_t nvars)
        : d_(d), nvars_(nvars), entries_(d * d, Polynomial(nvars)) {}

    static PolyMatrix identity(std::size_t d, std::size_t nvars);
    static PolyMatrix scalar(std::size_t d, const Polynomial& p);
    static PolyMatrix from_rows(const std::vector<std::vector<Polynomial>>& rows);
    static PolyMatrix from_constant(const RatMatrix& c, std::size_t nvars);

    std::size_t size() const { return d_; }
    std::size_t nvars() const { return nvars_; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * d_ + j]; }
    Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * d_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const Polynomial& p) const;
    PolyMatrix operator*(const Rat& c) const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const;

    bool is_symmetric() const { return *this == transpose(); }
    // Every entry homogeneous of degree 1 or zero: a determinantal
    // representation candidate ("linear matrix").
    bool is_linear() const;
    // Every entry of total degree <= 1 (affine-linear).
    bool is_affine_linear() const;

    PolyMatrix extended(std::size_t nvars) const;
    PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;

    RatMatrix evaluate(const std::vector<Rat>& point) const;
    // Coefficient matrix of x_i for a linear matrix: M = sum_i M_i x_i.
    RatMatrix coefficient_matrix(std::size_t var_index) const;

    std::string to_string() const;

private:
    std::size_t d_, nvars_;
    std::vector<Polynomial> entries_;
};

// A linear matrix is a PolyMatrix whose entries pass is_linear(); operations
// that need the stronger shape check it at their boundary.
using LinearMatrix = PolyMatrix;

// Declared factorization of the hypersurface: pairwise non-proportional
// homogeneous factors with positive multiplicities. Irreducibility is
// declared by the caller, not verified.
class HypersurfaceSpec {
public:
    HypersurfaceSpec(std::vector<std::pair<Polynomial, unsigned>> factors);

    const std::vector<std::pair<Polynomial, unsigned>>& factors() const { return factors_; }
    std::size_t count() const { return factors_.size(); }

    std::uint32_t total_degree() const;
    Polynomial reduced_product() const;  // prod f_alpha
    Polynomial full_product() const;     // prod f_alpha^{p_alpha}

    std::string to_string() const;

private:
    std::vector<std::pair<Polynomial, unsigned>> factors_;
};

// Exact determinant by cofactor expansion with minors memoized per column
// subset (layers parallelized).
Polynomial determinant(const PolyMatrix& M);

// Adjugate from the same memoized minor tables: M*adj = adj*M = det*I,
// asserted by the caller-facing tests.
PolyMatrix adjugate(const PolyMatrix& M);

// d minus the rank of M evaluated at the canonical representative of pt.
std::size_t corank_at(const PolyMatrix& M, const ProjectivePoint& pt);

// d minus the largest r such that some r x r minor of M is not divisible by
// f_alpha: the corank at the generic point of {f_alpha = 0}. f_alpha must
// divide det(M) (NotAComponent otherwise).
std::size_t generic_corank_mod(const PolyMatrix& M, const Polynomial& f_alpha);

}  // namespace detrep
