#pragma once

#include <string>
#include <vector>

#include "detrep/local_rational.hpp"
#include "detrep/matrix.hpp"
#include "detrep/point.hpp"

namespace detrep {

// Square matrix over the local ring at the origin of a chart: entries are
// LocalRational values sharing one ambient variable count, all regular at
// the origin. Matrices derived from a projective point are translated so
// that point becomes the origin (see from_poly_matrix_at).
class LocalMatrix {
public:
    LocalMatrix() : d_(0), nvars_(0) {}
    LocalMatrix(std::size_t d, std::size_t nvars);

    static LocalMatrix identity(std::size_t d, std::size_t nvars);
    // Restrict a polynomial matrix to the affine chart of pt and translate
    // pt to the origin, entrywise.
    static LocalMatrix from_poly_matrix_at(const PolyMatrix& M, const ProjectivePoint& pt);
    static LocalMatrix direct_sum(const LocalMatrix& a, const LocalMatrix& b);

    std::size_t size() const { return d_; }
    std::size_t nvars() const { return nvars_; }
    const LocalRational& at(std::size_t i, std::size_t j) const { return entries_[i * d_ + j]; }
    LocalRational& at(std::size_t i, std::size_t j) { return entries_[i * d_ + j]; }

    LocalMatrix operator*(const LocalMatrix& o) const;
    bool operator==(const LocalMatrix& o) const;
    LocalMatrix transpose() const;
    bool is_symmetric() const { return *this == transpose(); }

    LocalRational determinant() const;  // cofactor expansion
    RatMatrix value_at_center() const;
    bool is_invertible_at_center() const { return determinant().is_unit(); }

    LocalMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t size) const;

    std::string to_string() const;

private:
    std::size_t d_, nvars_;
    std::vector<LocalRational> entries_;
};

// Outcome of chipping the unit block off a representation at a point:
// left * (M in the local chart) * right = identity_{d-p} (+) N, with N
// vanishing at the center and left/right invertible there.
struct LocalReduction {
    std::size_t p = 0;
    LocalMatrix N;
    LocalMatrix left;
    LocalMatrix right;
};

// Gaussian elimination over the local ring using unit pivots only; pivots
// are chosen by largest absolute value at the center, ties broken in
// row-major order. p equals the corank of M at pt.
LocalReduction local_reduce(const PolyMatrix& M, const ProjectivePoint& pt);

// True iff A*M1*B = M2 exactly and both transformations are invertible at
// the center.
bool verify_local_equivalence(const LocalMatrix& A, const LocalMatrix& M1, const LocalMatrix& M2,
                              const LocalMatrix& B);

}  // namespace detrep
