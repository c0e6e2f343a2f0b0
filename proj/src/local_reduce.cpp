#include "detrep/localred.hpp"

#include <sstream>

#include "detrep/errors.hpp"
#include "detrep/reference.hpp"

namespace detrep {

LocalMatrix::LocalMatrix(std::size_t d, std::size_t nvars)
    : d_(d), nvars_(nvars),
      entries_(d * d, LocalRational(Polynomial(nvars))) {}

LocalMatrix LocalMatrix::identity(std::size_t d, std::size_t nvars) {
    LocalMatrix m(d, nvars);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = LocalRational::constant(nvars, 1);
    return m;
}

LocalMatrix LocalMatrix::from_poly_matrix_at(const PolyMatrix& M, const ProjectivePoint& pt) {
    const std::size_t n = std::max(M.nvars(), pt.nvars());
    LocalMatrix m(M.size(), n);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j)
            m.at(i, j) = LocalRational(to_local_chart(M.at(i, j).extended(n), pt));
    return m;
}

LocalMatrix LocalMatrix::direct_sum(const LocalMatrix& a, const LocalMatrix& b) {
    if (a.nvars_ != b.nvars_ && a.d_ != 0 && b.d_ != 0)
        throw InternalError("direct sum variable count mismatch");
    LocalMatrix m(a.d_ + b.d_, a.d_ != 0 ? a.nvars_ : b.nvars_);
    for (std::size_t i = 0; i < a.d_; ++i)
        for (std::size_t j = 0; j < a.d_; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.d_; ++i)
        for (std::size_t j = 0; j < b.d_; ++j) m.at(a.d_ + i, a.d_ + j) = b.at(i, j);
    return m;
}

LocalMatrix LocalMatrix::transpose() const {
    LocalMatrix r(d_, nvars_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) r.at(j, i) = at(i, j);
    return r;
}

LocalMatrix LocalMatrix::operator*(const LocalMatrix& o) const {
    if (d_ != o.d_) throw InternalError("local matrix product shape mismatch");
    LocalMatrix r(d_, nvars_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t k = 0; k < d_; ++k) {
            const LocalRational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < d_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        }
    return r;
}

bool LocalMatrix::operator==(const LocalMatrix& o) const {
    if (d_ != o.d_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!(entries_[i] == o.entries_[i])) return false;
    return true;
}

LocalRational LocalMatrix::determinant() const {
    if (d_ == 0) return LocalRational::constant(nvars_, 1);
    if (d_ == 1) return at(0, 0);
    LocalRational acc{Polynomial(nvars_)};
    for (std::size_t c = 0; c < d_; ++c) {
        if (at(0, c).is_zero()) continue;
        LocalMatrix sub(d_ - 1, nvars_);
        for (std::size_t i = 1; i < d_; ++i) {
            std::size_t tj = 0;
            for (std::size_t j = 0; j < d_; ++j) {
                if (j == c) continue;
                sub.at(i - 1, tj++) = at(i, j);
            }
        }
        LocalRational term = at(0, c) * sub.determinant();
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

RatMatrix LocalMatrix::value_at_center() const {
    RatMatrix r(d_, d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) r.at(i, j) = at(i, j).value_at_center();
    return r;
}

LocalMatrix LocalMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t size) const {
    LocalMatrix r(size, nvars_);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) r.at(i, j) = at(row0 + i, col0 + j);
    return r;
}

std::string LocalMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < d_; ++i) {
        if (i) out << ", ";
        out << '[';
        for (std::size_t j = 0; j < d_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

namespace {

void swap_rows(LocalMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.size(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(LocalMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.size(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void scale_row(LocalMatrix& m, std::size_t r, const LocalRational& c) {
    for (std::size_t j = 0; j < m.size(); ++j) m.at(r, j) = m.at(r, j) * c;
}

// R_t += c * R_k
void row_axpy(LocalMatrix& m, std::size_t t, std::size_t k, const LocalRational& c) {
    for (std::size_t j = 0; j < m.size(); ++j) m.at(t, j) = m.at(t, j) + c * m.at(k, j);
}

// C_t += c * C_k
void col_axpy(LocalMatrix& m, std::size_t t, std::size_t k, const LocalRational& c) {
    for (std::size_t i = 0; i < m.size(); ++i) m.at(i, t) = m.at(i, t) + c * m.at(i, k);
}

}  // namespace

LocalReduction local_reduce(const PolyMatrix& M, const ProjectivePoint& pt) {
    if (determinant(M).is_zero())
        throw InputError("ZeroDeterminant", "the determinant vanishes identically");
    const std::size_t d = M.size();
    LocalMatrix work = LocalMatrix::from_poly_matrix_at(M, pt);
    const LocalMatrix original = work;
    const std::size_t n = work.nvars();
    LocalMatrix left = LocalMatrix::identity(d, n);
    LocalMatrix right = LocalMatrix::identity(d, n);

    std::size_t k = 0;
    for (; k < d; ++k) {
        // unit pivot with the largest absolute center value, row-major ties
        std::size_t pi = d, pj = d;
        Rat best(0);
        for (std::size_t i = k; i < d; ++i)
            for (std::size_t j = k; j < d; ++j) {
                if (!work.at(i, j).is_unit()) continue;
                Rat v = rat_abs(work.at(i, j).value_at_center());
                if (pi == d || v > best) {
                    pi = i;
                    pj = j;
                    best = v;
                }
            }
        if (pi == d) break;
        if (pi != k) {
            swap_rows(work, pi, k);
            swap_rows(left, pi, k);
        }
        if (pj != k) {
            swap_cols(work, pj, k);
            swap_cols(right, pj, k);
        }
        LocalRational inv = LocalRational::constant(n, 1) / work.at(k, k);
        scale_row(work, k, inv);
        scale_row(left, k, inv);
        for (std::size_t t = 0; t < d; ++t) {
            if (t == k || work.at(t, k).is_zero()) continue;
            LocalRational c = -work.at(t, k);
            row_axpy(work, t, k, c);
            row_axpy(left, t, k, c);
        }
        for (std::size_t t = 0; t < d; ++t) {
            if (t == k || work.at(k, t).is_zero()) continue;
            LocalRational c = -work.at(k, t);
            col_axpy(work, t, k, c);
            col_axpy(right, t, k, c);
        }
    }

    LocalReduction red;
    red.p = d - k;
    red.N = work.submatrix(k, k, red.p);
    red.left = left;
    red.right = right;

    if (!(left * original * right ==
          LocalMatrix::direct_sum(LocalMatrix::identity(k, n), red.N)))
        throw InternalError("local reduction transformation identity failed");
    if (!red.N.value_at_center().is_zero())
        throw InternalError("reduced block does not vanish at the center");
    if (red.p != d - original.value_at_center().rank())
        throw InternalError("reduced block size disagrees with the corank");
    return red;
}

bool verify_local_equivalence(const LocalMatrix& A, const LocalMatrix& M1, const LocalMatrix& M2,
                              const LocalMatrix& B) {
    if (!A.is_invertible_at_center() || !B.is_invertible_at_center()) return false;
    return A * M1 * B == M2;
}

}  // namespace detrep
