#include "detrep/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "detrep/errors.hpp"
#include "detrep/parallel.hpp"

namespace detrep {

RatMatrix RatMatrix::identity(std::size_t d) {
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("rational matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InternalError("rational matrix sum shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InternalError("rational matrix difference shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool RatMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& c) { return c == 0; });
}

Rat RatMatrix::determinant() const {
    if (rows_ != cols_) throw InternalError("determinant of a non-square rational matrix");
    RatMatrix m = *this;
    Rat det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return Rat(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat factor = m.at(i, col) / m.at(col, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return det;
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    RatMatrix m = *this;
    if (pivot_cols) pivot_cols->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat factor = m.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

std::size_t RatMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw InternalError("inverse of a non-square rational matrix");
    RatMatrix aug = hcat(*this, identity(rows_));
    std::vector<std::size_t> pivots;
    RatMatrix red = aug.rref(&pivots);
    if (pivots.size() != rows_ || pivots.back() >= rows_)
        throw InternalError("inverse of a singular rational matrix");
    RatMatrix inv(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = red.at(i, rows_ + j);
    return inv;
}

RatMatrix RatMatrix::column_space_basis() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    RatMatrix basis(rows_, pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) basis.at(i, j) = at(i, pivots[j]);
    return basis;
}

RatMatrix RatMatrix::row_space_basis() const {
    std::vector<std::size_t> pivots;
    RatMatrix red = rref(&pivots);
    RatMatrix basis(pivots.size(), cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) basis.at(i, j) = red.at(i, j);
    return basis;
}

std::vector<Rat> RatMatrix::leading_principal_minors() const {
    if (rows_ != cols_) throw InternalError("leading minors of a non-square rational matrix");
    std::vector<Rat> minors;
    minors.reserve(rows_);
    for (std::size_t k = 1; k <= rows_; ++k) {
        RatMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
        minors.push_back(sub.determinant());
    }
    return minors;
}

std::string RatMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ", ";
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << rational_to_string(at(i, j));
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw InternalError("hcat row mismatch");
    RatMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

RatMatrix vcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw InternalError("vcat column mismatch");
    RatMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

PolyMatrix PolyMatrix::identity(std::size_t d, std::size_t nvars) {
    PolyMatrix m(d, nvars);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = Polynomial::constant(nvars, 1);
    return m;
}

PolyMatrix PolyMatrix::scalar(std::size_t d, const Polynomial& p) {
    PolyMatrix m(d, p.nvars());
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Polynomial>>& rows) {
    const std::size_t d = rows.size();
    std::size_t nvars = 0;
    for (const auto& row : rows) {
        if (row.size() != d) throw InputError("RaggedRows", "matrix must be square");
        for (const auto& p : row) nvars = std::max(nvars, p.nvars());
    }
    PolyMatrix m(d, nvars);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rows[i][j].extended(nvars);
    return m;
}

PolyMatrix PolyMatrix::from_constant(const RatMatrix& c, std::size_t nvars) {
    if (c.rows() != c.cols()) throw InternalError("constant block must be square");
    PolyMatrix m(c.rows(), nvars);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            m.at(i, j) = Polynomial::constant(nvars, c.at(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (d_ != o.d_ || nvars_ != o.nvars_) throw InternalError("polynomial matrix product mismatch");
    PolyMatrix r(d_, nvars_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t k = 0; k < d_; ++k) {
            const Polynomial& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < d_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (d_ != o.d_ || nvars_ != o.nvars_) throw InternalError("polynomial matrix sum mismatch");
    PolyMatrix r(d_, nvars_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (d_ != o.d_ || nvars_ != o.nvars_)
        throw InternalError("polynomial matrix difference mismatch");
    PolyMatrix r(d_, nvars_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

PolyMatrix PolyMatrix::operator*(const Polynomial& p) const {
    PolyMatrix r(d_, nvars_);
    Polynomial q = p.extended(nvars_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * q;
    return r;
}

PolyMatrix PolyMatrix::operator*(const Rat& c) const {
    PolyMatrix r(d_, nvars_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(d_, nvars_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return d_ == o.d_ && nvars_ == o.nvars_ && entries_ == o.entries_;
}

bool PolyMatrix::is_linear() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) {
        return p.is_zero() || (p.is_homogeneous() && p.degree() == 1u);
    });
}

bool PolyMatrix::is_affine_linear() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) {
        return p.is_zero() || *p.degree() <= 1u;
    });
}

PolyMatrix PolyMatrix::extended(std::size_t nvars) const {
    if (nvars < nvars_) throw InternalError("cannot shrink the ambient variable count");
    PolyMatrix r(d_, nvars);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].extended(nvars);
    return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
    if (rows.size() != cols.size()) throw InternalError("submatrix must be square");
    PolyMatrix r(rows.size(), nvars_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

RatMatrix PolyMatrix::evaluate(const std::vector<Rat>& point) const {
    RatMatrix r(d_, d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) r.at(i, j) = at(i, j).evaluate(point);
    return r;
}

RatMatrix PolyMatrix::coefficient_matrix(std::size_t var_index) const {
    RatMatrix r(d_, d_);
    Monomial x = Monomial::variable(nvars_, var_index);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) r.at(i, j) = at(i, j).coefficient(x);
    return r;
}

std::string PolyMatrix::to_string() const {
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

HypersurfaceSpec::HypersurfaceSpec(std::vector<std::pair<Polynomial, unsigned>> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw InputError("EmptyFactorization", "at least one factor required");
    std::size_t nvars = 0;
    for (const auto& [f, p] : factors_) {
        if (f.is_zero()) throw InputError("ZeroPolynomial", "zero factor");
        if (f.is_constant()) throw InputError("ConstantFactor", "factors must be nonconstant");
        if (!f.is_homogeneous()) throw InputError("NotHomogeneous", "factor " + f.to_string());
        if (p == 0) throw InputError("BadMultiplicity", "multiplicities must be positive");
        nvars = std::max(nvars, f.nvars());
    }
    for (auto& [f, p] : factors_) f = f.extended(nvars);
    for (std::size_t a = 0; a < factors_.size(); ++a)
        for (std::size_t b = a + 1; b < factors_.size(); ++b)
            if (proportionality_constant(factors_[a].first, factors_[b].first))
                throw InputError("ProportionalFactors",
                                 "factors " + factors_[a].first.to_string() + " and " +
                                     factors_[b].first.to_string() + " are proportional");
}

std::uint32_t HypersurfaceSpec::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [f, p] : factors_) d += *f.degree() * p;
    return d;
}

Polynomial HypersurfaceSpec::reduced_product() const {
    Polynomial r = Polynomial::constant(factors_[0].first.nvars(), 1);
    for (const auto& [f, p] : factors_) r = r * f;
    return r;
}

Polynomial HypersurfaceSpec::full_product() const {
    Polynomial r = Polynomial::constant(factors_[0].first.nvars(), 1);
    for (const auto& [f, p] : factors_) r = r * f.pow(p);
    return r;
}

std::string HypersurfaceSpec::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << "; ";
        // Multiplicity 1 stays explicit so the text reparses as a factor list.
        out << factors_[i].first.to_string() << " ^ " << factors_[i].second;
    }
    return out.str();
}

namespace {

using Mask = std::uint32_t;

std::vector<std::vector<Mask>> masks_by_popcount(std::size_t d) {
    std::vector<std::vector<Mask>> layers(d + 1);
    for (Mask m = 0; m < (Mask{1} << d); ++m)
        layers[std::popcount(m)].push_back(m);
    return layers;
}

// minors[mask] for rows 0..k-1 (top) or rows d-k..d-1 (bottom), k the
// popcount of mask, filled layer by layer so each layer only reads the one
// below it and parallelizes cleanly.
std::vector<Polynomial> minor_table(const PolyMatrix& M, bool top,
                                    const std::vector<std::vector<Mask>>& layers) {
    const std::size_t d = M.size();
    std::vector<Polynomial> table(std::size_t{1} << d, Polynomial(M.nvars()));
    table[0] = Polynomial::constant(M.nvars(), 1);
    for (std::size_t k = 1; k <= d; ++k) {
        const std::size_t row = top ? k - 1 : d - k;
        const auto& layer = layers[k];
        parallel::parallel_for(layer.size(), [&](std::size_t t) {
            const Mask mask = layer[t];
            Polynomial acc(M.nvars());
            std::size_t pos = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (!(mask & (Mask{1} << c))) continue;
                const Polynomial& entry = M.at(row, c);
                if (!entry.is_zero()) {
                    // expansion along the last row of the top block or the
                    // first row of the bottom block
                    const bool negate = ((top ? (k - 1) + pos : pos) % 2) != 0;
                    Polynomial term = entry * table[mask & ~(Mask{1} << c)];
                    acc = negate ? acc - term : acc + term;
                }
                ++pos;
            }
            table[mask] = std::move(acc);
        });
    }
    return table;
}

}  // namespace

Polynomial determinant(const PolyMatrix& M) {
    const std::size_t d = M.size();
    if (d == 0) return Polynomial::constant(M.nvars(), 1);
    if (d > 20) throw InputError("TooLarge", "matrix dimension above supported bound");
    auto layers = masks_by_popcount(d);
    auto top = minor_table(M, true, layers);
    return top[(Mask{1} << d) - 1];
}

PolyMatrix adjugate(const PolyMatrix& M) {
    const std::size_t d = M.size();
    if (d == 0) return M;
    if (d == 1) return PolyMatrix::identity(1, M.nvars());
    if (d > 20) throw InputError("TooLarge", "matrix dimension above supported bound");
    auto layers = masks_by_popcount(d);
    auto top = minor_table(M, true, layers);
    auto bottom = minor_table(M, false, layers);
    if (!(top.back() == bottom.back()))
        throw InternalError("minor tables disagree on the determinant");

    const Mask full = (Mask{1} << d) - 1;
    PolyMatrix adj(d, M.nvars());
    // minor(i, j) = sum over i-subsets S of the columns C = {0..d-1} minus j:
    // sign * top[S] * bottom[C minus S], the Laplace expansion of the minor
    // along its first i rows (the rows above the removed row i).
    parallel::parallel_for(d * d, [&](std::size_t cell) {
        const std::size_t i = cell / d, j = cell % d;
        const Mask cmask = full & ~(Mask{1} << j);
        const Mask above_j = full & ~((Mask{1} << (j + 1)) - 1);
        Polynomial minor(M.nvars());
        Mask s = cmask;
        while (true) {
            if (std::popcount(s) == static_cast<int>(i)) {
                const Polynomial& t = top[s];
                const Polynomial& b = bottom[cmask & ~s];
                if (!t.is_zero() && !b.is_zero()) {
                    // position of column c inside sorted C is c - [c > j]
                    std::size_t col_positions = 0;
                    for (std::size_t c = 0; c < d; ++c)
                        if (s & (Mask{1} << c)) col_positions += c;
                    col_positions -= static_cast<std::size_t>(std::popcount(s & above_j));
                    const std::size_t exponent = (i * (i - 1)) / 2 + col_positions;
                    Polynomial term = t * b;
                    minor = (exponent % 2 == 0) ? minor + term : minor - term;
                }
            }
            if (s == 0) break;
            s = (s - 1) & cmask;
        }
        adj.at(j, i) = ((i + j) % 2 == 0) ? std::move(minor) : -minor;
    });
    return adj;
}

std::size_t corank_at(const PolyMatrix& M, const ProjectivePoint& pt) {
    if (pt.nvars() != M.nvars())
        throw InputError("DimensionMismatch", "point has " + std::to_string(pt.nvars()) +
                                                  " coordinates, matrix uses " +
                                                  std::to_string(M.nvars()) + " variables");
    return M.size() - M.evaluate(pt.canonical()).rank();
}

namespace {

// Visit all r-subsets of {0..d-1}; return false from the callback to stop.
template <typename F>
void for_each_subset(std::size_t d, std::size_t r, F&& visit) {
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r > d) return;
    while (true) {
        if (!visit(idx)) return;
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == d - r + k - 1) --k;
        if (k == 0) return;
        ++idx[k - 1];
        for (std::size_t t = k; t < r; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace

std::size_t generic_corank_mod(const PolyMatrix& M_in, const Polynomial& f_alpha) {
    const std::size_t d = M_in.size();
    const std::size_t n = std::max(M_in.nvars(), f_alpha.nvars());
    PolyMatrix M = M_in.extended(n);
    Polynomial f = f_alpha.extended(n);
    if (f.is_zero() || f.is_constant())
        throw InputError("ConstantFactor", "component must be a nonconstant form");
    if (!divides(f, determinant(M)))
        throw InputError("NotAComponent", "form does not divide the determinant");
    for (std::size_t r = d; r-- > 1;) {
        bool found = false;
        for_each_subset(d, r, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(d, r, [&](const std::vector<std::size_t>& cols) {
                if (!divides(f, determinant(M.submatrix(rows, cols)))) {
                    found = true;
                    return false;
                }
                return true;
            });
            return !found;
        });
        if (found) return d - r;
    }
    return d;  // every entry is divisible: corank at the generic point is d
}

}  // namespace detrep
