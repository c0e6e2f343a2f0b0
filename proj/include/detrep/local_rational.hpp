#pragma once

#include <string>

#include "detrep/polynomial.hpp"

namespace detrep {

// Fraction of polynomials regular at the origin of an affine chart (the
// center; inputs are translated so the center sits at the origin before
// these are formed). No polynomial gcd reduction is attempted: only
// integer-content normalization keeps the representation primitive.
class LocalRational {
public:
    LocalRational() : num_(Polynomial(std::size_t{0})), den_(Polynomial::constant(0, 1)) {}
    LocalRational(Polynomial num, Polynomial den);
    explicit LocalRational(const Polynomial& num);
    static LocalRational constant(std::size_t nvars, const Rat& c);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    std::size_t nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    // Regular element with nonzero value at the center: invertible in the
    // local ring.
    bool is_unit() const { return num_.constant_term() != 0; }
    Rat value_at_center() const { return num_.constant_term() / den_.constant_term(); }

    LocalRational operator-() const;
    LocalRational operator+(const LocalRational& o) const;
    LocalRational operator-(const LocalRational& o) const;
    LocalRational operator*(const LocalRational& o) const;
    LocalRational operator/(const LocalRational& o) const;  // o must be a unit

    // Cross-multiplication equality a*d == c*b.
    bool operator==(const LocalRational& o) const;

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

}  // namespace detrep
