#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "detrep/rational.hpp"

namespace detrep {

// Dense univariate polynomial over the rationals, coefficients stored low
// to high with the trailing zeros trimmed. The zero polynomial has an empty
// coefficient vector and degree -1 by convention.
class Univar {
public:
    Univar() = default;
    explicit Univar(std::vector<Rat> coeffs);
    static Univar constant(const Rat& c);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading_coefficient() const;  // throws on zero

    Univar operator-() const;
    Univar operator+(const Univar& o) const;
    Univar operator-(const Univar& o) const;
    Univar operator*(const Univar& o) const;
    Univar operator*(const Rat& c) const;
    bool operator==(const Univar& o) const { return c_ == o.c_; }

    Univar derivative() const;
    Rat evaluate(const Rat& t) const;

    // Monic unless zero.
    Univar normalized() const;

    std::string to_string() const;  // variable printed as t

private:
    void trim();
    std::vector<Rat> c_;
};

// Euclidean division: p = q*divisor + r with deg r < deg divisor.
std::pair<Univar, Univar> divmod(const Univar& p, const Univar& divisor);

// Monic gcd; gcd(p, 0) = normalized p.
Univar gcd(const Univar& a, const Univar& b);

// p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), kept until the remainder
// vanishes. Sign variations at a < b count the distinct real roots in
// (a, b]; the chain is exact, no coefficient scaling is applied.
struct SturmChain {
    std::vector<Univar> seq;
};

SturmChain sturm_chain(const Univar& p);  // p must be nonzero

// Distinct real roots of p over all of R, via variations at -inf and +inf.
std::size_t count_distinct_real_roots(const Univar& p);

struct RealRootCount {
    std::size_t distinct_count;
    bool all_roots_real;  // roots counted with multiplicity fill the degree
};

// all_roots_real is decided on the squarefree part p/gcd(p, p'): every
// complex root of p is real iff that part has as many distinct real roots
// as its degree. Errors: ZeroPolynomial.
RealRootCount count_real_roots(const Univar& p);

}  // namespace detrep
