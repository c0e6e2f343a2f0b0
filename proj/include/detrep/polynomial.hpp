#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detrep/monomial.hpp"
#include "detrep/rational.hpp"

namespace detrep {

// Sparse multivariate polynomial over the rationals. Terms are kept in
// graded-lex descending order (leading term first); zero coefficients are
// never stored. The zero polynomial has no terms and degree "minus infinity",
// reported via an empty optional.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rat& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(std::size_t nvars, const Monomial& m, const Rat& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Empty for the zero polynomial.
    std::optional<std::uint32_t> degree() const;
    bool is_homogeneous() const;  // true for zero
    bool is_constant() const;     // true for zero
    Rat constant_term() const;
    Rat coefficient(const Monomial& m) const;

    const Monomial& leading_monomial() const;  // throws on zero
    const Rat& leading_coefficient() const;    // throws on zero

    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& o) const;

    Polynomial pow(std::uint32_t k) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    // Substitute images[i] for x_i. All images must share a variable count,
    // which becomes the result's.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // x_i -> x_i + shift[i].
    Polynomial translated(const std::vector<Rat>& shift) const;

    // Pad the ambient variable count.
    Polynomial extended(std::size_t nvars) const;

    // Smallest count still covering every variable that occurs.
    std::size_t used_nvars() const;

    // Canonical text: graded-lex descending, explicit '*' and '^',
    // coefficient 1 omitted on nonconstant terms.
    std::string to_string() const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

// Quotient r with q*r = p, or NotDivisible / DivisionByZero.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

// True iff q divides p exactly (q != 0).
bool divides(const Polynomial& q, const Polynomial& p);

// c with p = c*q for nonzero q, when p is a constant multiple of q.
std::optional<Rat> proportionality_constant(const Polynomial& p, const Polynomial& q);

// Fill each monomial up to the maximal total degree with powers of x_i.
Polynomial homogenize(const Polynomial& p, std::size_t var_index);

// Substitute x_i = 1 (requires p homogeneous; variable count is kept).
Polynomial dehomogenize(const Polynomial& p, std::size_t var_index);

}  // namespace detrep
