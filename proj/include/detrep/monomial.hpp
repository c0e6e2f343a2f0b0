#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace detrep {

// Exponent vector over the ambient variables x0..x_{n}. The length is fixed
// per computation context; operations require matching lengths.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    std::uint32_t& exponent(std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint32_t total_degree() const;
    bool is_constant() const { return total_degree() == 0; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;   // this | other
    Monomial divided_by(const Monomial& other) const;

    // Pad with zero exponents up to nvars.
    Monomial extended(std::size_t nvars) const;

    bool operator==(const Monomial& other) const { return e_ == other.e_; }

private:
    std::vector<std::uint32_t> e_;
};

// Graded lexicographic order with x0 > x1 > ...: higher total degree wins;
// ties broken by the leftmost differing exponent, larger exponent first.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// All monomials of the given total degree, graded-lex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

}  // namespace detrep
