#include "detrep/polynomial.hpp"

#include <sstream>

#include "detrep/errors.hpp"

namespace detrep {

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    p.add_term(Monomial::variable(nvars, index), 1);
    return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, const Monomial& m, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(m.extended(nvars), c);
    return p;
}

std::optional<std::uint32_t> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total_degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rat Polynomial::constant_term() const {
    auto it = terms_.find(Monomial(nvars_));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m.extended(nvars_));
    return it == terms_.end() ? Rat(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw InternalError("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

const Rat& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw InternalError("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (m.nvars() != nvars_) throw InternalError("monomial variable count mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InternalError("polynomial variable count mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InternalError("polynomial variable count mismatch");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InternalError("polynomial variable count mismatch");
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ == o.nvars_) return terms_ == o.terms_;
    std::size_t n = std::max(nvars_, o.nvars_);
    return extended(n).terms_ == o.extended(n).terms_;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() < nvars_) throw InternalError("evaluation point too short");
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t e = 0; e < m.exponent(i); ++e) v *= point[i];
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw InternalError("substitution image count mismatch");
    std::size_t out_nvars = nvars_ == 0 ? 0 : images[0].nvars();
    // Per-variable power cache: powers[i][e] = images[i]^e.
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(out_nvars, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial r(out_nvars);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(out_nvars, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m.exponent(i) > 0) term = term * power_of(i, m.exponent(i));
        r = r + term;
    }
    return r;
}

Polynomial Polynomial::translated(const std::vector<Rat>& shift) const {
    if (shift.size() != nvars_) throw InternalError("shift length mismatch");
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        Polynomial img = Polynomial::variable(nvars_, i);
        img.add_term(Monomial(nvars_), shift[i]);
        images.push_back(img);
    }
    return substitute(images);
}

Polynomial Polynomial::extended(std::size_t nvars) const {
    if (nvars < nvars_) throw InternalError("cannot shrink a polynomial's variable count");
    Polynomial r(nvars);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.extended(nvars), c);
    return r;
}

std::size_t Polynomial::used_nvars() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m.exponent(i) > 0) n = std::max(n, i + 1);
    return n;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool printed_coeff = false;
        if (a != 1 || m.is_constant()) {
            out << rational_to_string(a);
            printed_coeff = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exponent(i) == 0) continue;
            if (printed_coeff || !first_var) out << "*";
            out << "x" << i;
            if (m.exponent(i) > 1) out << "^" << m.exponent(i);
            first_var = false;
        }
    }
    return out.str();
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    std::size_t n = std::max(p.nvars(), q.nvars());
    Polynomial a = p.extended(n), b = q.extended(n);
    if (b.is_zero()) throw InputError("DivisionByZero", "polynomial division by zero");
    Polynomial quotient(n);
    while (!a.is_zero()) {
        const Monomial& lm = a.leading_monomial();
        if (!b.leading_monomial().divides(lm))
            throw InputError("NotDivisible",
                             "no polynomial quotient: leading term " +
                                 Polynomial::monomial(n, lm, 1).to_string() +
                                 " is not divisible");
        Monomial m = lm.divided_by(b.leading_monomial());
        Rat c = a.leading_coefficient() / b.leading_coefficient();
        Polynomial t = Polynomial::monomial(n, m, c);
        quotient = quotient + t;
        a = a - t * b;
    }
    return quotient;
}

bool divides(const Polynomial& q, const Polynomial& p) {
    try {
        exact_divide(p, q);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

std::optional<Rat> proportionality_constant(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return std::nullopt;
    std::size_t n = std::max(p.nvars(), q.nvars());
    Polynomial a = p.extended(n), b = q.extended(n);
    if (a.terms().size() != b.terms().size()) return std::nullopt;
    Rat c = a.leading_coefficient() / b.leading_coefficient();
    return a == b * c ? std::optional<Rat>(c) : std::nullopt;
}

Polynomial homogenize(const Polynomial& p, std::size_t var_index) {
    if (p.is_zero()) return p;
    std::size_t n = std::max(p.nvars(), var_index + 1);
    Polynomial src = p.extended(n);
    std::uint32_t d = *src.degree();
    Polynomial r(n);
    for (const auto& [m, c] : src.terms()) {
        Monomial filled = m;
        filled.exponent(var_index) += d - m.total_degree();
        r.add_term(filled, c);
    }
    return r;
}

Polynomial dehomogenize(const Polynomial& p, std::size_t var_index) {
    if (!p.is_homogeneous())
        throw InputError("NotHomogeneous", "dehomogenization needs a homogeneous input");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (var_index >= m.nvars()) {
            r.add_term(m, c);
            continue;
        }
        Monomial cleared = m;
        cleared.exponent(var_index) = 0;
        r.add_term(cleared, c);
    }
    return r;
}

}  // namespace detrep
