#include "detrep/monomial.hpp"

#include "detrep/errors.hpp"

namespace detrep {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    Monomial m(nvars);
    m.e_.at(index) = power;
    return m;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto x : e_) d += x;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    if (e_.size() != other.e_.size())
        throw InternalError("monomial variable counts differ");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + other.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (e_.size() != other.e_.size())
        throw InternalError("monomial variable counts differ");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!other.divides(*this))
        throw InternalError("monomial quotient does not exist");
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - other.e_[i];
    return r;
}

Monomial Monomial::extended(std::size_t nvars) const {
    if (nvars < e_.size())
        throw InternalError("cannot shrink a monomial's variable count");
    Monomial r = *this;
    r.e_.resize(nvars, 0);
    return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t n = std::max(a.nvars(), b.nvars());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t ea = i < a.nvars() ? a.exponent(i) : 0;
        std::uint32_t eb = i < b.nvars() ? b.exponent(i) : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

namespace {

void enumerate(std::size_t pos, std::uint32_t remaining, Monomial& cur,
               std::vector<Monomial>& out) {
    if (pos + 1 == cur.nvars()) {
        cur.exponent(pos) = remaining;
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        cur.exponent(pos) = e;
        enumerate(pos + 1, remaining - e, cur, out);
    }
    cur.exponent(pos) = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(std::size_t{0}));
        return out;
    }
    Monomial cur(nvars);
    enumerate(0, degree, cur, out);
    return out;
}

}  // namespace detrep
