#include "detrep/univariate.hpp"

#include <sstream>

#include "detrep/errors.hpp"

namespace detrep {

Univar::Univar(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Univar Univar::constant(const Rat& c) { return Univar(std::vector<Rat>{c}); }

void Univar::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Univar::leading_coefficient() const {
    if (c_.empty()) throw InternalError("leading coefficient of the zero polynomial");
    return c_.back();
}

Univar Univar::operator-() const {
    Univar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Univar Univar::operator+(const Univar& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Univar(std::move(r));
}

Univar Univar::operator-(const Univar& o) const { return *this + (-o); }

Univar Univar::operator*(const Univar& o) const {
    if (is_zero() || o.is_zero()) return Univar();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Univar(std::move(r));
}

Univar Univar::operator*(const Rat& c) const {
    if (c == 0) return Univar();
    Univar r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

Univar Univar::derivative() const {
    if (c_.size() <= 1) return Univar();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(i);
    return Univar(std::move(r));
}

Rat Univar::evaluate(const Rat& t) const {
    Rat v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
}

Univar Univar::normalized() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading_coefficient());
}

std::string Univar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1 && i > 0);
        if (!unit) out << rational_to_string(a);
        if (i > 0) {
            if (!unit) out << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<Univar, Univar> divmod(const Univar& p, const Univar& divisor) {
    if (divisor.is_zero()) throw InternalError("univariate division by zero");
    if (p.degree() < divisor.degree()) return {Univar(), p};
    std::vector<Rat> rem = p.coeffs();
    std::vector<Rat> quo(p.degree() - divisor.degree() + 1, Rat(0));
    const Rat& lead = divisor.leading_coefficient();
    const std::size_t dd = static_cast<std::size_t>(divisor.degree());
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k] == 0) continue;
        Rat q = rem[k] / lead;
        quo[k - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeff(j);
    }
    return {Univar(std::move(quo)), Univar(std::move(rem))};
}

Univar gcd(const Univar& a, const Univar& b) {
    Univar x = a, y = b;
    while (!y.is_zero()) {
        Univar r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.normalized();
}

SturmChain sturm_chain(const Univar& p) {
    if (p.is_zero()) throw InputError("ZeroPolynomial", "Sturm chain of the zero polynomial");
    SturmChain chain;
    chain.seq.push_back(p);
    Univar d = p.derivative();
    if (d.is_zero()) return chain;
    chain.seq.push_back(d);
    while (true) {
        const Univar& a = chain.seq[chain.seq.size() - 2];
        const Univar& b = chain.seq.back();
        Univar r = -divmod(a, b).second;
        if (r.is_zero()) break;
        chain.seq.push_back(std::move(r));
    }
    return chain;
}

namespace {

// Sign of p at -inf (dir < 0) or +inf (dir > 0).
int sign_at_infinity(const Univar& p, int dir) {
    int s = sign_of(p.leading_coefficient());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

std::size_t variations(const SturmChain& chain, int dir) {
    std::size_t v = 0;
    int prev = 0;
    for (const auto& p : chain.seq) {
        int s = sign_at_infinity(p, dir);
        if (s != 0 && prev != 0 && s != prev) ++v;
        if (s != 0) prev = s;
    }
    return v;
}

}  // namespace

std::size_t count_distinct_real_roots(const Univar& p) {
    if (p.is_zero()) throw InputError("ZeroPolynomial", "root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    SturmChain chain = sturm_chain(p);
    return variations(chain, -1) - variations(chain, +1);
}

RealRootCount count_real_roots(const Univar& p) {
    if (p.is_zero()) throw InputError("ZeroPolynomial", "root count of the zero polynomial");
    RealRootCount rc{count_distinct_real_roots(p), false};
    Univar square_free = divmod(p, gcd(p, p.derivative())).first;
    rc.all_roots_real =
        count_distinct_real_roots(square_free) == static_cast<std::size_t>(square_free.degree());
    return rc;
}

}  // namespace detrep
