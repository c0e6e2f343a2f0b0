#include "detrep/local_rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "detrep/errors.hpp"

namespace detrep {

namespace {

std::size_t common_nvars(const Polynomial& a, const Polynomial& b) {
    return std::max(a.nvars(), b.nvars());
}

}  // namespace

LocalRational::LocalRational(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    std::size_t n = common_nvars(num_, den_);
    num_ = num_.extended(n);
    den_ = den_.extended(n);
    if (den_.constant_term() == 0)
        throw InputError("NotRegular", "denominator vanishes at the center");
    normalize();
}

LocalRational::LocalRational(const Polynomial& num)
    : LocalRational(num, Polynomial::constant(num.nvars(), 1)) {}

LocalRational LocalRational::constant(std::size_t nvars, const Rat& c) {
    return LocalRational(Polynomial::constant(nvars, c));
}

void LocalRational::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(den_.nvars(), 1);
        return;
    }
    // Scale num and den by one rational so den becomes a primitive integer
    // polynomial with positive constant term; the value is unchanged.
    Int den_lcm = 1;
    for (const auto& [m, c] : den_.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
    Int content = 0;
    for (const auto& [m, c] : den_.terms())
        content = boost::multiprecision::gcd(content, Int(rat_num(c) * (den_lcm / rat_den(c))));
    Rat scale(den_lcm, content);
    if (den_.constant_term() < 0) scale = -scale;
    num_ = num_ * scale;
    den_ = den_ * scale;
}

LocalRational LocalRational::operator-() const {
    LocalRational r = *this;
    r.num_ = -r.num_;
    return r;
}

LocalRational LocalRational::operator+(const LocalRational& o) const {
    std::size_t n = std::max(nvars(), o.nvars());
    return LocalRational(num_.extended(n) * o.den_.extended(n) +
                             o.num_.extended(n) * den_.extended(n),
                         den_.extended(n) * o.den_.extended(n));
}

LocalRational LocalRational::operator-(const LocalRational& o) const {
    return *this + (-o);
}

LocalRational LocalRational::operator*(const LocalRational& o) const {
    std::size_t n = std::max(nvars(), o.nvars());
    return LocalRational(num_.extended(n) * o.num_.extended(n),
                         den_.extended(n) * o.den_.extended(n));
}

LocalRational LocalRational::operator/(const LocalRational& o) const {
    if (!o.is_unit())
        throw InputError("NotAUnit", "division by a local rational vanishing at the center");
    std::size_t n = std::max(nvars(), o.nvars());
    return LocalRational(num_.extended(n) * o.den_.extended(n),
                         den_.extended(n) * o.num_.extended(n));
}

bool LocalRational::operator==(const LocalRational& o) const {
    std::size_t n = std::max(nvars(), o.nvars());
    return num_.extended(n) * o.den_.extended(n) == o.num_.extended(n) * den_.extended(n);
}

std::string LocalRational::to_string() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace detrep
