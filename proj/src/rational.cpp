#include "detrep/rational.hpp"

namespace detrep {

Rat parse_rational(const std::string& text) {
    auto bad = [&]() -> InputError {
        return InputError("BadNumber", "malformed rational '" + text + "'");
    };
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start) throw bad();
    Int num(text.substr(digits_start, pos - digits_start));
    Int den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/') throw bad();
        ++pos;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start || pos != text.size()) throw bad();
        den = Int(text.substr(den_start, pos - den_start));
        if (den == 0) throw InputError("BadNumber", "zero denominator in '" + text + "'");
    }
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

std::string rational_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

Int integer_nth_root_floor(const Int& v, unsigned n) {
    if (v < 0) throw InternalError("integer_nth_root_floor needs v >= 0");
    if (n == 0) throw InternalError("integer_nth_root_floor needs n >= 1");
    if (v == 0 || v == 1 || n == 1) return v;
    Int lo = 1, hi = v;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= v)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<Rat> rational_nth_root(const Rat& v, unsigned n) {
    if (n == 0) return std::nullopt;
    if (v == 0) return Rat(0);
    bool neg = v < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    Rat a = rat_abs(v);
    Int num = rat_num(a), den = rat_den(a);
    Int rn = integer_nth_root_floor(num, n);
    Int rd = integer_nth_root_floor(den, n);
    if (boost::multiprecision::pow(rn, n) != num || boost::multiprecision::pow(rd, n) != den)
        return std::nullopt;
    Rat root(rn, rd);
    return neg ? Rat(-root) : root;
}

}  // namespace detrep
