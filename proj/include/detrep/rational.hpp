#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "detrep/errors.hpp"

namespace detrep {

// Exact arbitrary-precision scalars. cpp_rational keeps the canonical form
// (gcd-reduced, positive denominator) on every operation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_pow(const Rat& r, long e) {
    Rat acc(1);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) acc *= r;
    return e < 0 ? Rat(1) / acc : acc;
}

// "3", "-3", "3/2". Throws InputError("BadNumber") on malformed text or a
// zero denominator.
Rat parse_rational(const std::string& text);

// Canonical printing: "3", "-3", "3/2" (denominator omitted when 1).
std::string rational_to_string(const Rat& r);

// Largest integer r with r^n <= v, for v >= 0, n >= 1.
Int integer_nth_root_floor(const Int& v, unsigned n);

// Exact rational n-th root if one exists.
std::optional<Rat> rational_nth_root(const Rat& v, unsigned n);

}  // namespace detrep
