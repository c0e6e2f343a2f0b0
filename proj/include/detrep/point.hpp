#pragma once

#include <string>
#include <vector>

#include "detrep/polynomial.hpp"
#include "detrep/rational.hpp"

namespace detrep {

// Point of projective space, stored with the coordinates as supplied.
// Equality and sign-insensitive evaluations go through the canonical
// representative (scaled so the first nonzero coordinate is 1); the raw
// representative is kept because positive-definiteness checks are
// sign-sensitive.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Rat> coords);

    std::size_t nvars() const { return coords_.size(); }
    const std::vector<Rat>& coords() const { return coords_; }
    std::vector<Rat> canonical() const;
    std::vector<Rat> antipodal() const;  // negated supplied representative

    // Index of the first nonzero coordinate.
    std::size_t chart_index() const;

    // Translation vector moving the point to the origin of its canonical
    // affine chart: entry i is the canonical coordinate for i != chart,
    // 0 at the chart index.
    std::vector<Rat> affine_shift() const;

    bool operator==(const ProjectivePoint& o) const;

    std::string to_string() const;  // "1,0,0" style, supplied representative

private:
    std::vector<Rat> coords_;
};

// Lowest total degree of f's Taylor expansion at pt: dehomogenize in the
// point's chart, translate the point to the origin, take the minimal degree
// among surviving monomials. Zero iff f(pt) != 0.
std::uint32_t multiplicity_at(const Polynomial& f, const ProjectivePoint& pt);

// Dehomogenize in the point's chart and translate the point to the origin.
// Works for non-homogeneous inputs too (plain substitution x_chart = 1).
Polynomial to_local_chart(const Polynomial& p, const ProjectivePoint& pt);

}  // namespace detrep
