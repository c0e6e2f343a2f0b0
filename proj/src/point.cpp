#include "detrep/point.hpp"

#include <sstream>

#include "detrep/errors.hpp"

namespace detrep {

ProjectivePoint::ProjectivePoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
    bool all_zero = true;
    for (const auto& c : coords_)
        if (c != 0) all_zero = false;
    if (coords_.empty() || all_zero)
        throw InputError("ZeroPoint", "projective point needs a nonzero coordinate");
}

std::vector<Rat> ProjectivePoint::canonical() const {
    std::vector<Rat> out = coords_;
    const Rat& pivot = coords_[chart_index()];
    for (auto& c : out) c /= pivot;
    return out;
}

std::vector<Rat> ProjectivePoint::antipodal() const {
    std::vector<Rat> out = coords_;
    for (auto& c : out) c = -c;
    return out;
}

std::size_t ProjectivePoint::chart_index() const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != 0) return i;
    throw InternalError("zero projective point");
}

std::vector<Rat> ProjectivePoint::affine_shift() const {
    std::vector<Rat> shift = canonical();
    shift[chart_index()] = 0;
    return shift;
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
    return coords_.size() == o.coords_.size() && canonical() == o.canonical();
}

std::string ProjectivePoint::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ",";
        out << rational_to_string(coords_[i]);
    }
    return out.str();
}

Polynomial to_local_chart(const Polynomial& p, const ProjectivePoint& pt) {
    std::size_t n = std::max(p.nvars(), pt.nvars());
    Polynomial src = p.extended(n);
    std::size_t chart = pt.chart_index();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == chart)
            images.push_back(Polynomial::constant(n, 1));
        else
            images.push_back(Polynomial::variable(n, i));
    }
    Polynomial affine = src.substitute(images);
    std::vector<Rat> shift(n, Rat(0));
    std::vector<Rat> canonical = pt.canonical();
    for (std::size_t i = 0; i < n && i < canonical.size(); ++i)
        if (i != chart) shift[i] = canonical[i];
    return affine.translated(shift);
}

std::uint32_t multiplicity_at(const Polynomial& f, const ProjectivePoint& pt) {
    if (f.is_zero()) throw InputError("ZeroPolynomial", "multiplicity of the zero polynomial");
    if (!f.is_homogeneous())
        throw InputError("NotHomogeneous", "multiplicity needs a homogeneous input");
    Polynomial local = to_local_chart(f, pt);
    if (local.is_zero())
        throw InternalError("chart restriction of a nonzero form vanished identically");
    std::uint32_t mindeg = *local.degree();
    for (const auto& [m, c] : local.terms())
        mindeg = std::min(mindeg, m.total_degree());
    return mindeg;
}

}  // namespace detrep
