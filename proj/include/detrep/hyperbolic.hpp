#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detrep/matrix.hpp"
#include "detrep/point.hpp"
#include "detrep/univariate.hpp"

namespace detrep {

// True iff every leading principal minor of M evaluated at the supplied
// coordinates of e is positive. The verdict depends on the representative
// (antipodal representatives flip definiteness in odd sizes); callers that
// care about the ambiguity check the antipode explicitly. Errors:
// NotSymmetric, DimensionMismatch.
bool is_pd_at(const PolyMatrix& M, const ProjectivePoint& e);

// Both verdicts of the +/- representative ambiguity of a projective point.
struct PDVerdict {
    bool at_point;
    bool at_antipode;
};
PDVerdict pd_verdict(const PolyMatrix& M, const ProjectivePoint& e);

// Restrict f to the line t -> base + t * dir (exact univariate in t).
Univar restrict_to_line(const Polynomial& f, const std::vector<Rat>& base,
                        const std::vector<Rat>& dir);

struct TrialRecord {
    std::vector<Rat> direction;
    std::size_t distinct_real_roots = 0;
    bool all_roots_real = false;
    std::size_t resamples = 0;  // directions discarded for degenerate leading term
};

struct HyperbolicityReport {
    ProjectivePoint e;
    std::size_t trials_requested;
    std::uint64_t seed;
    bool refuted;
    // On refutation: the witness line is (e, e + direction) and the exact
    // restricted polynomial certifies the missing real roots.
    std::optional<std::size_t> witness_trial;
    std::optional<std::vector<Rat>> witness_direction;
    std::optional<Univar> witness_restriction;
    std::vector<TrialRecord> per_trial;  // trial-index order, cut at the witness

    std::string verdict() const { return refuted ? "refuted" : "hyperbolic-on-samples"; }
};

// Sample `trials` rational directions (height-bounded, seeded per trial)
// and certify all-roots-real exactly on each restricted line; stops at the
// lowest-index failing trial. A passing report is a Monte-Carlo claim over
// lines; a refutation is exact. Errors: NotHomogeneous, ZeroPolynomial,
// PointOnHypersurface (f(e) = 0), DimensionMismatch.
HyperbolicityReport is_hyperbolic_at(const Polynomial& f, const ProjectivePoint& e,
                                     std::size_t trials, std::uint64_t seed);

// Coordinate change T whose columns are linearly independent points where M
// is positive definite, found by perturbing e along the axes with a halving
// radius. After x -> T x every coefficient matrix of the pencil is PD.
// Errors: NotPDAtPoint, SearchExhausted, plus is_pd_at's.
RatMatrix pd_coordinates(const PolyMatrix& M, const ProjectivePoint& e);

// is_hyperbolic_at(det M, e) for a symmetric pencil that is PD at e; a
// refutation would contradict the definiteness certificate and is raised
// as an internal assertion failure. Errors: NotPDAtPoint.
HyperbolicityReport pd_rep_hyperbolicity_check(const PolyMatrix& M, const ProjectivePoint& e,
                                               std::size_t trials, std::uint64_t seed);

}  // namespace detrep
