#include "detrep/hyperbolic.hpp"

#include <utility>

#include "detrep/errors.hpp"
#include "detrep/parallel.hpp"
#include "detrep/rng.hpp"

namespace detrep {

namespace {

constexpr long kHeight = 10;        // numerator/denominator bound for directions
constexpr std::size_t kResampleCap = 256;
constexpr std::size_t kMaxHalvings = 64;

bool all_minors_positive(const RatMatrix& A) {
    for (const Rat& m : A.leading_principal_minors())
        if (!(m > 0)) return false;
    return true;
}

void check_point_dimension(std::size_t nvars, const ProjectivePoint& e) {
    if (e.nvars() != nvars)
        throw InputError("DimensionMismatch",
                         "point has " + std::to_string(e.nvars()) + " coordinates, expected " +
                             std::to_string(nvars));
}

}  // namespace

bool is_pd_at(const PolyMatrix& M, const ProjectivePoint& e) {
    if (!M.is_symmetric())
        throw InputError("NotSymmetric", "definiteness needs a symmetric matrix");
    check_point_dimension(M.nvars(), e);
    return all_minors_positive(M.evaluate(e.coords()));
}

PDVerdict pd_verdict(const PolyMatrix& M, const ProjectivePoint& e) {
    return PDVerdict{is_pd_at(M, e), is_pd_at(M, ProjectivePoint(e.antipodal()))};
}

Univar restrict_to_line(const Polynomial& f, const std::vector<Rat>& base,
                        const std::vector<Rat>& dir) {
    if (base.size() != f.nvars() || dir.size() != f.nvars())
        throw InternalError("line restriction dimension mismatch");
    // Per coordinate x_i = base_i + t*dir_i; expand monomials by repeated
    // univariate multiplication (degrees are small).
    std::vector<Univar> lines(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i)
        lines[i] = Univar(std::vector<Rat>{base[i], dir[i]});
    Univar total;
    for (const auto& [mono, coeff] : f.terms()) {
        Univar term = Univar::constant(coeff);
        for (std::size_t i = 0; i < f.nvars(); ++i)
            for (std::uint32_t k = 0; k < mono.exponent(i); ++k) term = term * lines[i];
        total = total + term;
    }
    return total;
}

HyperbolicityReport is_hyperbolic_at(const Polynomial& f, const ProjectivePoint& e,
                                     std::size_t trials, std::uint64_t seed) {
    if (f.is_zero()) throw InputError("ZeroPolynomial", "hyperbolicity of the zero polynomial");
    if (!f.is_homogeneous())
        throw InputError("NotHomogeneous", "hyperbolicity needs a homogeneous polynomial");
    check_point_dimension(f.nvars(), e);
    if (f.evaluate(e.coords()) == 0)
        throw InputError("PointOnHypersurface",
                         "the base point must lie off the hypersurface");

    const std::size_t n = f.nvars();
    const std::vector<Rat> base = e.coords();

    HyperbolicityReport rep{e, trials, seed, false, std::nullopt, std::nullopt,
                            std::nullopt, {}};
    std::vector<TrialRecord> records(trials);

    // Per-trial seeded streams keep the records independent of thread count.
    parallel::parallel_for(trials, [&](std::size_t t) {
        SplitMix64 rng(seed, t);
        TrialRecord rec;
        while (true) {
            std::vector<Rat> dir(n);
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                Rat num(rng.range(-kHeight, kHeight));
                Rat den(rng.range(1, kHeight));
                dir[i] = num / den;
                if (dir[i] != 0) nonzero = true;
            }
            // A degenerate direction drops the leading coefficient f(dir)
            // of the restricted polynomial; resample it away.
            if (!nonzero || f.evaluate(dir) == 0) {
                if (++rec.resamples > kResampleCap)
                    throw InternalError("direction resampling exhausted");
                continue;
            }
            Univar p = restrict_to_line(f, base, dir);
            RealRootCount rc = count_real_roots(p);
            rec.direction = std::move(dir);
            rec.distinct_real_roots = rc.distinct_count;
            rec.all_roots_real = rc.all_roots_real;
            break;
        }
        records[t] = std::move(rec);
    });

    for (std::size_t t = 0; t < trials; ++t) {
        rep.per_trial.push_back(records[t]);
        if (!records[t].all_roots_real) {
            rep.refuted = true;
            rep.witness_trial = t;
            rep.witness_direction = records[t].direction;
            rep.witness_restriction = restrict_to_line(f, base, records[t].direction);
            break;
        }
    }
    return rep;
}

RatMatrix pd_coordinates(const PolyMatrix& M, const ProjectivePoint& e) {
    if (!M.is_linear())
        throw InputError("NotLinear", "PD coordinates need a pencil of linear forms");
    if (!is_pd_at(M, e)) throw InputError("NotPDAtPoint", "matrix is not PD at the point");
    const std::size_t n = M.nvars();

    Rat radius(1);
    for (std::size_t halving = 0; halving <= kMaxHalvings; ++halving, radius /= 2) {
        // Candidates: e itself, then axis perturbations e +/- r*u_j.
        std::vector<std::vector<Rat>> candidates;
        candidates.push_back(e.coords());
        for (std::size_t j = 0; j < n; ++j) {
            for (int s : {+1, -1}) {
                std::vector<Rat> c = e.coords();
                c[j] += Rat(s) * radius;
                bool zero = true;
                for (const Rat& x : c)
                    if (x != 0) zero = false;
                if (!zero) candidates.push_back(std::move(c));
            }
        }

        std::vector<std::vector<Rat>> chosen;
        for (const auto& c : candidates) {
            if (!all_minors_positive(M.evaluate(c))) continue;
            std::vector<std::vector<Rat>> rows;
            for (const auto& p : chosen) rows.push_back(p);
            rows.push_back(c);
            RatMatrix span(rows.size(), n);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < n; ++j) span.at(i, j) = rows[i][j];
            if (span.rank() == rows.size()) chosen.push_back(c);
            if (chosen.size() == n) break;
        }
        if (chosen.size() < n) continue;

        RatMatrix T(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) T.at(i, j) = chosen[j][i];
        if (T.rank() != n) throw InternalError("coordinate change must be invertible");
        // Coefficient matrices of the transformed pencil are M at T's
        // columns; re-check each one.
        for (std::size_t j = 0; j < n; ++j)
            if (!all_minors_positive(M.evaluate(chosen[j])))
                throw InternalError("transformed coefficient matrix is not PD");
        return T;
    }
    throw InputError("SearchExhausted",
                     "no PD frame found before the perturbation radius underflowed");
}

HyperbolicityReport pd_rep_hyperbolicity_check(const PolyMatrix& M, const ProjectivePoint& e,
                                               std::size_t trials, std::uint64_t seed) {
    if (!M.is_linear())
        throw InputError("NotLinear", "hyperbolicity check needs a pencil of linear forms");
    if (!is_pd_at(M, e)) throw InputError("NotPDAtPoint", "matrix is not PD at the point");
    HyperbolicityReport rep = is_hyperbolic_at(determinant(M), e, trials, seed);
    if (rep.refuted)
        throw InternalError("a PD representation produced a non-hyperbolic line");
    return rep;
}

}  // namespace detrep
