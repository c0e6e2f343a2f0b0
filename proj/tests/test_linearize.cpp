#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detrep/linearize.hpp"
#include "detrep/matrix.hpp"
#include "detrep/parser.hpp"
#include "detrep/rng.hpp"

using namespace detrep;

namespace {

bool eq_ext(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t n = std::max(a.nvars(), b.nvars());
    return a.extended(n) == b.extended(n);
}

Polynomial random_poly(SplitMix64& rng, std::size_t nvars, std::uint32_t max_deg,
                       std::size_t terms) {
    Polynomial p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m(nvars);
        std::uint32_t deg = static_cast<std::uint32_t>(rng.range(0, max_deg));
        for (std::uint32_t k = 0; k < deg; ++k)
            m.exponent(static_cast<std::size_t>(rng.range(0, nvars - 1)))++;
        long c = rng.range(-5, 5);
        if (c != 0) p.add_term(m, Rat(c));
    }
    return p;
}

PolyMatrix random_matrix(SplitMix64& rng, std::size_t d, std::size_t nvars,
                         std::uint32_t max_deg, std::size_t terms) {
    std::vector<std::vector<Polynomial>> rows(d, std::vector<Polynomial>(d));
    for (auto& row : rows)
        for (auto& e : row) e = random_poly(rng, nvars, max_deg, terms);
    return PolyMatrix::from_rows(rows);
}

// Each consecutive pair must drop in (top degree, top-term count) lex order.
bool strictly_decreasing(const std::vector<std::pair<std::uint32_t, std::size_t>>& tr) {
    for (std::size_t i = 1; i < tr.size(); ++i) {
        const auto& [d1, c1] = tr[i - 1];
        const auto& [d2, c2] = tr[i];
        if (!(d2 < d1 || (d2 == d1 && c2 < c1))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("single quadratic splits into the two-by-two linear model") {
    PolyMatrix N = parse_matrix("[[x1^2]]");
    LinearizationResult lin = linearize(N);
    CHECK(eq_ext(lin.L, parse_matrix("[[1, x1], [-x1, 0]]")));
    CHECK(lin.unit == Rat(1));
    CHECK(lin.step_count == 1);
    CHECK(determinant(lin.L) == parse_polynomial("x1^2").extended(lin.L.nvars()));
    REQUIRE(lin.measure_trace.size() == 1);
    CHECK(lin.measure_trace[0].first == 2);
    CHECK(lin.measure_trace[0].second == 1);
}

TEST_CASE("mixed quadratic splits at its lowest variable") {
    LinearizationResult lin = linearize(parse_matrix("[[x1*x2]]"));
    CHECK(eq_ext(lin.L, parse_matrix("[[1, x1], [-x2, 0]]")));
    CHECK(lin.unit == Rat(1));
    CHECK(lin.step_count == 1);
}

TEST_CASE("affine input is returned unchanged") {
    for (const char* src : {"[[x1]]", "[[x0, x1], [x2, 0]]", "[[1 + x0, 2], [x1, x2]]",
                            "[[0]]"}) {
        PolyMatrix N = parse_matrix(src);
        LinearizationResult lin = linearize(N);
        CHECK(lin.L == N);
        CHECK(lin.unit == Rat(1));
        CHECK(lin.step_count == 0);
        CHECK(lin.measure_trace.empty());
    }
}

TEST_CASE("symmetric split of a square is the known three-by-three") {
    PolyMatrix N = parse_matrix("[[x1^2]]");
    LinearizationResult lin = sym_linearize(N);
    PolyMatrix expect =
        parse_matrix("[[0, 1, x1], [1, 0, -1/2*x1], [x1, -1/2*x1, 0]]");
    CHECK(eq_ext(lin.L, expect));
    CHECK(lin.unit == Rat(-1));
    CHECK(lin.step_count == 2);
    CHECK(lin.L.is_symmetric());
    CHECK(determinant(lin.L) ==
          (parse_polynomial("x1^2").extended(lin.L.nvars()) * Rat(-1)));
    CHECK(lin.measure_trace.size() == 1);
}

TEST_CASE("symmetric variant leaves affine symmetric input alone") {
    for (const char* src : {"[[x1]]", "[[x0, x1], [x1, x2]]"}) {
        PolyMatrix N = parse_matrix(src);
        LinearizationResult lin = sym_linearize(N);
        CHECK(lin.L == N);
        CHECK(lin.unit == Rat(1));
        CHECK(lin.step_count == 0);
    }
}

TEST_CASE("symmetric split of a diagonal block pair") {
    PolyMatrix N = parse_matrix("[[x1^2, 0], [0, x2]]");
    LinearizationResult lin = sym_linearize(N);
    CHECK(lin.L.size() == 4);
    CHECK(lin.L.is_symmetric());
    CHECK(lin.L.is_affine_linear());
    CHECK(lin.unit == Rat(-1));
    CHECK(determinant(lin.L) ==
          (determinant(N).extended(lin.L.nvars()) * Rat(-1)));
}

TEST_CASE("homogenize fills low-degree entries with the chosen variable") {
    PolyMatrix L = parse_matrix("[[1, x1], [-x1, 0]]");
    PolyMatrix H = homogenize_matrix(L, 0);
    CHECK(eq_ext(H, parse_matrix("[[x0, x1], [-x1, 0]]")));
    CHECK(determinant(H) == parse_polynomial("x1^2").extended(H.nvars()));

    // already homogeneous linear: nothing to fill
    PolyMatrix M = parse_matrix("[[x0, x1], [-x1, 0]]");
    CHECK(homogenize_matrix(M, 0) == M);

    // pure constants pick up one factor of the variable
    PolyMatrix C = parse_matrix("[[2]]").extended(2);
    CHECK(eq_ext(homogenize_matrix(C, 1), parse_matrix("[[2*x1]]")));
}

TEST_CASE("pipeline: split a binary quadratic, then restore homogeneity") {
    Polynomial f = parse_polynomial("x1^2 + x1*x2");
    PolyMatrix N = PolyMatrix::from_rows({{f}});
    LinearizationResult lin = linearize(N);
    CHECK(lin.L.is_affine_linear());
    CHECK(determinant(lin.L) == f.extended(lin.L.nvars()));
    PolyMatrix H = homogenize_matrix(lin.L, 0);
    Polynomial x0 = parse_polynomial("x0").extended(H.nvars());
    Polynomial expect = x0.pow(static_cast<std::uint32_t>(H.size()) - 2) *
                        f.extended(H.nvars());
    CHECK(determinant(H) == expect);
    CHECK(determinant(H).is_homogeneous());
}

TEST_CASE("random inputs: exact determinant, growth law, decreasing measure") {
    SplitMix64 rng(7);
    for (int i = 0; i < 30; ++i) {
        std::size_t d = 1 + static_cast<std::size_t>(rng.range(0, 1));
        std::uint32_t deg = (d == 1) ? 3 : 2;
        PolyMatrix M = random_matrix(rng, d, 3, deg, 2);
        LinearizationResult lin = linearize(M);
        CHECK(lin.L.is_affine_linear());
        CHECK(lin.unit == Rat(1));
        CHECK(determinant(lin.L) == determinant(M));
        CHECK(lin.L.size() == M.size() + lin.step_count);
        CHECK(lin.measure_trace.size() == lin.step_count);
        CHECK(strictly_decreasing(lin.measure_trace));
    }
}

TEST_CASE("random symmetric inputs: symmetry kept, unit tracks move count") {
    SplitMix64 rng(11);
    for (int i = 0; i < 30; ++i) {
        std::size_t d = 1 + static_cast<std::size_t>(rng.range(0, 1));
        PolyMatrix R = random_matrix(rng, d, 3, 2, 1);
        PolyMatrix S = R + R.transpose();
        LinearizationResult lin = sym_linearize(S);
        CHECK(lin.L.is_symmetric());
        CHECK(lin.L.is_affine_linear());
        CHECK(lin.step_count % 2 == 0);
        std::size_t moves = lin.step_count / 2;
        CHECK(lin.measure_trace.size() == moves);
        CHECK(lin.unit == (moves % 2 ? Rat(-1) : Rat(1)));
        CHECK(determinant(lin.L) == determinant(S) * lin.unit);
        CHECK(lin.L.size() == S.size() + lin.step_count);
        CHECK(strictly_decreasing(lin.measure_trace));
    }
}
