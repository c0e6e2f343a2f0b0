#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detrep/errors.hpp"
#include "detrep/matrix.hpp"
#include "detrep/parallel.hpp"
#include "detrep/parser.hpp"
#include "detrep/reference.hpp"
#include "detrep/rng.hpp"

using namespace detrep;

namespace {

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

RatMatrix random_invertible(SplitMix64& rng, std::size_t d) {
    while (true) {
        RatMatrix U(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) U.at(i, j) = Rat(rng.range(-4, 4));
        if (U.rank() == d) return U;
    }
}

}  // namespace

TEST_CASE("rational matrix elimination basics") {
    RatMatrix A(3, 3);
    long vals[3][3] = {{2, 1, 0}, {1, 1, 1}, {0, 3, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A.at(i, j) = Rat(vals[i][j]);
    CHECK(A.rank() == 3);
    CHECK(A.determinant() == Rat(-5));
    RatMatrix inv = A.inverse();
    CHECK(A * inv == RatMatrix::identity(3));
    CHECK(inv * A == RatMatrix::identity(3));
    auto minors = A.leading_principal_minors();
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == Rat(2));
    CHECK(minors[1] == Rat(1));
    CHECK(minors[2] == Rat(-5));
}

TEST_CASE("rank and space bases on random products") {
    SplitMix64 rng(31);
    for (int i = 0; i < 20; ++i) {
        std::size_t d = static_cast<std::size_t>(rng.range(2, 4));
        RatMatrix U = random_invertible(rng, d);
        CHECK(U.rank() == d);
        RatMatrix RB = U.row_space_basis();
        RatMatrix CB = U.column_space_basis();
        CHECK(RB.rows() == d);
        CHECK(CB.cols() == d);
        // singular product has deficient rank
        RatMatrix S(d, d);
        for (std::size_t r = 0; r + 1 < d; ++r)
            for (std::size_t c = 0; c < d; ++c) S.at(r, c) = U.at(r, c);
        CHECK(S.rank() == d - 1);
    }
}

TEST_CASE("determinant and adjugate match the naive baseline") {
    SplitMix64 rng(32);
    for (int i = 0; i < 40; ++i) {
        std::size_t d = static_cast<std::size_t>(rng.range(1, 4));
        PolyMatrix M = random_matrix(rng, d, 3, 2, 2);
        CHECK(determinant(M) == reference::determinant(M));
        if (d >= 2) CHECK(adjugate(M) == reference::adjugate(M));
    }
}

TEST_CASE("baseline comparison is thread-count independent") {
    SplitMix64 rng(33);
    PolyMatrix M = random_matrix(rng, 5, 3, 1, 3);
    parallel::set_max_threads(1);
    Polynomial det_seq = determinant(M);
    PolyMatrix adj_seq = adjugate(M);
    parallel::set_max_threads(4);
    CHECK(determinant(M) == det_seq);
    CHECK(adjugate(M) == adj_seq);
    parallel::set_max_threads(0);
}

TEST_CASE("adjugate identities") {
    SplitMix64 rng(34);
    for (int i = 0; i < 20; ++i) {
        std::size_t d = static_cast<std::size_t>(rng.range(2, 4));
        PolyMatrix M = random_matrix(rng, d, 3, 2, 2);
        Polynomial f = determinant(M);
        PolyMatrix A = adjugate(M);
        CHECK(M * A == PolyMatrix::scalar(d, f));
        CHECK(A * M == PolyMatrix::scalar(d, f));
        Polynomial fpow(f.nvars());
        fpow = Polynomial::constant(f.nvars(), 1);
        for (std::size_t k = 0; k + 1 < d; ++k) fpow = fpow * f;
        CHECK(determinant(A) == fpow);
        if (d == 2) CHECK(adjugate(A) == M);
    }
}

TEST_CASE("determinant size guard") {
    PolyMatrix big = PolyMatrix::scalar(21, Polynomial::variable(1, 0));
    try {
        determinant(big);
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(e.code() == "TooLarge");
    }
}

TEST_CASE("corank at points") {
    PolyMatrix M = parse_matrix("[[x0, x1], [x1, x2]]");
    CHECK(corank_at(M, ProjectivePoint({Rat(1), Rat(0), Rat(0)})) == 1);
    CHECK(corank_at(M, ProjectivePoint({Rat(1), Rat(0), Rat(1)})) == 0);
    PolyMatrix D = parse_matrix("[[x0, 0], [0, x1]]").extended(3);
    CHECK(corank_at(D, ProjectivePoint({Rat(0), Rat(0), Rat(1)})) == 2);
    CHECK_THROWS_AS(corank_at(D, ProjectivePoint({Rat(1), Rat(0)})), InputError);
}

TEST_CASE("generic corank modulo a factor") {
    PolyMatrix D = parse_matrix("[[x0, 0], [0, x1]]");
    Polynomial x0 = Polynomial::variable(3, 0);
    CHECK(generic_corank_mod(D, x0) == 1);
    PolyMatrix S = parse_matrix("[[x0, 0], [0, x0]]");
    CHECK(generic_corank_mod(S, Polynomial::variable(1, 0)) == 2);
    PolyMatrix T = parse_matrix("[[x0, x1], [0, x0]]");
    CHECK(generic_corank_mod(T, Polynomial::variable(2, 0)) == 1);
    // not a component of det
    PolyMatrix C = parse_matrix("[[x0, 0], [0, x1]]");
    try {
        generic_corank_mod(C, Polynomial::variable(3, 2));
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(e.code() == "NotAComponent");
    }
}

TEST_CASE("generic corank agrees with the corank at a rational smooth point") {
    // diag(x0, x1) along {x0 = 0}: generic corank 1, and the smooth point
    // (0:1:1) of that component shows corank 1.
    PolyMatrix D = parse_matrix("[[x0, 0], [0, x1]]").extended(3);
    CHECK(generic_corank_mod(D, Polynomial::variable(3, 0)) ==
          corank_at(D, ProjectivePoint({Rat(0), Rat(1), Rat(1)})));
}

TEST_CASE("hypersurface spec validation") {
    auto spec = parse_factors("x0^2; x1^1");
    CHECK(spec.total_degree() == 3);
    CHECK(spec.reduced_product().to_string() == "x0*x1");
    CHECK(spec.full_product().to_string() == "x0^2*x1");
    CHECK(spec.to_string() == "x0 ^ 2; x1 ^ 1");
}

TEST_CASE("polymatrix structure predicates") {
    CHECK(parse_matrix("[[x0, x1], [x1, x2]]").is_linear());
    CHECK(!parse_matrix("[[x0, 1], [x1, x2]]").is_linear());
    CHECK(parse_matrix("[[x0, 1], [x1, x2]]").is_affine_linear());
    CHECK(!parse_matrix("[[x0^2, x1], [x1, x2]]").is_affine_linear());
    PolyMatrix M = parse_matrix("[[x0, x1], [x1, x2]]");
    RatMatrix M0 = M.coefficient_matrix(0);
    CHECK(M0.at(0, 0) == Rat(1));
    CHECK(M0.at(1, 1) == Rat(0));
    RatMatrix at_pt = M.evaluate({Rat(1), Rat(2), Rat(3)});
    CHECK(at_pt.at(0, 1) == Rat(2));
    CHECK(at_pt.at(1, 1) == Rat(3));
}
