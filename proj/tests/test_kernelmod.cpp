#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "detrep/errors.hpp"
#include "detrep/kernel.hpp"
#include "detrep/matrix.hpp"
#include "detrep/parser.hpp"
#include "detrep/rng.hpp"

using namespace detrep;

namespace {

bool eq_ext(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t n = std::max(a.nvars(), b.nvars());
    return a.extended(n) == b.extended(n);
}

RatMatrix random_invertible(SplitMix64& rng, std::size_t d) {
    while (true) {
        RatMatrix U(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) U.at(i, j) = Rat(rng.range(-4, 4));
        if (U.rank() == d) return U;
    }
}

PolyMatrix conjugated(const PolyMatrix& M, const RatMatrix& U, const RatMatrix& V) {
    return PolyMatrix::from_constant(U, M.nvars()) * M *
           PolyMatrix::from_constant(V, M.nvars());
}

template <typename F>
std::string input_code(F&& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("kernel generators are the adjugate columns") {
    PolyMatrix M = parse_matrix("[[x0, x1], [x1, x2]]");
    KernelGenerators gen = kernel_generators(M);
    REQUIRE(gen.columns.size() == 2);
    REQUIRE(gen.columns[0].size() == 2);
    CHECK(gen.columns[0][0] == parse_polynomial("x2").extended(3));
    CHECK(gen.columns[0][1] == parse_polynomial("-x1").extended(3));
    CHECK(gen.columns[1][0] == parse_polynomial("-x1").extended(3));
    CHECK(gen.columns[1][1] == parse_polynomial("x0").extended(3));

    // each column is annihilated by M modulo det(M)
    Polynomial f = determinant(M);
    for (const auto& col : gen.columns)
        for (std::size_t i = 0; i < 2; ++i) {
            Polynomial acc(M.nvars());
            for (std::size_t j = 0; j < 2; ++j) acc = acc + M.at(i, j) * col[j];
            CHECK((acc.is_zero() || divides(f, acc)));
        }
}

TEST_CASE("pointwise maximal generation at a node") {
    PolyMatrix M = parse_matrix("[[x0, 0], [0, x1]]").extended(3);
    Polynomial f = parse_polynomial("x0*x1").extended(3);
    ProjectivePoint pt({Rat(0), Rat(0), Rat(1)});
    MGReport rep = is_mg_at(M, f, pt);
    CHECK(rep.verdict);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points[0].corank == 2);
    CHECK(rep.points[0].multiplicity == 2);
    CHECK(rep.points[0].mg);
}

TEST_CASE("a double line representation can fail pointwise maximal generation") {
    PolyMatrix M = parse_matrix("[[x0, x1], [0, x0]]").extended(3);
    Polynomial f = parse_polynomial("x0^2").extended(3);
    MGReport rep = is_mg_at(M, f, ProjectivePoint({Rat(0), Rat(1), Rat(0)}));
    CHECK(!rep.verdict);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points[0].corank == 1);
    CHECK(rep.points[0].multiplicity == 2);
    CHECK(!rep.points[0].mg);
}

TEST_CASE("pointwise checks validate their inputs") {
    PolyMatrix M = parse_matrix("[[x0, 0], [0, x1]]").extended(3);
    Polynomial f = parse_polynomial("x0*x1").extended(3);
    CHECK(input_code([&] {
              is_mg_at(M, f, ProjectivePoint({Rat(1), Rat(1), Rat(1)}));
          }) == "PointOffHypersurface");
    CHECK(input_code([&] {
              is_mg_at(M, parse_polynomial("x0^2").extended(3),
                       ProjectivePoint({Rat(0), Rat(0), Rat(1)}));
          }) == "BadFactorization");
}

TEST_CASE("generic maximal generation by minor divisibility") {
    MGReport a = is_generically_mg(PolyMatrix::scalar(2, parse_polynomial("x0")),
                                   parse_factors("x0^2"));
    CHECK(a.verdict);
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0].generic_corank == 2);
    CHECK(a.factors[0].declared_multiplicity == 2);
    CHECK(a.factors[0].mg);

    MGReport b = is_generically_mg(parse_matrix("[[x0, 0], [0, x1]]"),
                                   parse_factors("x0^1; x1^1"));
    CHECK(b.verdict);
    REQUIRE(b.factors.size() == 2);
    CHECK(b.factors[0].generic_corank == 1);
    CHECK(b.factors[1].generic_corank == 1);

    MGReport c = is_generically_mg(parse_matrix("[[x0, x1], [0, x0]]"),
                                   parse_factors("x0^2"));
    CHECK(!c.verdict);
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0].generic_corank == 1);
    CHECK(!c.factors[0].mg);
}

TEST_CASE("generic and pointwise coranks agree on a smooth point") {
    PolyMatrix M = parse_matrix("[[x0, 0], [0, x1]]").extended(3);
    // (0:1:1) lies on {x0 = 0} only
    CHECK(corank_at(M, ProjectivePoint({Rat(0), Rat(1), Rat(1)})) ==
          generic_corank_mod(M, parse_polynomial("x0").extended(3)));
}

TEST_CASE("reduced kernel generators divide out the repeated factors") {
    PolyMatrix M2 = PolyMatrix::scalar(2, parse_polynomial("x0"));
    PolyMatrix red2 = reduced_kernel_generators(M2, parse_factors("x0^2"));
    CHECK(red2 == PolyMatrix::identity(2, M2.nvars()));

    PolyMatrix M3 = PolyMatrix::scalar(3, parse_polynomial("x0"));
    PolyMatrix red3 = reduced_kernel_generators(M3, parse_factors("x0^3"));
    CHECK(red3 == PolyMatrix::identity(3, M3.nvars()));

    PolyMatrix D = parse_matrix("[[x0, 0], [0, x1]]");
    PolyMatrix redD = reduced_kernel_generators(D, parse_factors("x0^1; x1^1"));
    CHECK(eq_ext(redD, parse_matrix("[[x1, 0], [0, x0]]")));

    CHECK(input_code([&] {
              reduced_kernel_generators(parse_matrix("[[x0, x1], [0, x0]]"),
                                        parse_factors("x0^2"));
          }) == "NotGenericallyMG");
}

TEST_CASE("matrix factorization multiplies to the reduced determinant") {
    PolyMatrix M2 = PolyMatrix::scalar(2, parse_polynomial("x0"));
    PolyMatrix N2 = matrix_factorization(M2, parse_factors("x0^2"));
    CHECK(N2 == PolyMatrix::identity(2, M2.nvars()));
    CHECK(M2 * N2 == PolyMatrix::scalar(2, parse_polynomial("x0")));

    PolyMatrix D = parse_matrix("[[x0, 0], [0, x1]]");
    PolyMatrix ND = matrix_factorization(D, parse_factors("x0^1; x1^1"));
    CHECK(eq_ext(ND, parse_matrix("[[x1, 0], [0, x0]]")));
    Polynomial red = parse_polynomial("x0*x1");
    CHECK(D * ND == PolyMatrix::scalar(2, red));
    CHECK(ND * D == PolyMatrix::scalar(2, red));
}

TEST_CASE("conjugated scalar pencils stay maximally generated") {
    SplitMix64 rng(101);
    for (std::size_t p : {std::size_t{2}, std::size_t{3}}) {
        Polynomial x0 = parse_polynomial("x0").extended(3);
        PolyMatrix M0 = PolyMatrix::scalar(p, x0);
        for (int i = 0; i < 5; ++i) {
            PolyMatrix M =
                conjugated(M0, random_invertible(rng, p), random_invertible(rng, p));
            HypersurfaceSpec spec({{x0, static_cast<unsigned>(p)}});
            CHECK(is_generically_mg(M, spec).verdict);

            // every adjugate entry carries the p-1 repeated factors
            PolyMatrix adjM = adjugate(M);
            Polynomial div = x0.pow(static_cast<std::uint32_t>(p) - 1);
            for (std::size_t r = 0; r < p; ++r)
                for (std::size_t c = 0; c < p; ++c)
                    CHECK((adjM.at(r, c).is_zero() || divides(div, adjM.at(r, c))));

            PolyMatrix N = matrix_factorization(M, spec);
            CHECK(M * N == PolyMatrix::scalar(p, x0));
            CHECK(N * M == PolyMatrix::scalar(p, x0));
        }
    }
}

TEST_CASE("adjoint recovery inverts the adjugate") {
    PolyMatrix M = parse_matrix("[[x0, x1], [x1, x2]]");
    Polynomial f = determinant(M);
    PolyMatrix rec = recover_from_adjoint(adjugate(M), f);
    CHECK((rec == M || rec == M * Rat(-1)));
    CHECK(determinant(rec) == f);

    PolyMatrix D = parse_matrix("[[x0, 0, 0], [0, x1, 0], [0, 0, x2]]");
    PolyMatrix recD = recover_from_adjoint(adjugate(D), determinant(D));
    CHECK(recD == D);

    // scaled adjugates recover the same representation
    PolyMatrix rec2 = recover_from_adjoint(adjugate(M) * Rat(2), f);
    CHECK((rec2 == M || rec2 == M * Rat(-1)));
}

TEST_CASE("adjoint recovery rejects malformed claims") {
    PolyMatrix M = parse_matrix("[[x0, x1], [x1, x2]]");
    Polynomial f = determinant(M);
    CHECK(input_code([&] {
              recover_from_adjoint(adjugate(M), parse_polynomial("x0").extended(3));
          }) == "DegreeMismatch");
    CHECK(input_code([&] { recover_from_adjoint(parse_matrix("[[x0]]"), f); }) ==
          "DegreeMismatch");
    CHECK(input_code([&] {
              recover_from_adjoint(parse_matrix("[[x0, 0], [0, x1]]").extended(3),
                                   parse_polynomial("x0^2").extended(3));
          }) == "DeterminantMismatch");
    CHECK(input_code([&] {
              recover_from_adjoint(parse_matrix("[[x0^2, 0, 0], [0, x1^2, 0], [0, 0, x2^2]]"),
                                   parse_polynomial("x0*x1*x2"));
          }) == "NotDivisible");
    // determinant matches only after an irrational rescaling
    CHECK(input_code([&] {
              recover_from_adjoint(parse_matrix("[[x0, 0], [0, 2*x2]]").extended(3),
                                   parse_polynomial("x0*x2").extended(3));
          }) == "DeterminantMismatch");
}

TEST_CASE("random linear roundtrips through the adjugate") {
    SplitMix64 rng(55);
    int done = 0;
    while (done < 20) {
        std::size_t d = 2 + static_cast<std::size_t>(rng.range(0, 2));
        PolyMatrix M(d, 3);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Polynomial e(3);
                for (std::size_t v = 0; v < 3; ++v) {
                    long c = rng.range(-3, 3);
                    if (c != 0)
                        e.add_term(Monomial::variable(3, v), Rat(c));
                }
                M.at(i, j) = e;
            }
        Polynomial f = determinant(M);
        if (f.is_zero()) continue;
        ++done;
        PolyMatrix rec = recover_from_adjoint(adjugate(M), f);
        CHECK((rec == M || rec == M * Rat(-1)));
        CHECK(determinant(rec) == f);
    }
}
