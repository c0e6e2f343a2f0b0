#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "detrep/errors.hpp"
#include "detrep/parser.hpp"
#include "detrep/rng.hpp"

using namespace detrep;

namespace {

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const InputError& e) {
        return e.code();
    }
    return "";
}

bool has_span(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const InputError& e) {
        return e.span().has_value() && e.span()->start <= e.span()->end;
    }
    return false;
}

Polynomial random_poly(SplitMix64& rng, std::size_t nvars) {
    Polynomial p(nvars);
    int terms = static_cast<int>(rng.range(1, 5));
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        int deg = static_cast<int>(rng.range(0, 3));
        for (int k = 0; k < deg; ++k)
            m.exponent(static_cast<std::size_t>(rng.range(0, nvars - 1)))++;
        long num = rng.range(-9, 9);
        long den = rng.range(1, 4);
        if (num != 0) p.add_term(m, Rat(num, den));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial grammar positives") {
    Polynomial conic = parse_polynomial("x0*x2 - x1^2");
    CHECK(conic.to_string() == "x0*x2 - x1^2");
    Polynomial q = parse_polynomial("3/2*x0^2 + x1*x2");
    CHECK(q.coefficient(Monomial::variable(3, 0, 2)) == Rat(3, 2));
    CHECK(parse_polynomial("-x0 + x1").to_string() == "-x0 + x1");
    CHECK(parse_polynomial("  x0 ^ 2 ").to_string() == "x0^2");
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("5/10").constant_term() == Rat(1, 2));
}

TEST_CASE("polynomial grammar negatives carry spans") {
    CHECK(code_of([] { parse_polynomial("x0 + + x1"); }) == "SyntaxError");
    CHECK(code_of([] { parse_polynomial("x0 + -2*x1"); }) == "SyntaxError");
    CHECK(code_of([] { parse_polynomial("2x0"); }) == "SyntaxError");  // implicit product
    CHECK(code_of([] { parse_polynomial("x0*"); }) == "SyntaxError");
    CHECK(code_of([] { parse_polynomial(""); }) == "SyntaxError");
    CHECK(code_of([] { parse_polynomial("1/0"); }) == "SyntaxError");
    CHECK(code_of([] { parse_polynomial("y0"); }) == "SyntaxError");
    CHECK(has_span([] { parse_polynomial("x0 + + x1"); }));
    CHECK(has_span([] { parse_polynomial("2x0"); }));
}

TEST_CASE("variable cap and the vars header") {
    CHECK(code_of([] { parse_polynomial("x10"); }) == "SyntaxError");
    Polynomial p = parse_polynomial("vars 12; x11 + x0");
    CHECK(p.nvars() == 12);
    CHECK(code_of([] { parse_polynomial("vars 65; x0"); }) == "SyntaxError");
    // header fixes the ambient count even when unused variables remain
    CHECK(parse_polynomial("vars 5; x1").nvars() == 5);
    CHECK(parse_polynomial("x1").nvars() == 2);
}

TEST_CASE("matrix parsing") {
    PolyMatrix M = parse_matrix("[[x0, x1], [x1, x2]]");
    CHECK(M.size() == 2);
    CHECK(M.is_symmetric());
    CHECK(M.to_string() == "[[x0, x1], [x1, x2]]");
    CHECK(code_of([] { parse_matrix("[[x0],[x1, x2]]"); }) == "RaggedRows");
    CHECK(has_span([] { parse_matrix("[[x0],[x1, x2]]"); }));
    CHECK(code_of([] { parse_matrix("[[x0, x1]]"); }) == "NotSquare");
    CHECK(code_of([] { parse_matrix("[x0, x1]"); }) == "SyntaxError");
    // entries share the ambient count
    PolyMatrix N = parse_matrix("[[x0, x3], [x1, x2]]");
    CHECK(N.nvars() == 4);
    CHECK(N.at(0, 0).nvars() == 4);
}

TEST_CASE("factors parsing") {
    HypersurfaceSpec two = parse_factors("x0^1; x2^1");
    CHECK(two.count() == 2);
    CHECK(two.factors()[0].second == 1);
    HypersurfaceSpec dbl = parse_factors("x0^2");
    CHECK(dbl.count() == 1);
    CHECK(dbl.factors()[0].second == 2);  // double line, not the square
    CHECK(dbl.factors()[0].first.to_string() == "x0");
    HypersurfaceSpec conic = parse_factors("x0*x2 - x1^2 ^ 1");
    CHECK(conic.factors()[0].first.to_string() == "x0*x2 - x1^2");
    HypersurfaceSpec lines = parse_factors("x0^1\nx1^1");
    CHECK(lines.count() == 2);
    CHECK(code_of([] { parse_factors("x0^1; 2*x0^1"); }) == "ProportionalFactors");
    CHECK(code_of([] { parse_factors("x0^0"); }) == "BadMultiplicity");
    CHECK(code_of([] { parse_factors("x0 + 1 ^ 1"); }) == "NotHomogeneous");
    CHECK(code_of([] { parse_factors("3 ^ 1"); }) == "ConstantFactor");
    CHECK(code_of([] { parse_factors("x0"); }) == "SyntaxError");  // missing multiplicity
    CHECK(code_of([] { parse_factors(""); }) == "EmptyFactorization");
}

TEST_CASE("point parsing") {
    ProjectivePoint p = parse_point("1/2,-3,0");
    CHECK(p.coords() == std::vector<Rat>{Rat(1, 2), Rat(-3), Rat(0)});
    CHECK(p.to_string() == "1/2,-3,0");
    CHECK(code_of([] { parse_point("0,0,0"); }) == "ZeroPoint");
    CHECK(code_of([] { parse_point("1,,0"); }) != "");
    CHECK(has_span([] { parse_point("1,a,0"); }));
}

TEST_CASE("print-parse roundtrips on random polynomials and matrices") {
    SplitMix64 rng(21);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, 4);
        CHECK(parse_polynomial(p.to_string()) == p);
    }
    for (int i = 0; i < 50; ++i) {
        std::size_t d = static_cast<std::size_t>(rng.range(1, 3));
        std::vector<std::vector<Polynomial>> rows(d, std::vector<Polynomial>(d));
        for (auto& row : rows)
            for (auto& e : row) e = random_poly(rng, 3);
        PolyMatrix M = PolyMatrix::from_rows(rows);
        PolyMatrix back = parse_matrix(M.to_string());
        std::size_t n = std::max(back.nvars(), M.nvars());
        CHECK(back.extended(n) == M.extended(n));
    }
}
