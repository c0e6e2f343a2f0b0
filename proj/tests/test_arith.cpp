#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "detrep/errors.hpp"
#include "detrep/local_rational.hpp"
#include "detrep/point.hpp"
#include "detrep/polynomial.hpp"
#include "detrep/rng.hpp"
#include "detrep/univariate.hpp"

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

}  // namespace

TEST_CASE("rational parse and print") {
    CHECK(rational_to_string(parse_rational("3/2")) == "3/2");
    CHECK(rational_to_string(parse_rational("-4/2")) == "-2");
    CHECK(rational_to_string(parse_rational("0")) == "0");
    CHECK(parse_rational("7") == Rat(7));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("rat_pow matches repeated multiplication, negative powers invert") {
    Rat x(3, 2);
    CHECK(rat_pow(x, 0) == Rat(1));
    CHECK(rat_pow(x, 3) == x * x * x);
    CHECK(rat_pow(x, -2) * x * x == Rat(1));
}

TEST_CASE("rational nth roots") {
    CHECK(rational_nth_root(Rat(8), 3) == Rat(2));
    CHECK(rational_nth_root(Rat(9, 4), 2) == Rat(3, 2));
    CHECK(!rational_nth_root(Rat(2), 2).has_value());
    CHECK(!rational_nth_root(Rat(-4), 2).has_value());
    CHECK(rational_nth_root(Rat(-8), 3) == Rat(-2));
}

TEST_CASE("grlex order: degree first, then leftmost exponent") {
    Monomial a(3), b(3);
    a.exponent(0) = 2;           // x0^2
    b.exponent(1) = 1;           // x1
    CHECK(grlex_less(b, a));
    Monomial c(3), d(3);
    c.exponent(0) = 1;
    c.exponent(1) = 1;           // x0*x1
    d.exponent(0) = 1;
    d.exponent(2) = 1;           // x0*x2
    CHECK(grlex_less(d, c));
}

TEST_CASE("monomials_of_degree counts match binomials") {
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(2, 4).size() == 5);
    // descending grlex
    auto ms = monomials_of_degree(3, 2);
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(grlex_less(ms[i], ms[i - 1]));
}

TEST_CASE("polynomial ring laws on random inputs") {
    SplitMix64 rng(11);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = random_poly(rng, 3, 3, 4);
        Polynomial b = random_poly(rng, 3, 3, 4);
        Polynomial c = random_poly(rng, 3, 3, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact_divide inverts multiplication") {
    SplitMix64 rng(12);
    for (int i = 0; i < 25; ++i) {
        Polynomial a = random_poly(rng, 3, 3, 3);
        Polynomial b = random_poly(rng, 3, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
        CHECK(divides(b, a * b));
    }
    Polynomial x0 = Polynomial::variable(2, 0);
    Polynomial x1 = Polynomial::variable(2, 1);
    CHECK_THROWS_AS(exact_divide(x0, x1), InputError);
    CHECK(!divides(x1, x0));
}

TEST_CASE("proportionality detects scalar multiples only") {
    Polynomial x0 = Polynomial::variable(2, 0);
    Polynomial x1 = Polynomial::variable(2, 1);
    auto c = proportionality_constant(x0 * Rat(3), x0);
    REQUIRE(c.has_value());
    CHECK(*c == Rat(3));
    CHECK(!proportionality_constant(x0, x1).has_value());
    CHECK(!proportionality_constant(x0 + x1, x0).has_value());
}

TEST_CASE("homogenize and dehomogenize") {
    // x1 + 1 filled with x0 to degree 1
    Polynomial p(2);
    p.add_term(Monomial::variable(2, 1), Rat(1));
    p.add_term(Monomial(2), Rat(1));
    Polynomial h = homogenize(p, 0);
    CHECK(h.is_homogeneous());
    CHECK(dehomogenize(h, 0) == p);
}

TEST_CASE("multiplicity at points") {
    // node x0*x1 at (0:0:1)
    Polynomial f = Polynomial::variable(3, 0) * Polynomial::variable(3, 1);
    CHECK(multiplicity_at(f, ProjectivePoint({Rat(0), Rat(0), Rat(1)})) == 2);
    // smooth point of the conic
    Polynomial conic =
        Polynomial::variable(3, 0) * Polynomial::variable(3, 2) -
        Polynomial::variable(3, 1) * Polynomial::variable(3, 1);
    CHECK(multiplicity_at(conic, ProjectivePoint({Rat(1), Rat(0), Rat(0)})) == 1);
    // point off the curve
    CHECK(multiplicity_at(conic, ProjectivePoint({Rat(1), Rat(1), Rat(2)})) == 0);
}

TEST_CASE("local rational arithmetic and units") {
    std::size_t n = 2;
    Polynomial one = Polynomial::constant(n, 1);
    Polynomial x1 = Polynomial::variable(n, 1);
    LocalRational u(one + x1, one);  // 1 + x1, a unit
    LocalRational v(x1, one + x1);   // vanishes at center
    CHECK(u.is_unit());
    CHECK(!v.is_unit());
    CHECK(v.value_at_center() == Rat(0));
    CHECK(u.value_at_center() == Rat(1));
    LocalRational w = u * v + v;
    CHECK(w == v * (u + LocalRational::constant(n, 1)));
    LocalRational q = v / u;
    CHECK(q * u == v);
}

TEST_CASE("univariate division and gcd") {
    SplitMix64 rng(13);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rat> ac(static_cast<std::size_t>(rng.range(1, 5)));
        std::vector<Rat> bc(static_cast<std::size_t>(rng.range(1, 4)));
        for (auto& x : ac) x = Rat(rng.range(-4, 4));
        for (auto& x : bc) x = Rat(rng.range(-4, 4));
        Univar a(ac), b(bc);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    // gcd of constructed products
    Univar t{std::vector<Rat>{Rat(0), Rat(1)}};
    Univar p1 = (t - Univar::constant(Rat(1))) * (t + Univar::constant(Rat(2)));
    Univar p2 = (t - Univar::constant(Rat(1))) * (t - Univar::constant(Rat(5)));
    CHECK(gcd(p1, p2) == (t - Univar::constant(Rat(1))));
}

TEST_CASE("Sturm examples") {
    Univar t{std::vector<Rat>{Rat(0), Rat(1)}};
    Univar t2m1 = t * t - Univar::constant(Rat(1));
    Univar t2p1 = t * t + Univar::constant(Rat(1));
    auto a = count_real_roots(t2m1);
    CHECK(a.distinct_count == 2);
    CHECK(a.all_roots_real);
    auto b = count_real_roots(t2p1);
    CHECK(b.distinct_count == 0);
    CHECK(!b.all_roots_real);
    // (t-1)^2 (t+2): two distinct roots, all real
    Univar p = (t - Univar::constant(Rat(1))) * (t - Univar::constant(Rat(1))) *
               (t + Univar::constant(Rat(2)));
    auto c = count_real_roots(p);
    CHECK(c.distinct_count == 2);
    CHECK(c.all_roots_real);
    CHECK_THROWS_AS(count_real_roots(Univar()), InputError);
}

TEST_CASE("Sturm on constructed root multisets") {
    // c * prod (t - r_i)^{m_i} with known distinct roots; one (t^2+1)
    // factor must flip all_roots_real.
    SplitMix64 rng(14);
    Univar t{std::vector<Rat>{Rat(0), Rat(1)}};
    for (int i = 0; i < 40; ++i) {
        std::vector<Rat> roots;
        Univar p = Univar::constant(Rat(rng.range(1, 3)));
        int k = static_cast<int>(rng.range(1, 4));
        for (int j = 0; j < k; ++j) {
            Rat r(rng.range(-6, 6), rng.range(1, 3));
            int mult = static_cast<int>(rng.range(1, 3));
            bool fresh = true;
            for (const Rat& seen : roots)
                if (seen == r) fresh = false;
            if (fresh) roots.push_back(r);
            for (int m = 0; m < mult; ++m) p = p * (t - Univar::constant(r));
        }
        auto rc = count_real_roots(p);
        CHECK(rc.distinct_count == roots.size());
        CHECK(rc.all_roots_real);
        Univar q = p * (t * t + Univar::constant(Rat(1)));
        auto rq = count_real_roots(q);
        CHECK(rq.distinct_count == roots.size());
        CHECK(!rq.all_roots_real);
    }
}

TEST_CASE("sturm chain satisfies the negated remainder recurrence") {
    Univar t{std::vector<Rat>{Rat(0), Rat(1)}};
    Univar p = t * t * t - t * Rat(3) + Univar::constant(Rat(1));
    SturmChain chain = sturm_chain(p);
    REQUIRE(chain.seq.size() >= 3);
    for (std::size_t i = 2; i < chain.seq.size(); ++i)
        CHECK(divmod(chain.seq[i - 2], chain.seq[i - 1]).second == -chain.seq[i]);
}
