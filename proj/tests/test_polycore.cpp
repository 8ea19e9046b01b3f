#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "recipmono/polycore.hpp"

using namespace recipmono;

namespace {
IntPoly P(const char* s) { return parse_poly(s); }
}

TEST_CASE("canonical form and basic arithmetic")
{
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly{1, 2, 0}.degree() == 1);
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly{1, 1} * IntPoly{-1, 1} == P("x^2-1"));
    CHECK(IntPoly{1, 1} - IntPoly{1, 1} == IntPoly());
    CHECK(evaluate(P("x^6+3x^3+1"), Integer(1)) == 5);
    CHECK(derivative(P("x^3-3x+3")) == P("3x^2-3"));
    CHECK(content(P("6x^2-4x+10")) == 2);
    CHECK(content(P("-6x^2-4x")) == 2);
    CHECK(power(IntPoly{1, 1}, 3) == P("x^3+3x^2+3x+1"));
    CHECK(compose(P("x^2+1"), P("x+1")) == P("x^2+2x+2"));
}

TEST_CASE("divrem by a monic divisor")
{
    IntPoly a = P("3x^5-2x^3+x-7"), b = P("x^2+x+2");
    DivRem dr = divrem_monic(a, b);
    CHECK(dr.remainder.degree() < b.degree());
    CHECK(dr.quotient * b + dr.remainder == a);
    CHECK_THROWS_AS(divrem_monic(a, IntPoly()), std::domain_error);
    CHECK_THROWS_AS(divrem_monic(a, P("2x+1")), std::invalid_argument);
    CHECK(divrem_monic(IntPoly{5}, IntPoly{1}).quotient == IntPoly{5});
}

TEST_CASE("big coefficients are not truncated")
{
    IntPoly f = parse_poly("[\"123456789012345678901234567890\",\"1\"]");
    CHECK(f[0] == Integer("123456789012345678901234567890"));
    CHECK((f * f)[0] == Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("reciprocal predicate and reversal")
{
    CHECK(is_reciprocal(P("x^4+3x^3+5x^2+3x+1")));
    CHECK_FALSE(is_reciprocal(P("x^2+2x+3")));
    CHECK(is_reciprocal(IntPoly{7}));
    CHECK(reverse(P("x^3+2x^2+3x+4")) == P("4x^3+3x^2+2x+1"));
    CHECK(reverse(P("x^4+3x^3+5x^2+3x+1")) == P("x^4+3x^3+5x^2+3x+1"));
    CHECK(reverse(P("x^3+x^2+2x+1")) == P("x^3+2x^2+x+1"));
    CHECK_THROWS_AS(reverse(P("x^3+x")), std::invalid_argument);
}

TEST_CASE("chebyshev table")
{
    CHECK(chebyshev_c(0) == IntPoly{2});
    CHECK(chebyshev_c(1) == P("x"));
    CHECK(chebyshev_c(2) == P("x^2-2"));
    CHECK(chebyshev_c(3) == P("x^3-3x"));
    for (std::size_t j = 1; j <= 12; ++j) {
        CHECK(chebyshev_c(j).degree() == static_cast<int>(j));
        CHECK(chebyshev_c(j).is_monic());
    }
}

TEST_CASE("C_j(z + 1/z) = z^j + z^-j at rational points")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
    for (int trial = 0; trial < 20; ++trial) {
        long n = num(rng);
        if (n == 0) n = 3;
        Rational z(n, den(rng));
        z.canonicalize();
        Rational zj = 1;
        for (std::size_t j = 0; j <= 12; ++j) {
            CHECK(evaluate(chebyshev_c(j), z + Rational(1) / z) == zj + Rational(1) / zj);
            zj *= z;
        }
    }
}

TEST_CASE("reciprocal to half-degree companion")
{
    CHECK(reciprocal_to_half(P("x^4+3x^3+5x^2+3x+1")) == P("x^2+3x+3"));
    CHECK(reciprocal_to_half(P("x^6+3x^3+1")) == P("x^3-3x+3"));
    CHECK(reciprocal_to_half(P("x^10+x^9+x^8+x^7+7x^6+13x^5+7x^4+x^3+x^2+x+1")) ==
          P("x^5+x^4-4x^3-3x^2+9x+13"));
    CHECK_THROWS_AS(reciprocal_to_half(P("x^4+2x^3+1")), std::invalid_argument);
    CHECK_THROWS_AS(reciprocal_to_half(P("x^3+x^2+x+1")), std::invalid_argument);
    CHECK_FALSE(reciprocal_to_half(P("2x^4+x^2+2")).is_monic());
}

TEST_CASE("half-degree companion to reciprocal")
{
    CHECK(half_to_reciprocal(P("x^2+3x+3"), 2) == P("x^4+3x^3+5x^2+3x+1"));
    CHECK(half_to_reciprocal(P("x^3-3x+3"), 3) == P("x^6+3x^3+1"));
    CHECK(half_to_reciprocal(P("x^3+x^2-2x-1"), 3) == P("x^6+x^5+x^4+x^3+x^2+x+1"));
    CHECK_THROWS_AS(half_to_reciprocal(P("x^2+1"), 3), std::invalid_argument);
}

TEST_CASE("transform properties on seeded samples")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> deg(1, 12);
    std::uniform_int_distribution<long> x0(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = deg(rng);
        IntPoly g = oracle::random_monic(rng, n, 30);
        IntPoly f = half_to_reciprocal(g, n);
        REQUIRE(f.degree() == 2 * n);
        CHECK(is_reciprocal(f));
        CHECK(reciprocal_to_half(f) == g);
        long x = x0(rng);
        if (x == 0) x = 1;
        CHECK(Rational(evaluate(f, Integer(x))) == oracle::transform_at(g, n, Rational(x)));

        IntPoly r = oracle::random_monic_reciprocal(rng, 2 * n, 50);
        CHECK(half_to_reciprocal(reciprocal_to_half(r), n) == r);
        CHECK(reverse(reverse(r)) == r);
    }
}

TEST_CASE("compose_power")
{
    CHECK(compose_power(P("x^2+1"), 3) == P("x^6+1"));
    CHECK(compose_power(P("x^4+3x^3+5x^2+3x+1"), 3) == P("x^12+3x^9+5x^6+3x^3+1"));
    CHECK(compose_power(P("x^3-x+2"), 1) == P("x^3-x+2"));
}

TEST_CASE("cyclotomic polynomials of index 2^a q^b")
{
    CHECK(cyclotomic_2aqb(3, 0, 1) == P("x^2+x+1"));
    CHECK(cyclotomic_2aqb(5, 1, 1) == P("x^4-x^3+x^2-x+1"));
    CHECK(cyclotomic_2aqb(3, 0, 2) == P("x^6+x^3+1"));
    CHECK(cyclotomic_2aqb(3, 2, 1) == P("x^4-x^2+1"));
    CHECK_THROWS(cyclotomic_2aqb(9, 0, 1));
    CHECK_THROWS(cyclotomic_2aqb(2, 0, 1));
    for (unsigned long q : {3ul, 5ul, 7ul, 11ul})
        for (unsigned a = 0; a <= 3; ++a)
            for (unsigned b = 1; b <= 2; ++b) {
                IntPoly phi = cyclotomic_2aqb(q, a, b);
                CHECK(phi.degree() == static_cast<int>(phi_2aqb(q, a, b)));
                CHECK(is_reciprocal(phi));
                // x^N - 1 is divisible by Phi_N
                unsigned long N = (1ul << a);
                for (unsigned i = 0; i < b; ++i) N *= q;
                if (N > 400) continue;
                IntPoly xn = IntPoly::monomial(1, N) - IntPoly{1};
                CHECK(divrem_monic(xn, phi).remainder.is_zero());
            }
}

TEST_CASE("text formats")
{
    IntPoly f = P("x^4+3x^3+5x^2+3x+1");
    CHECK(to_json_array(f) == "[\"1\",\"3\",\"5\",\"3\",\"1\"]");
    CHECK(parse_poly(to_json_array(f)) == f);
    CHECK(parse_poly("[1, -2, 0, 4]") == IntPoly{1, -2, 0, 4});
    CHECK(P("-x^2 + 2*x - 7") == IntPoly{-7, 2, -1});
    CHECK(P("u^3-3u+3") == IntPoly{3, -3, 0, 1});
    CHECK(P("5") == IntPoly{5});
    CHECK(P("x^2+x^2") == IntPoly{0, 0, 2});
    CHECK(to_string(P("x^4-x+1")) == "x^4-x+1");
    CHECK(to_string(IntPoly()) == "0");
    for (const char* bad : {"", "x^", "x^^2", "2x+y", "[1,", "[\"a\"]", "x+*3", "3 4"})
        CHECK_THROWS_AS(parse_poly(bad), std::invalid_argument);
}
