#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "recipmono/discriminant.hpp"
#include "recipmono/families.hpp"
#include "recipmono/monogenic.hpp"

using namespace recipmono;

namespace {

IntPoly P(const char* s) { return parse_poly(s); }

const char* kTen5 = "x^10+7x^8+16x^6+2x^5+16x^4+7x^2+1";
const char* kTen29 = "x^10+26x^8+73x^6+21x^5+73x^4+26x^2+1";

bool divides(const IntPoly& f, long p) { return dedekind_index_test(f, p) == IndexVerdict::DividesIndex; }

} // namespace

TEST_CASE("Dedekind test on classical examples")
{
    CHECK_FALSE(divides(P("x^2+1"), 2));
    CHECK(divides(P("x^2-5"), 2));
    CHECK(divides(P(kTen5), 5));
    CHECK(divides(P(kTen29), 29));
    CHECK_FALSE(divides(P("x^4+3x^3+5x^2+3x+1"), 3));
    // Z[cbrt(10)] has index 3 in its maximal order (10 = 1 mod 9)
    CHECK(divides(P("x^3-10"), 3));
    CHECK_FALSE(divides(P("x^3-2"), 3));
    CHECK_THROWS_AS(dedekind_index_test(P("2x^2+1"), 3), std::invalid_argument);
}

TEST_CASE("ideal-square membership")
{
    IdealSquareResult r = ideal_square_membership(P(kTen5), 5, P("x-1"));
    CHECK(r.member);
    CHECK(r.witness.recompose() == P(kTen5));

    r = ideal_square_membership(P(kTen29), 29, P("x-2"));
    CHECK(r.member);
    CHECK(r.witness.recompose() == P(kTen29));

    r = ideal_square_membership(P("x^2+1"), 2, P("x+1"));
    CHECK_FALSE(r.member);
    CHECK(r.witness.recompose() == P("x^2+1"));

    CHECK(ideal_square_membership(P("x^2-5"), 2, P("x+1")).member);
    CHECK_FALSE(ideal_square_membership(P("x^2-5"), 2, P("x^2+x+1")).member);
    CHECK_THROWS(ideal_square_membership(P("x^2+1"), 2, P("x^2+1")));
    CHECK_THROWS(ideal_square_membership(P("x^2+1"), 2, P("2x+1")));
}

TEST_CASE("the two routes to the index criterion agree")
{
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> deg(2, 6);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        IntPoly f = oracle::random_monic(rng, deg(rng), 5);
        const Integer d = discriminant(f);
        for (long p : {2L, 3L, 5L, 7L}) {
            if (d == 0 || d % (p * p) != 0) continue;
            const bool gcd_route = divides(f, p);
            const bool search_route = ideal_square_search(f, p, f.degree() / 2).has_value();
            CHECK(gcd_route == search_route);
            ++compared;
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("monogeneity decisions")
{
    MonogenicityReport rep = is_monogenic(P("x^4+3x^3+5x^2+3x+1"));
    CHECK(rep.verdict == Verdict::Monogenic);
    CHECK(rep.disc == 117);
    CHECK(rep.candidate_primes == std::vector<Integer>{3});
    CHECK(rep.index_primes.empty());
    CHECK(!ideal_square_search(P("x^4+3x^3+5x^2+3x+1"), 3, 2).has_value());

    rep = is_monogenic(P("x^2-5"));
    CHECK(rep.verdict == Verdict::NotMonogenic);
    CHECK(rep.index_primes == std::vector<Integer>{2});

    CHECK(is_monogenic(thm13_f(3)).verdict == Verdict::Monogenic);

    rep = is_monogenic(P("x^2"));
    CHECK(rep.verdict == Verdict::Unknown);
    CHECK(rep.disc == 0);
    CHECK_FALSE(rep.blocking.empty());

    // reducible polynomials are never called monogenic
    rep = is_monogenic(P("x^2+1") * P("x^2+3"));
    CHECK(rep.verdict != Verdict::Monogenic);
    CHECK(rep.irreducibility != IrreducibilityStatus::Irreducible);
    rep = is_monogenic(P("x^2+1") * P("x-3"));
    CHECK(rep.verdict != Verdict::Monogenic);
    CHECK(rep.irreducibility == IrreducibilityStatus::Reducible);

    // x^4 + 1: irreducibility cannot be proven by degree patterns
    rep = is_monogenic(P("x^4+1"));
    CHECK(rep.verdict == Verdict::Unknown);
}

TEST_CASE("report invariants on seeded polynomials")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> deg(2, 7);
    for (int trial = 0; trial < 150; ++trial) {
        IntPoly f = oracle::random_monic(rng, deg(rng), 12);
        MonogenicityReport rep = is_monogenic(f);
        for (const auto& p : rep.index_primes) {
            CHECK(std::find(rep.candidate_primes.begin(), rep.candidate_primes.end(), p) != rep.candidate_primes.end());
            CHECK(rep.disc % (p * p) == 0);
        }
        if (rep.verdict == Verdict::NotMonogenic) CHECK_FALSE(rep.index_primes.empty());
        if (rep.verdict == Verdict::Monogenic) {
            CHECK(rep.irreducibility == IrreducibilityStatus::Irreducible);
            CHECK(rep.index_primes.empty());
        }
        if (rep.disc != 0 && rep.irreducibility == IrreducibilityStatus::Irreducible &&
            is_squarefree_int(rep.disc).status == Squarefreeness::Squarefree)
            CHECK(rep.verdict == Verdict::Monogenic);
    }
}

TEST_CASE("index primes transfer from g to its reciprocal lift")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> deg(3, 5);
    int found = 0;
    for (int trial = 0; trial < 5000 && found < 50; ++trial) {
        IntPoly g = oracle::random_monic(rng, deg(rng), 10);
        const Integer d = discriminant(g);
        if (d == 0) continue;
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            if (d % (p * p) != 0 || !divides(g, p)) continue;
            CHECK(divides(half_to_reciprocal(g, g.degree()), p));
            ++found;
        }
    }
    CHECK(found >= 50);
}

TEST_CASE("reversal preserves the index primes")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> deg(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Integer> c = oracle::random_monic(rng, deg(rng), 8).coeffs();
        c[0] = 1;
        IntPoly f(c);
        CHECK(is_monogenic(f).index_primes == is_monogenic(reverse(f)).index_primes);
    }
}

TEST_CASE("sufficient test for reciprocal polynomials")
{
    IntPoly f = half_to_reciprocal(P("x^4+x^3-3x^2+26x+57"), 4);
    SufficientReport rep = sufficient_reciprocal_monogenic(f);
    CHECK(rep.verdict == SufficientVerdict::Inconclusive);
    CHECK(rep.f1_fm1 == 121);
    CHECK(rep.f1_fm1_status == Squarefreeness::NotSquarefree);
    CHECK(divides(f, 11));

    rep = sufficient_reciprocal_monogenic(P("x^6+3x^3+1"));
    CHECK(rep.verdict == SufficientVerdict::MonogenicProven);
    CHECK(rep.g == P("x^3-3x+3"));
    CHECK(rep.f1_fm1 == -5);

    // g = (u + 1)^2 is not separable
    rep = sufficient_reciprocal_monogenic(half_to_reciprocal(P("x^2+2x+1"), 2));
    CHECK(rep.verdict == SufficientVerdict::Inconclusive);
}

TEST_CASE("power-compositional corollary")
{
    IntPoly f = P("x^4+3x^3+5x^2+3x+1");
    PowerCompositionalReport rep = power_compositional_check(f, 3);
    CHECK(rep.verdict == SufficientVerdict::MonogenicProven);
    CHECK(rep.composed == compose_power(f, 3));
    rep = power_compositional_check(f, 9);
    CHECK(rep.verdict == SufficientVerdict::MonogenicProven);
    // whenever the corollary fires, the full decision agrees
    CHECK(is_monogenic(compose_power(f, 3)).verdict == Verdict::Monogenic);

    // x^2 + 5x + 1 composed with x^2 picks up 2 in its index
    rep = power_compositional_check(P("x^2+5x+1"), 2);
    CHECK(rep.verdict == SufficientVerdict::Inconclusive);
    CHECK_FALSE(rep.failing.empty());
}
