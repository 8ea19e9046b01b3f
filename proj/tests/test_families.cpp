#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "recipmono/discriminant.hpp"
#include "recipmono/families.hpp"

using namespace recipmono;

namespace {

IntPoly P(const char* s) { return parse_poly(s); }

const std::vector<std::uint64_t> kPaperPrimes{3, 5, 7, 13, 19, 37, 41, 43, 53, 61, 67, 71, 73, 79, 89, 97};

} // namespace

TEST_CASE("perturbed cyclotomic family")
{
    CHECK(build_F({5, 0, 1, 2, 1}) == P("x^4+x^3+201x^2+x+1"));
    CHECK(build_F({7, 0, 1, 1, 0}) == cyclotomic_2aqb(7, 0, 1));
    CHECK(build_F({3, 1, 1, 1, 1}) == P("x^2+35x+1"));
    CHECK(FamilyParams{3, 2, 2, 1, 0}.N() == 36);
    CHECK_THROWS(build_F({9, 0, 1, 1, 1}));
    CHECK_THROWS(build_F({5, 0, 1, 0, 1}));
}

TEST_CASE("half-degree companion of the family")
{
    CHECK(build_ga(3, 0, 1, 0) == P("x+1"));
    CHECK(build_ga(5, 0, 1, 0) == P("x^2+x-1"));
    CHECK(build_ga(3, 1, 1, 1) == P("x+35"));
    for (unsigned long q : {3ul, 5ul, 7ul, 11ul, 13ul})
        for (unsigned a = 0; a <= 1; ++a)
            for (long r : {1L, -2L, 3L})
                for (long t = -5; t <= 5; ++t)
                    CHECK(build_ga(q, a, r, t) == reciprocal_to_half(build_F({q, a, 1, r, t})));
}

TEST_CASE("values at 1 and -1 match the closed forms")
{
    for (unsigned long q : {3ul, 5ul, 7ul, 11ul})
        for (long t = -5; t <= 5; ++t) {
            const Integer Q = q;
            IntPoly F = build_F({q, 0, 1, 1, t});
            CHECK(evaluate(F, Integer(1)) == Q * (4 * Q * t + 1));
            const Integer sign = ((q - 1) / 2) % 2 ? -1 : 1;
            CHECK(evaluate(F, Integer(-1)) == 1 + sign * 4 * Q * Q * t);
        }
}

TEST_CASE("degree-10 family members")
{
    Thm13Member m = thm13_family(3);
    CHECK(m.f == P("x^10+x^9+x^8+x^7+7x^6+13x^5+7x^4+x^3+x^2+x+1"));
    CHECK(m.g == P("x^5+x^4-4x^3-3x^2+9x+13"));
    CHECK(reciprocal_to_half(m.f) == m.g);
    CHECK(evaluate(thm13_h(), Integer(1)) == Integer(5) * 19 * 19 * 1559);
    CHECK(evaluate(thm13_h(), Integer(2)) == Integer(27) * 2934361);
}

TEST_CASE("prime scan up to 100")
{
    Thm13Scan scan = thm13_prime_scan(100, 2);
    std::vector<std::uint64_t> got;
    for (const auto& row : scan.accepted) {
        got.push_back(row.p);
        CHECK(row.f_verdict == Verdict::Monogenic);
        CHECK(row.g_verdict == Verdict::Monogenic);
        CHECK(oracle::trial_squarefree(row.h_value) == true);
    }
    CHECK(got == kPaperPrimes);
    CHECK(scan.accepted.size() + scan.rejected.size() == 25);
    // p = 2 fails the squarefree filter
    CHECK(thm13_prime_scan(2, 1).accepted.empty());
    // job count does not change the answer
    Thm13Scan serial = thm13_prime_scan(100, 1);
    REQUIRE(serial.accepted.size() == scan.accepted.size());
    for (std::size_t i = 0; i < serial.accepted.size(); ++i) CHECK(serial.accepted[i].p == scan.accepted[i].p);
}

TEST_CASE("discriminants of the degree-10 family")
{
    const IntPoly quintic = thm13_quintic_factor();
    for (long A = -50; A <= 50; A += 7) {
        const Integer q = evaluate(quintic, Integer(A));
        CHECK(abs(discriminant(thm13_f(A))) == abs(Integer(8 * A + 11) * q * q));
        CHECK(abs(discriminant(thm13_g(A))) == abs(q));
    }
    CHECK(discriminant(thm13_f(0)) == -2357947691);
    CHECK(discriminant(thm13_g(0)) == 14641);
}

TEST_CASE("sextic family")
{
    SexticMember m = sextic_family(1);
    CHECK(m.H_value == 255);
    CHECK(m.f == P("x^6+x^5+3x^4+5x^3+3x^2+x+1"));
    CHECK(m.g == P("x^3+x^2+3"));
    CHECK(reciprocal_to_half(m.f) == m.g);
    CHECK(sextic_family(0).H_value == -49);
    for (long a = -20; a <= 20; ++a) {
        const Integer H = evaluate(sextic_H(), Integer(a));
        const Integer u = 4 * a * a + 20 * a - 7, v = 8 * a + 7;
        CHECK(abs(discriminant(sextic_g(a))) == abs(H));
        CHECK(discriminant(sextic_f(a)) == -u * u * v * v * v);
        CHECK(half_to_reciprocal(sextic_g(a), 3) == sextic_f(a));
    }
}

TEST_CASE("counting functions")
{
    CountReport lf = count_LF(1, LfMode::LemmaFilter);
    CHECK(lf.count == 2);
    CHECK(count_LF(1, LfMode::LemmaFilter, CountRange::Positive).count == 1);

    SweepOptions keep;
    keep.keep_witnesses = true;
    keep.jobs = 2;
    CountReport lemma = count_LF(150, LfMode::LemmaFilter, CountRange::Symmetric, keep);
    CountReport full = count_LF(150, LfMode::FullDecision, CountRange::Symmetric, keep);
    REQUIRE(lemma.witnesses);
    REQUIRE(full.witnesses);
    CHECK(static_cast<std::int64_t>(lemma.witnesses->size()) == lemma.count);
    // a = -1 passes the squarefree filter (H(-1) = 23) yet f_{-1} splits into
    // two cubics, so the filter overcounts by exactly that one value here
    std::vector<std::int64_t> extra;
    std::set_difference(lemma.witnesses->begin(), lemma.witnesses->end(), full.witnesses->begin(),
                        full.witnesses->end(), std::back_inserter(extra));
    CHECK(extra == std::vector<std::int64_t>{-1});
    CHECK(sextic_f(-1) == P("x^3-x-1") * P("x^3+x^2-1"));
    CHECK(full.undecided == 1);
    CountReport lemma_pos = count_LF(150, LfMode::LemmaFilter, CountRange::Positive, keep);
    CountReport full_pos = count_LF(150, LfMode::FullDecision, CountRange::Positive, keep);
    CHECK(lemma_pos.count <= full_pos.count);
    CHECK(std::includes(full_pos.witnesses->begin(), full_pos.witnesses->end(), lemma_pos.witnesses->begin(),
                        lemma_pos.witnesses->end()));
    for (auto a : *lemma.witnesses) CHECK(oracle::trial_squarefree(evaluate(sextic_H(), Integer(a))));

    const IntPoly H = sextic_H();
    CHECK(count_NH(1, H).count == 0);
    CHECK(oracle::trial_squarefree(evaluate(H, Integer(2))) == false);
    std::int64_t expect = 0;
    for (std::uint64_t p : {3ull, 5ull, 7ull})
        if (oracle::trial_squarefree(evaluate(H, Integer(static_cast<unsigned long>(p))))) ++expect;
    CHECK(count_NH(10, H).count == expect);

    std::int64_t prev_m = 0, prev_n = 0;
    for (std::int64_t X = 1; X <= 300; X += 23) {
        CountReport m = count_MH(X, H), n = count_NH(X, H);
        CHECK(m.count >= n.count);
        CHECK(m.count >= prev_m);
        CHECK(n.count >= prev_n);
        prev_m = m.count;
        prev_n = n.count;
    }
    CHECK_THROWS(count_MH(0, H));
}

TEST_CASE("checkpointed sweeps resume to the same answer")
{
    const auto path = std::filesystem::temp_directory_path() / "recipmono_test_checkpoint.json";
    std::filesystem::remove(path);
    SweepOptions opts;
    opts.checkpoint = path;
    opts.jobs = 3;
    CountReport first = count_MH(2500, sextic_H(), opts);
    REQUIRE(std::filesystem::exists(path));
    nlohmann::json j;
    std::ifstream(path) >> j;
    CHECK(j["completed-through"] == 2500);
    CHECK(j["partial-counts"]["count"] == first.count);
    CHECK(j.contains("range"));

    // simulate an interruption after the first block
    j["completed-through"] = 1000;
    j["partial-counts"]["count"] = count_MH(1000, sextic_H()).count;
    std::ofstream(path) << j.dump();
    CHECK(count_MH(2500, sextic_H(), opts).count == first.count);
    CHECK(count_MH(2500, sextic_H()).count == first.count);

    // a checkpoint for a different range is ignored
    CHECK(count_MH(1200, sextic_H(), opts).count == count_MH(1200, sextic_H()).count);
    std::filesystem::remove(path);
}

TEST_CASE("local densities")
{
    CHECK(rho_f_r2(P("x"), 5) == 0);
    CHECK(rho_f_r2(P("x^2-1"), 2) == oracle::brute_rho(P("x^2-1"), 2));
    CHECK(rho_f_r2(P("x^2-1"), 2) == 2);
    CHECK_THROWS(rho_f_r2(P("x"), 4));

    const IntPoly h = thm13_h();
    CHECK(rho_f_r2(h, 19) >= 1);
    CHECK(evaluate(h, Integer(1)) % 361 == 0);
    CHECK(evaluate(h, Integer(2)) % 361 != 0);

    for (std::uint64_t r : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (const IntPoly& f : {h, sextic_H(), P("x^2-1"), P("x^4+x^3+x^2+x+1")}) {
            const auto rho = rho_f_r2(f, r);
            CHECK(rho == oracle::brute_rho(f, r));
            CHECK(rho <= std::min(r * (r - 1), r * static_cast<std::uint64_t>(f.degree())));
        }
    }
}

TEST_CASE("obstruction scan")
{
    DensityReport rep = local_obstruction_scan(thm13_h(), 100);
    CHECK(rep.obstruction_primes.empty());
    CHECK(rep.partial_product > 0);
    CHECK(rep.partial_product <= 1);
    for (const auto& row : rep.rows)
        if (row.r == 19) {
            REQUIRE(row.witness);
            CHECK(*row.witness == 2);
        }

    rep = local_obstruction_scan(sextic_H(), 100);
    CHECK(rep.obstruction_primes.empty());
    CHECK(rep.partial_product > 0);

    // (x^2 - x)^2 + 4 vanishes mod 4 at every odd z
    rep = local_obstruction_scan(P("x^4-2x^3+x^2+4"), 10);
    CHECK(rep.obstruction_primes == std::vector<std::uint64_t>{2});
    CHECK(rep.partial_product == 0);
}
