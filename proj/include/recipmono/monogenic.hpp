#ifndef RECIPMONO_MONOGENIC_HPP
#define RECIPMONO_MONOGENIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recipmono/arithfactor.hpp"
#include "recipmono/modpoly.hpp"
#include "recipmono/polycore.hpp"

namespace recipmono {

enum class IndexVerdict { DividesIndex, DoesNotDivideIndex };

/* Dedekind's criterion at p for monic f: with f = prod g_i^e_i mod p, G the
 * lifted radical and H the lift of f/G, p | ind(f) iff
 * gcd(((G H - f)/p) mod p, G, H) is nonconstant.  Throws
 * std::invalid_argument for non-monic f. */
IndexVerdict dedekind_index_test(const IntPoly& f, const Integer& p);

/* f = Q h^2 + A h + B with deg A, deg B < deg h.  f lies in <p, h>^2 exactly
 * when p | A and p^2 | B. */
struct IdealSquareWitness {
    Integer p;
    IntPoly h;
    IntPoly quotient;  // Q
    IntPoly linear;    // A
    IntPoly constant;  // B

    /// Q h^2 + A h + B
    IntPoly recompose() const;
};

struct IdealSquareResult {
    bool member = false;
    IdealSquareWitness witness; // populated either way; decides membership
};

/// Throws std::invalid_argument if h is not monic and irreducible mod p.
IdealSquareResult ideal_square_membership(const IntPoly& f, const Integer& p, const IntPoly& h);

/* Exhaustive form of the index test: tries every monic h of degree
 * 1..max_degree with coefficients in [0, p) that is irreducible mod p.
 * Returns the first member found. */
std::optional<IdealSquareWitness> ideal_square_search(const IntPoly& f, std::uint64_t p, int max_degree);

enum class Verdict { Monogenic, NotMonogenic, Unknown };

struct MonogenicityReport {
    IntPoly poly;
    IrreducibilityStatus irreducibility = IrreducibilityStatus::Unknown;
    Integer disc;
    bool factorization_complete = true;
    /// Primes p with p^2 | disc, increasing.
    std::vector<Integer> candidate_primes;
    /// Candidates proven to divide ind(f).
    std::vector<Integer> index_primes;
    std::map<Integer, IndexVerdict> per_prime_detail;
    Verdict verdict = Verdict::Unknown;
    /// Why the verdict is Unknown; empty otherwise.
    std::vector<std::string> blocking;
};

MonogenicityReport is_monogenic(const IntPoly& f, const FactorEffort& effort = {});

enum class SufficientVerdict { MonogenicProven, Inconclusive };

struct SufficientReport {
    SufficientVerdict verdict = SufficientVerdict::Inconclusive;
    IrreducibilityStatus irreducibility = IrreducibilityStatus::Unknown;
    Integer f1_fm1; // f(1) f(-1)
    Squarefreeness f1_fm1_status = Squarefreeness::Unknown;
    IntPoly g;
    MonogenicityReport g_report;
    /// Conditions that failed or could not be established.
    std::vector<std::string> failing;
};

/* The two sufficient conditions for a monic reciprocal f of degree 2n:
 * f(1)f(-1) squarefree and g monogenic.  Never concludes non-monogenic. */
SufficientReport sufficient_reciprocal_monogenic(const IntPoly& f, const FactorEffort& effort = {});

struct PowerCompositionalReport {
    SufficientVerdict verdict = SufficientVerdict::Inconclusive;
    unsigned k = 2;
    IntPoly composed; // f(x^k)
    IrreducibilityStatus composed_irreducibility = IrreducibilityStatus::Unknown;
    SufficientReport base;
    std::map<Integer, IndexVerdict> k_prime_detail; // primes p | k
    std::vector<std::string> failing;
};

PowerCompositionalReport power_compositional_check(const IntPoly& f, unsigned k, const FactorEffort& effort = {});

const char* to_string(IndexVerdict v);
const char* to_string(Verdict v);
const char* to_string(SufficientVerdict v);

} // namespace recipmono

#endif
