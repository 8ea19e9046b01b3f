#ifndef RECIPMONO_FAMILIES_HPP
#define RECIPMONO_FAMILIES_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recipmono/arithfactor.hpp"
#include "recipmono/monogenic.hpp"
#include "recipmono/polycore.hpp"

namespace recipmono {

/* Parameters of the perturbed cyclotomic family
 *   F_{N,t}(x) = Phi_N(x) + 4 r q^2 t x^(phi(N)/2),   N = 2^a q^b. */
struct FamilyParams {
    unsigned long q = 3;
    unsigned a = 0;
    unsigned b = 1;
    Integer r = 1;
    Integer t = 0;

    unsigned long N() const;
    unsigned long phi() const;
};

IntPoly build_F(const FamilyParams& params);

/// Closed-form half-degree companion of F_{2^a q, t}, a in {0, 1}.
IntPoly build_ga(unsigned long q, unsigned a, const Integer& r, const Integer& t);

// Degree-10 family and its quintic companion.
IntPoly thm13_f(const Integer& p);
IntPoly thm13_g(const Integer& p);
/// h(y) = (8y + 11)(8192y^5 + 125008y^4 + 156112y^3 - 139876y^2 - 15972y + 14641)
IntPoly thm13_h();
/// The quintic factor of h, which is |Delta(g_A)|.
IntPoly thm13_quintic_factor();

struct Thm13Member {
    IntPoly f;
    IntPoly g;
    Integer h_value;
};

Thm13Member thm13_family(const Integer& p);

struct Thm13Row {
    std::uint64_t p = 0;
    Integer h_value;
    Squarefreeness h_status = Squarefreeness::Unknown;
    Verdict f_verdict = Verdict::Unknown;
    Verdict g_verdict = Verdict::Unknown;
};

struct Thm13Scan {
    std::vector<Thm13Row> accepted; // h(p) squarefree
    std::vector<Thm13Row> rejected; // everything else, verdicts included
};

/// Every prime p <= pmax, with full monogenicity runs on f_p and g_p.
Thm13Scan thm13_prime_scan(std::uint64_t pmax, unsigned jobs = 0, const FactorEffort& effort = {});

// Sextic family f_a and its cubic companion.
IntPoly sextic_f(const Integer& a);
IntPoly sextic_g(const Integer& a);
/// H(x) = (4x^2 + 20x - 7)(8x + 7)
IntPoly sextic_H();

struct SexticMember {
    IntPoly f;
    IntPoly g;
    Integer H_value;
};

SexticMember sextic_family(const Integer& a);

enum class CountDefinition { L_f, M_H, N_H };
enum class LfMode { LemmaFilter, FullDecision };
/// symmetric: |a| <= N.  positive: 1 <= a <= N.
enum class CountRange { Symmetric, Positive };

struct CountReport {
    CountDefinition definition = CountDefinition::L_f;
    std::int64_t bound = 0;
    std::int64_t count = 0;
    /// Candidates whose status could not be decided (not counted).
    std::int64_t undecided = 0;
    std::optional<std::vector<std::int64_t>> witnesses;
};

struct SweepOptions {
    unsigned jobs = 0; // 0: hardware concurrency
    bool keep_witnesses = false;
    /// Resumable state, rewritten after every block of 1000 candidates.
    std::optional<std::filesystem::path> checkpoint;
    FactorEffort effort{};
};

CountReport count_LF(std::int64_t N, LfMode mode, CountRange range = CountRange::Symmetric,
                     const SweepOptions& options = {});
/// #{1 <= a <= X : F(a) squarefree}
CountReport count_MH(std::int64_t X, const IntPoly& F, const SweepOptions& options = {});
/// #{primes a <= X : F(a) squarefree}
CountReport count_NH(std::int64_t X, const IntPoly& F, const SweepOptions& options = {});

/// Number of units z mod r^2 with f(z) = 0 mod r^2, by exhaustion.
std::uint64_t rho_f_r2(const IntPoly& f, std::uint64_t r);

struct DensityRow {
    std::uint64_t r = 0;
    std::uint64_t rho = 0;
    bool obstruction = false;
    /// Smallest unit z in [1, r^2) with f(z) != 0 mod r^2.
    std::optional<std::uint64_t> witness;
};

struct DensityReport {
    IntPoly poly;
    std::uint64_t bound = 0;
    std::vector<DensityRow> rows;
    /// prod over scanned r of (1 - rho/(r(r-1))), exact.
    Rational partial_product;
    std::vector<std::uint64_t> obstruction_primes;
};

DensityReport local_obstruction_scan(const IntPoly& f, std::uint64_t B);

const char* to_string(CountDefinition d);

} // namespace recipmono

#endif
