#ifndef RECIPMONO_GALOIS_HPP
#define RECIPMONO_GALOIS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "recipmono/modpoly.hpp"
#include "recipmono/polycore.hpp"

namespace recipmono {

enum class SquareStatus { Square, NotSquare };

SquareStatus disc_is_square(const Integer& n);

struct CycleSample {
    std::uint64_t p = 0;
    std::vector<int> degrees; // sorted factor degrees, i.e. the cycle type
};

enum class GaloisConclusion { ProvenGroup, Constraint, Inconclusive };

struct GaloisEvidence {
    IntPoly poly;
    Integer disc;
    IrreducibilityStatus irreducibility = IrreducibilityStatus::Unknown;
    std::vector<CycleSample> samples;
    std::vector<std::uint64_t> skipped_primes; // divide Delta(f)
    SquareStatus disc_square = SquareStatus::NotSquare;
    GaloisConclusion conclusion = GaloisConclusion::Inconclusive;
    std::string group;              // set for ProvenGroup
    std::vector<std::string> facts; // what the evidence establishes

    /// Distinct cycle types seen, sorted.
    std::vector<std::vector<int>> cycle_types() const;
};

/* Reduces f modulo the first `prime_budget` primes not dividing Delta(f)
 * and records each factor-degree pattern (a cycle type occurring in
 * Gal(f)).  Throws std::domain_error if Delta(f) = 0. */
GaloisEvidence cycle_type_scan(const IntPoly& f, unsigned prime_budget = 50);

/* Full decision for degree 5: transitive (irreducible) plus a 3-cycle and
 * a 5-cycle gives A5 or S5, split by whether Delta is a square; a
 * transposition with transitivity also forces S5. */
GaloisEvidence quintic_galois(const IntPoly& g, unsigned prime_budget = 50);

const char* to_string(SquareStatus s);
const char* to_string(GaloisConclusion c);

} // namespace recipmono

#endif
