#ifndef RECIPMONO_ARITHFACTOR_HPP
#define RECIPMONO_ARITHFACTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "recipmono/polycore.hpp"

namespace recipmono {

/* Work limits for factor_int.  The defaults fully factor every |n| up to
 * about 1e30, which covers all values the families module produces. */
struct FactorEffort {
    unsigned long trial_bound = 1ul << 16;
    std::uint64_t rho_iterations = 1ull << 22; // per attempt
    unsigned rho_attempts = 12;
};

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/* sign * prod(p^e) * cofactor == n.  Primes are strictly increasing.  A
 * cofactor > 1 is an unsplit remainder (composite, or at least not proven
 * prime); it is never a known prime. */
struct IntFactorization {
    int sign = 0;
    std::vector<PrimePower> factors;
    Integer cofactor = 1;

    bool complete() const { return cofactor == 1; }
    Integer value() const;
    unsigned exponent_of(const Integer& p) const;
};

IntFactorization factor_int(const Integer& n, const FactorEffort& effort = {});

/// Largest bound below which is_prime is deterministic.
extern const Integer kDeterministicPrimalityBound;

/* Strong probable prime test on the primes 2..41 as witnesses, which is a
 * proof of primality for n < 3.3e24 (n < 2 is never prime).  Above that
 * bound the answer is probabilistic (a further 25 GMP rounds are added). */
bool is_prime(const Integer& n);

enum class Squarefreeness { Squarefree, NotSquarefree, Unknown };

struct SquarefreeResult {
    Squarefreeness status = Squarefreeness::Unknown;
    /// A prime whose square divides n, when one is known.
    std::optional<Integer> witness;
};

/// Decided on |n|: 0 is not squarefree, +-1 is.
SquarefreeResult is_squarefree_int(const Integer& n, const FactorEffort& effort = {});

/// Primes in [2, bound] by an Eratosthenes sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

const char* to_string(Squarefreeness s);

} // namespace recipmono

#endif
