#ifndef RECIPMONO_DISCRIMINANT_HPP
#define RECIPMONO_DISCRIMINANT_HPP

#include <vector>

#include "recipmono/arithfactor.hpp"
#include "recipmono/polycore.hpp"

namespace recipmono {

/// Res(p, q) by the subresultant polynomial remainder sequence.
/// Throws std::invalid_argument if either input is zero.
Integer resultant(const IntPoly& p, const IntPoly& q);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f); 1 for linear f.  Requires deg f >= 1.
Integer discriminant(const IntPoly& f);

struct DiscriminantReport {
    IntPoly poly;
    Integer disc;
    IntFactorization factorization;
    /// Primes p with p^2 | disc, among the primes found by factorization.
    std::vector<Integer> square_divisor_primes;
};

DiscriminantReport discriminant_report(const IntPoly& f, const FactorEffort& effort = {});

/// Both sides of an exact identity, so a failure shows which side moved.
struct IdentityCheck {
    bool holds = false;
    Integer lhs;
    Integer rhs;
};

/* Delta(f) against (-1)^(n(2n-1)) f(1) f(-1) Delta(g)^2 where g is the
 * half-degree companion of the monic reciprocal f of degree 2n. */
IdentityCheck lemma_disc_identity(const IntPoly& f);

/* Delta(F_{2^a q, t}) against the closed form
 *   a = 0:  q (4qrt + 1)(4q^2 rt + s) Delta(g_0)^2
 *   a = 1:  q (4qrt + s)(4q^2 rt + 1) Delta(g_1)^2,   s = (-1)^((q-1)/2).
 * The comparison is exact, sign included. */
IdentityCheck conjecture_disc_identity(unsigned long q, unsigned a, const Integer& r, const Integer& t);

} // namespace recipmono

#endif
