#include "recipmono/discriminant.hpp"

#include <stdexcept>
#include <utility>

#include "recipmono/families.hpp"

namespace recipmono {

namespace {

Integer ipow(const Integer& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    const int db = b.degree();
    const Integer& lb = b.leading();
    std::vector<Integer> r = a.coeffs();
    int dr = a.degree();
    int steps = 0;
    while (dr >= db) {
        Integer lr = r[dr];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) mpz_submul(r[dr - db + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
        ++steps;
        --dr;
        while (dr >= 0 && r[dr] == 0) --dr;
    }
    r.resize(static_cast<std::size_t>(dr + 1));
    IntPoly rem(std::move(r));
    const int missing = a.degree() - db + 1 - steps;
    if (missing > 0) rem *= ipow(lb, static_cast<unsigned long>(missing));
    return rem;
}

} // namespace

Integer resultant(const IntPoly& p, const IntPoly& q)
{
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    IntPoly a = p, b = q;
    Integer ca = content(a), cb = content(b);
    a = divide_exact(a, ca);
    b = divide_exact(b, cb);
    Integer t = ipow(ca, static_cast<unsigned long>(q.degree())) * ipow(cb, static_cast<unsigned long>(p.degree()));
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
    }
    if (b.degree() == 0) return s * t * ipow(b[0], static_cast<unsigned long>(a.degree()));

    Integer g = 1, h = 1;
    for (;;) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        b = divide_exact(r, g * ipow(h, static_cast<unsigned long>(delta)));
        g = a.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            h = ipow(g, static_cast<unsigned long>(delta)) / ipow(h, static_cast<unsigned long>(delta - 1));
        }
        if (b.degree() == 0) break;
    }
    const unsigned long da = static_cast<unsigned long>(a.degree());
    h = ipow(b.leading(), da) / ipow(h, da - 1);
    return s * t * h;
}

Integer discriminant(const IntPoly& f)
{
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (n == 1) return 1;
    Integer res = resultant(f, derivative(f));
    Integer d = res / f.leading();
    if ((static_cast<long>(n) * (n - 1) / 2) & 1) d = -d;
    return d;
}

DiscriminantReport discriminant_report(const IntPoly& f, const FactorEffort& effort)
{
    DiscriminantReport rep;
    rep.poly = f;
    rep.disc = discriminant(f);
    rep.factorization = factor_int(rep.disc, effort);
    for (const auto& pp : rep.factorization.factors)
        if (pp.exponent >= 2) rep.square_divisor_primes.push_back(pp.prime);
    return rep;
}

IdentityCheck lemma_disc_identity(const IntPoly& f)
{
    if (!f.is_monic()) throw std::invalid_argument("lemma_disc_identity: polynomial must be monic");
    IntPoly g = reciprocal_to_half(f);
    const int n = g.degree();
    IdentityCheck out;
    out.lhs = discriminant(f);
    Integer dg = discriminant(g);
    out.rhs = evaluate(f, Integer(1)) * evaluate(f, Integer(-1)) * dg * dg;
    if (n & 1) out.rhs = -out.rhs; // (-1)^(n(2n-1)) == (-1)^n
    out.holds = out.lhs == out.rhs;
    return out;
}

IdentityCheck conjecture_disc_identity(unsigned long q, unsigned a, const Integer& r, const Integer& t)
{
    if (a > 1) throw std::invalid_argument("conjecture_disc_identity: a must be 0 or 1");
    FamilyParams params{q, a, 1, r, t};
    IntPoly big = build_F(params);
    IntPoly half = build_ga(q, a, r, t);
    const Integer qq = q;
    const Integer s = ((q - 1) / 2) % 2 == 0 ? 1 : -1;
    Integer dg = discriminant(half);
    IdentityCheck out;
    out.lhs = discriminant(big);
    if (a == 0)
        out.rhs = qq * (4 * qq * r * t + 1) * (4 * qq * qq * r * t + s) * dg * dg;
    else
        out.rhs = qq * (4 * qq * r * t + s) * (4 * qq * qq * r * t + 1) * dg * dg;
    out.holds = out.lhs == out.rhs;
    return out;
}

} // namespace recipmono
