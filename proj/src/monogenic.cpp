#include "recipmono/monogenic.hpp"

#include <stdexcept>

#include "recipmono/discriminant.hpp"

namespace recipmono {

IndexVerdict dedekind_index_test(const IntPoly& f, const Integer& p)
{
    if (!f.is_monic()) throw std::invalid_argument("dedekind_index_test: polynomial must be monic");
    const ModPoly fbar = reduce_mod(f, p);
    const std::uint64_t pp = fbar.modulus();

    ModPoly radical = ModPoly::constant(pp, 1);
    for (const auto& fac : factor_mod_p(fbar).factors) radical = radical * fac.factor;
    const ModPoly cofactor = divrem(fbar, radical).quotient;

    const IntPoly lifted_radical = radical.lift();
    const IntPoly lifted_cofactor = cofactor.lift();
    const IntPoly defect = divide_exact(lifted_radical * lifted_cofactor - f, p);

    ModPoly common = gcd(gcd(reduce_mod(defect, pp), radical), cofactor);
    return common.degree() >= 1 ? IndexVerdict::DividesIndex : IndexVerdict::DoesNotDivideIndex;
}

IntPoly IdealSquareWitness::recompose() const { return quotient * h * h + linear * h + constant; }

namespace {

bool all_divisible(const IntPoly& f, const Integer& m)
{
    for (const auto& c : f.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) return false;
    return true;
}

IdealSquareResult membership_unchecked(const IntPoly& f, const Integer& p, const IntPoly& h)
{
    IdealSquareResult out;
    out.witness.p = p;
    out.witness.h = h;
    DivRem outer = divrem_monic(f, h * h);
    DivRem inner = divrem_monic(outer.remainder, h);
    out.witness.quotient = std::move(outer.quotient);
    out.witness.linear = std::move(inner.quotient);
    out.witness.constant = std::move(inner.remainder);
    out.member = all_divisible(out.witness.linear, p) && all_divisible(out.witness.constant, p * p);
    return out;
}

} // namespace

IdealSquareResult ideal_square_membership(const IntPoly& f, const Integer& p, const IntPoly& h)
{
    if (!h.is_monic() || h.degree() < 1) throw std::invalid_argument("ideal_square_membership: h must be monic of degree >= 1");
    if (!is_irreducible(reduce_mod(h, p)))
        throw std::invalid_argument("ideal_square_membership: h is not irreducible modulo " + p.get_str());
    return membership_unchecked(f, p, h);
}

std::optional<IdealSquareWitness> ideal_square_search(const IntPoly& f, std::uint64_t p, int max_degree)
{
    const Integer pz(std::to_string(p));
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<std::uint64_t> low(static_cast<std::size_t>(d), 0);
        for (;;) {
            std::vector<std::uint64_t> coeffs = low;
            coeffs.push_back(1);
            ModPoly hbar(p, coeffs);
            if (is_irreducible(hbar)) {
                IdealSquareResult r = membership_unchecked(f, pz, hbar.lift());
                if (r.member) return r.witness;
            }
            // odometer over the lower coefficients
            std::size_t i = 0;
            while (i < low.size() && ++low[i] == p) low[i++] = 0;
            if (i == low.size()) break;
        }
    }
    return std::nullopt;
}

MonogenicityReport is_monogenic(const IntPoly& f, const FactorEffort& effort)
{
    if (!f.is_monic()) throw std::invalid_argument("is_monogenic: polynomial must be monic");
    if (f.degree() < 1) throw std::invalid_argument("is_monogenic: degree must be >= 1");
    MonogenicityReport rep;
    rep.poly = f;
    rep.disc = discriminant(f);
    if (rep.disc == 0) {
        rep.irreducibility = IrreducibilityStatus::Reducible;
        rep.blocking.push_back("discriminant is zero: f is not separable");
        return rep;
    }
    rep.irreducibility = irreducibility_certificate(f).status;

    IntFactorization fac = factor_int(rep.disc, effort);
    rep.factorization_complete = fac.complete();
    bool resolved = fac.complete();
    if (!fac.complete()) rep.blocking.push_back("discriminant not fully factored; cofactor " + fac.cofactor.get_str());

    for (const auto& pp : fac.factors) {
        if (pp.exponent < 2) continue;
        rep.candidate_primes.push_back(pp.prime);
        if (mpz_sizeinbase(pp.prime.get_mpz_t(), 2) > 63) {
            resolved = false;
            rep.blocking.push_back("candidate prime " + pp.prime.get_str() + " exceeds the supported modulus");
            continue;
        }
        IndexVerdict v = dedekind_index_test(f, pp.prime);
        rep.per_prime_detail[pp.prime] = v;
        if (v == IndexVerdict::DividesIndex) rep.index_primes.push_back(pp.prime);
    }

    if (!rep.index_primes.empty()) {
        rep.verdict = Verdict::NotMonogenic;
        rep.blocking.clear();
    } else if (rep.irreducibility == IrreducibilityStatus::Irreducible && resolved) {
        rep.verdict = Verdict::Monogenic;
    } else {
        if (rep.irreducibility == IrreducibilityStatus::Reducible) rep.blocking.push_back("f is reducible");
        else if (rep.irreducibility == IrreducibilityStatus::Unknown) rep.blocking.push_back("irreducibility not proven");
        rep.verdict = Verdict::Unknown;
    }
    return rep;
}

SufficientReport sufficient_reciprocal_monogenic(const IntPoly& f, const FactorEffort& effort)
{
    if (!f.is_monic()) throw std::invalid_argument("sufficient_reciprocal_monogenic: polynomial must be monic");
    SufficientReport rep;
    rep.g = reciprocal_to_half(f);
    rep.irreducibility = irreducibility_certificate(f).status;
    rep.f1_fm1 = evaluate(f, Integer(1)) * evaluate(f, Integer(-1));
    rep.f1_fm1_status = is_squarefree_int(rep.f1_fm1, effort).status;
    rep.g_report = is_monogenic(rep.g, effort);

    if (rep.irreducibility != IrreducibilityStatus::Irreducible)
        rep.failing.push_back(std::string("f irreducibility: ") + to_string(rep.irreducibility));
    if (rep.f1_fm1_status != Squarefreeness::Squarefree)
        rep.failing.push_back("f(1)f(-1) = " + rep.f1_fm1.get_str() + " is " + to_string(rep.f1_fm1_status));
    if (rep.g_report.verdict != Verdict::Monogenic)
        rep.failing.push_back(std::string("g is ") + to_string(rep.g_report.verdict));
    rep.verdict = rep.failing.empty() ? SufficientVerdict::MonogenicProven : SufficientVerdict::Inconclusive;
    return rep;
}

PowerCompositionalReport power_compositional_check(const IntPoly& f, unsigned k, const FactorEffort& effort)
{
    if (k < 2) throw std::invalid_argument("power_compositional_check: k must be >= 2");
    PowerCompositionalReport rep;
    rep.k = k;
    rep.base = sufficient_reciprocal_monogenic(f, effort);
    rep.composed = compose_power(f, k);
    rep.composed_irreducibility = irreducibility_certificate(rep.composed).status;

    if (rep.composed_irreducibility != IrreducibilityStatus::Irreducible)
        rep.failing.push_back(std::string("f(x^k) irreducibility: ") + to_string(rep.composed_irreducibility));
    if (rep.base.g_report.verdict != Verdict::Monogenic)
        rep.failing.push_back(std::string("g is ") + to_string(rep.base.g_report.verdict));
    if (rep.base.f1_fm1_status != Squarefreeness::Squarefree)
        rep.failing.push_back("f(1)f(-1) = " + rep.base.f1_fm1.get_str() + " is " + to_string(rep.base.f1_fm1_status));
    for (const auto& pp : factor_int(Integer(k)).factors) {
        IndexVerdict v = dedekind_index_test(rep.composed, pp.prime);
        rep.k_prime_detail[pp.prime] = v;
        if (v == IndexVerdict::DividesIndex) rep.failing.push_back(pp.prime.get_str() + " divides the index of f(x^k)");
    }
    rep.verdict = rep.failing.empty() ? SufficientVerdict::MonogenicProven : SufficientVerdict::Inconclusive;
    return rep;
}

const char* to_string(IndexVerdict v)
{
    return v == IndexVerdict::DividesIndex ? "DividesIndex" : "DoesNotDivideIndex";
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Monogenic: return "Monogenic";
    case Verdict::NotMonogenic: return "NotMonogenic";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(SufficientVerdict v)
{
    return v == SufficientVerdict::MonogenicProven ? "MonogenicProven" : "Inconclusive";
}

} // namespace recipmono
