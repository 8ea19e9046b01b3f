#include "recipmono/galois.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "recipmono/arithfactor.hpp"
#include "recipmono/discriminant.hpp"

namespace recipmono {

SquareStatus disc_is_square(const Integer& n)
{
    if (n < 0) return SquareStatus::NotSquare;
    return mpz_perfect_square_p(n.get_mpz_t()) ? SquareStatus::Square : SquareStatus::NotSquare;
}

std::vector<std::vector<int>> GaloisEvidence::cycle_types() const
{
    std::set<std::vector<int>> seen;
    for (const auto& s : samples) seen.insert(s.degrees);
    return {seen.begin(), seen.end()};
}

GaloisEvidence cycle_type_scan(const IntPoly& f, unsigned prime_budget)
{
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("cycle_type_scan: need monic f of degree >= 1");
    GaloisEvidence ev;
    ev.poly = f;
    ev.disc = discriminant(f);
    if (ev.disc == 0) throw std::domain_error("cycle_type_scan: discriminant is zero");
    ev.irreducibility = irreducibility_certificate(f).status;
    ev.disc_square = disc_is_square(ev.disc);

    std::uint64_t bound = 512;
    std::vector<std::uint64_t> primes = primes_up_to(bound);
    std::size_t idx = 0;
    while (ev.samples.size() < prime_budget) {
        if (idx == primes.size()) {
            bound *= 4;
            primes = primes_up_to(bound);
        }
        const std::uint64_t p = primes[idx++];
        if (mpz_divisible_ui_p(ev.disc.get_mpz_t(), p)) {
            ev.skipped_primes.push_back(p);
            continue;
        }
        FactorPattern pat = factor_pattern(f, p);
        CycleSample s{p, {}};
        for (const auto& [deg, mult] : pat.parts)
            for (unsigned m = 0; m < mult; ++m) s.degrees.push_back(deg);
        std::sort(s.degrees.begin(), s.degrees.end());
        ev.samples.push_back(std::move(s));
    }

    for (const auto& type : ev.cycle_types()) {
        std::string t = "contains cycle type (";
        for (std::size_t i = 0; i < type.size(); ++i) t += (i ? "," : "") + std::to_string(type[i]);
        ev.facts.push_back(t + ")");
    }
    if (ev.irreducibility == IrreducibilityStatus::Irreducible) ev.facts.push_back("transitive");
    if (ev.disc_square == SquareStatus::Square) ev.facts.push_back("contained in the alternating group");
    ev.conclusion = ev.samples.empty() ? GaloisConclusion::Inconclusive : GaloisConclusion::Constraint;
    return ev;
}

GaloisEvidence quintic_galois(const IntPoly& g, unsigned prime_budget)
{
    if (g.degree() != 5) throw std::invalid_argument("quintic_galois: degree must be 5");
    GaloisEvidence ev = cycle_type_scan(g, prime_budget);
    if (ev.irreducibility != IrreducibilityStatus::Irreducible) {
        ev.conclusion = GaloisConclusion::Inconclusive;
        ev.facts.push_back("no irreducibility certificate, transitivity unknown");
        return ev;
    }
    bool three_cycle = false, five_cycle = false, transposition = false;
    for (const auto& type : ev.cycle_types()) {
        // a (2,3) element squares to a 3-cycle and cubes to a transposition
        if (type == std::vector<int>{1, 1, 3} || type == std::vector<int>{2, 3}) three_cycle = true;
        if (type == std::vector<int>{1, 1, 1, 2} || type == std::vector<int>{2, 3}) transposition = true;
        if (type == std::vector<int>{5}) five_cycle = true;
    }
    if (three_cycle && five_cycle) {
        ev.conclusion = GaloisConclusion::ProvenGroup;
        ev.group = ev.disc_square == SquareStatus::Square ? "A5" : "S5";
    } else if (transposition) {
        ev.conclusion = GaloisConclusion::ProvenGroup;
        ev.group = "S5";
    } else {
        ev.conclusion = GaloisConclusion::Constraint;
    }
    return ev;
}

const char* to_string(SquareStatus s) { return s == SquareStatus::Square ? "Square" : "NotSquare"; }

const char* to_string(GaloisConclusion c)
{
    switch (c) {
    case GaloisConclusion::ProvenGroup: return "ProvenGroup";
    case GaloisConclusion::Constraint: return "Constraint";
    case GaloisConclusion::Inconclusive: return "Inconclusive";
    }
    return "?";
}

} // namespace recipmono
