#include "recipmono/families.hpp"

#include <stdexcept>

#include "parallel.hpp"

namespace recipmono {

unsigned long FamilyParams::N() const
{
    unsigned long n = 1;
    for (unsigned i = 0; i < a; ++i) n *= 2;
    for (unsigned i = 0; i < b; ++i) n *= q;
    return n;
}

unsigned long FamilyParams::phi() const { return phi_2aqb(q, a, b); }

IntPoly build_F(const FamilyParams& params)
{
    if (params.r == 0) throw std::invalid_argument("build_F: r must be nonzero");
    IntPoly cyc = cyclotomic_2aqb(params.q, params.a, params.b);
    const Integer qq = params.q;
    return cyc + IntPoly::monomial(4 * params.r * qq * qq * params.t, params.phi() / 2);
}

IntPoly build_ga(unsigned long q, unsigned a, const Integer& r, const Integer& t)
{
    if (a > 1) throw std::invalid_argument("build_ga: a must be 0 or 1");
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("build_ga: q must be an odd prime");
    const Integer qq = q;
    const unsigned long half = (q - 1) / 2;
    ChebCoeffTable cheb;
    IntPoly sum = IntPoly::constant(1);
    for (unsigned long j = 1; j <= half; ++j) {
        if (a == 1 && (j & 1)) sum -= cheb(j);
        else sum += cheb(j);
    }
    if (a == 1 && (half & 1)) sum = -sum;
    return sum + IntPoly::constant(4 * r * qq * qq * t);
}

IntPoly thm13_f(const Integer& p)
{
    const Integer one = 1;
    return IntPoly(std::vector<Integer>{one, one, one, one, 2 * p + 1, 4 * p + 1, 2 * p + 1, one, one, one, one});
}

IntPoly thm13_g(const Integer& p)
{
    return IntPoly(std::vector<Integer>{4 * p + 1, 2 * p + 3, Integer(-3), Integer(-4), Integer(1), Integer(1)});
}

IntPoly thm13_quintic_factor() { return IntPoly{14641, -15972, -139876, 156112, 125008, 8192}; }

IntPoly thm13_h() { return IntPoly{11, 8} * thm13_quintic_factor(); }

Thm13Member thm13_family(const Integer& p) { return {thm13_f(p), thm13_g(p), evaluate(thm13_h(), p)}; }

Thm13Scan thm13_prime_scan(std::uint64_t pmax, unsigned jobs, const FactorEffort& effort)
{
    const std::vector<std::uint64_t> primes = primes_up_to(pmax);
    std::vector<Thm13Row> rows(primes.size());
    const IntPoly h = thm13_h();
    detail::parallel_for(primes.size(), jobs, [&](std::size_t i) {
        Thm13Row row;
        row.p = primes[i];
        const Integer p(std::to_string(primes[i]));
        row.h_value = evaluate(h, p);
        row.h_status = is_squarefree_int(row.h_value, effort).status;
        row.f_verdict = is_monogenic(thm13_f(p), effort).verdict;
        row.g_verdict = is_monogenic(thm13_g(p), effort).verdict;
        rows[i] = std::move(row);
    });
    Thm13Scan scan;
    for (auto& row : rows) {
        if (row.h_status == Squarefreeness::Squarefree) scan.accepted.push_back(std::move(row));
        else scan.rejected.push_back(std::move(row));
    }
    return scan;
}

IntPoly sextic_f(const Integer& a)
{
    const Integer one = 1;
    return IntPoly(std::vector<Integer>{one, one, 2 * a + 1, 4 * a + 1, 2 * a + 1, one, one});
}

IntPoly sextic_g(const Integer& a)
{
    return IntPoly(std::vector<Integer>{4 * a - 1, 2 * a - 2, Integer(1), Integer(1)});
}

IntPoly sextic_H() { return IntPoly{-7, 20, 4} * IntPoly{7, 8}; }

SexticMember sextic_family(const Integer& a) { return {sextic_f(a), sextic_g(a), evaluate(sextic_H(), a)}; }

std::uint64_t rho_f_r2(const IntPoly& f, std::uint64_t r)
{
    if (r < 2 || r > (1ull << 31)) throw std::invalid_argument("rho_f_r2: r out of range");
    if (!is_prime(Integer(std::to_string(r)))) throw std::invalid_argument("rho_f_r2: r must be prime");
    const std::uint64_t m = r * r;
    const Integer mz(std::to_string(m));
    std::vector<std::uint64_t> c;
    for (const auto& x : f.coeffs()) {
        Integer red;
        mpz_fdiv_r(red.get_mpz_t(), x.get_mpz_t(), mz.get_mpz_t());
        c.push_back(red.get_ui());
    }
    std::uint64_t count = 0;
    for (std::uint64_t z = 1; z < m; ++z) {
        if (z % r == 0) continue;
        unsigned __int128 acc = 0;
        for (std::size_t j = c.size(); j-- > 0;) acc = (acc * z + c[j]) % m;
        if (acc == 0) ++count;
    }
    return count;
}

DensityReport local_obstruction_scan(const IntPoly& f, std::uint64_t B)
{
    if (B < 2) throw std::invalid_argument("local_obstruction_scan: B must be >= 2");
    DensityReport rep;
    rep.poly = f;
    rep.bound = B;
    rep.partial_product = 1;
    for (std::uint64_t r : primes_up_to(B)) {
        DensityRow row;
        row.r = r;
        row.rho = rho_f_r2(f, r);
        row.obstruction = row.rho == r * (r - 1);
        if (!row.obstruction) {
            const Integer m(std::to_string(r * r));
            for (std::uint64_t z = 1; z < r * r; ++z) {
                if (z % r == 0) continue;
                Integer v = evaluate(f, Integer(std::to_string(z)));
                if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t())) {
                    row.witness = z;
                    break;
                }
            }
        } else {
            rep.obstruction_primes.push_back(r);
        }
        Rational factor(Integer(std::to_string(row.rho)), Integer(std::to_string(r * (r - 1))));
        factor.canonicalize();
        rep.partial_product *= Rational(1) - factor;
        rep.rows.push_back(std::move(row));
    }
    rep.partial_product.canonicalize();
    return rep;
}

const char* to_string(CountDefinition d)
{
    switch (d) {
    case CountDefinition::L_f: return "L_f";
    case CountDefinition::M_H: return "M_H";
    case CountDefinition::N_H: return "N_H";
    }
    return "?";
}

} // namespace recipmono
