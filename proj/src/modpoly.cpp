#include "recipmono/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "recipmono/arithfactor.hpp"
#include "recipmono/discriminant.hpp"

namespace recipmono {

namespace fp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p - 2, p);
}

} // namespace fp

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto& c : c_) c %= p_;
    normalize();
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, {c}); }

ModPoly ModPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t k)
{
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c;
    return ModPoly(p, std::move(v));
}

void ModPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly ModPoly::lift() const
{
    std::vector<Integer> v;
    v.reserve(c_.size());
    for (auto c : c_) {
        Integer z;
        mpz_import(z.get_mpz_t(), 1, -1, sizeof(c), 0, 0, &c);
        v.push_back(z);
    }
    return IntPoly(std::move(v));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b)
{
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fp::add(a[j], b[j], a.p_);
    return ModPoly(a.p_, std::move(v));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b)
{
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fp::sub(a[j], b[j], a.p_);
    return ModPoly(a.p_, std::move(v));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b)
{
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_, {});
    const std::uint64_t p = a.p_;
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    // Each product is < 2^126; reduce the accumulator before it can overflow.
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
            if (acc[i + j] >> 126) acc[i + j] %= p;
        }
    }
    std::vector<std::uint64_t> v(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) v[k] = static_cast<std::uint64_t>(acc[k] % p);
    return ModPoly(p, std::move(v));
}

bool operator<(const ModPoly& a, const ModPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

ModDivRem divrem(const ModPoly& a, const ModPoly& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
    std::vector<std::uint64_t> r = a.coeffs();
    std::vector<std::uint64_t> q(a.degree() - b.degree() + 1, 0);
    const std::uint64_t linv = fp::inv(b.leading(), p);
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        std::uint64_t c = fp::mul(r[k], linv, p);
        q[k - db] = c;
        for (int j = 0; j <= db; ++j) r[k - db + j] = fp::sub(r[k - db + j], fp::mul(c, b[j], p), p);
    }
    r.resize(db);
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly mod(const ModPoly& a, const ModPoly& b) { return divrem(a, b).remainder; }

ModPoly scale(const ModPoly& a, std::uint64_t c)
{
    std::vector<std::uint64_t> v = a.coeffs();
    for (auto& x : v) x = fp::mul(x, c, a.modulus());
    return ModPoly(a.modulus(), std::move(v));
}

ModPoly make_monic(const ModPoly& a)
{
    if (a.is_zero()) return a;
    return scale(a, fp::inv(a.leading(), a.modulus()));
}

ModPoly gcd(const ModPoly& a, const ModPoly& b)
{
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

ModPoly derivative(const ModPoly& a)
{
    if (a.degree() < 1) return ModPoly(a.modulus(), {});
    std::vector<std::uint64_t> v(a.degree());
    for (int j = 1; j <= a.degree(); ++j) v[j - 1] = fp::mul(a[j], static_cast<std::uint64_t>(j) % a.modulus(), a.modulus());
    return ModPoly(a.modulus(), std::move(v));
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m)
{
    ModPoly r = mod(ModPoly::constant(m.modulus(), 1), m);
    ModPoly b = mod(base, m);
    while (e) {
        if (e & 1) r = mod(r * b, m);
        e >>= 1;
        if (e) b = mod(b * b, m);
    }
    return r;
}

namespace {

ModPoly powmod_big(const ModPoly& base, const Integer& e, const ModPoly& m)
{
    ModPoly r = mod(ModPoly::constant(m.modulus(), 1), m);
    ModPoly b = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mod(r * r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(r * b, m);
    }
    return r;
}

ModPoly exact_quotient(const ModPoly& a, const ModPoly& b) { return divrem(a, b).quotient; }

ModPoly x_poly(std::uint64_t p) { return ModPoly::monomial(p, 1, 1); }

// Monic squarefree parts with their multiplicities.
void squarefree_decompose(const ModPoly& f, unsigned mult, std::vector<std::pair<ModPoly, unsigned>>& out)
{
    const std::uint64_t p = f.modulus();
    ModPoly c = gcd(f, derivative(f));
    ModPoly w = exact_quotient(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly fac = exact_quotient(w, y);
        if (fac.degree() > 0) out.emplace_back(make_monic(fac), i * mult);
        w = y;
        c = exact_quotient(c, y);
        ++i;
    }
    if (c.degree() > 0) {
        // c is a p-th power: c(x) = d(x^p), and d(x)^p = d(x^p) over F_p
        std::vector<std::uint64_t> root(c.degree() / p + 1, 0);
        for (int j = 0; j <= c.degree(); j += static_cast<int>(p)) root[j / p] = c[j];
        squarefree_decompose(ModPoly(p, std::move(root)), mult * static_cast<unsigned>(p), out);
    }
}

// Pieces (product, common factor degree) for a monic squarefree f.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f)
{
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly rest = f;
    ModPoly h = mod(x_poly(p), rest);
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, p, rest);
        ModPoly g = gcd(rest, h - x_poly(p));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = exact_quotient(rest, g);
            h = mod(h, rest);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = f.modulus();
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    Integer half_exp;
    if (p != 2) {
        Integer pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
        half_exp = (pd - 1) / 2;
    }
    for (;;) {
        std::vector<std::uint64_t> v(f.degree());
        for (auto& c : v) c = coeff(rng);
        ModPoly a(p, std::move(v));
        if (a.degree() < 1) continue;
        ModPoly b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            ModPoly term = mod(a, f);
            b = term;
            for (int i = 1; i < d; ++i) {
                term = mod(term * term, f);
                b = b + term;
            }
        } else {
            b = powmod_big(a, half_exp, f) - ModPoly::constant(p, 1);
        }
        ModPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_quotient(f, g), d, rng, out);
            return;
        }
    }
}

std::uint64_t to_u64(const Integer& z)
{
    if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 63) throw std::invalid_argument("modulus out of range");
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
    return v;
}

} // namespace

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p)
{
    if (p > kMaxModulus || !is_prime(Integer(std::to_string(p))))
        throw std::invalid_argument("reduce_mod: modulus " + std::to_string(p) + " is not a supported prime");
    const Integer pz(std::to_string(p));
    std::vector<std::uint64_t> v;
    v.reserve(f.coeffs().size());
    Integer r;
    for (const auto& c : f.coeffs()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
        v.push_back(to_u64(r));
    }
    return ModPoly(p, std::move(v));
}

ModPoly reduce_mod(const IntPoly& f, const Integer& p)
{
    if (p <= 0 || mpz_sizeinbase(p.get_mpz_t(), 2) > 63)
        throw std::invalid_argument("reduce_mod: modulus " + p.get_str() + " is not a supported prime");
    return reduce_mod(f, to_u64(p));
}

ModPoly ModPolyFactorization::product() const
{
    ModPoly acc = ModPoly::constant(p, unit);
    for (const auto& fac : factors)
        for (unsigned i = 0; i < fac.multiplicity; ++i) acc = acc * fac.factor;
    return acc;
}

ModPolyFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed)
{
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    ModPolyFactorization out;
    out.p = f.modulus();
    out.unit = f.leading();
    if (f.degree() == 0) return out;

    std::mt19937_64 rng(seed);
    std::vector<std::pair<ModPoly, unsigned>> sqf;
    squarefree_decompose(make_monic(f), 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [piece, d] : distinct_degree(part)) {
            std::vector<ModPoly> irreducibles;
            equal_degree(piece, d, rng, irreducibles);
            for (auto& g : irreducibles) out.factors.push_back({make_monic(g), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    return out;
}

bool is_irreducible(const ModPoly& f)
{
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t p = f.modulus();
    ModPoly g = make_monic(f);
    // x^(p^k) mod g for k = 1..n
    std::vector<ModPoly> frob{mod(x_poly(p), g)};
    for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, g));
    if (!(frob[n] == mod(x_poly(p), g))) return false;
    for (std::uint64_t q : primes_up_to(static_cast<std::uint64_t>(n))) {
        if (n % q) continue;
        if (gcd(g, frob[n / q] - x_poly(p)).degree() > 0) return false;
    }
    return true;
}

FactorPattern factor_pattern(const IntPoly& f, std::uint64_t p, std::uint64_t seed)
{
    ModPoly fp_ = reduce_mod(f, p);
    if (f.is_zero() || fp_.degree() != f.degree())
        throw std::invalid_argument("factor_pattern: p divides the leading coefficient");
    FactorPattern out;
    out.p = p;
    for (const auto& fac : factor_mod_p(fp_, seed).factors) {
        out.parts.emplace_back(fac.factor.degree(), fac.multiplicity);
        if (fac.multiplicity > 1) out.all_simple = false;
    }
    std::sort(out.parts.begin(), out.parts.end());
    out.p_divides_disc = !out.all_simple;
    return out;
}

namespace {

std::vector<Integer> divisors_of(const IntFactorization& fac)
{
    std::vector<Integer> divs{1};
    for (const auto& pp : fac.factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

} // namespace

IrreducibilityCertificate irreducibility_certificate(const IntPoly& f, unsigned prime_budget)
{
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("irreducibility_certificate: need monic f of degree >= 1");
    IrreducibilityCertificate cert;
    const int n = f.degree();
    if (n == 1) {
        cert.status = IrreducibilityStatus::Irreducible;
        cert.reason = "linear";
        return cert;
    }
    if (f[0] == 0) {
        cert.status = IrreducibilityStatus::Reducible;
        cert.factor = IntPoly{0, 1};
        cert.reason = "x divides f";
        return cert;
    }
    const Integer disc = discriminant(f);
    if (disc == 0) {
        cert.status = IrreducibilityStatus::Reducible;
        cert.reason = "repeated factor (discriminant is zero)";
        return cert;
    }

    // integer roots of a monic polynomial divide the constant term
    IntFactorization a0 = factor_int(f[0]);
    if (a0.complete()) {
        std::vector<Integer> divs = divisors_of(a0);
        if (divs.size() <= 100000) {
            for (const auto& d : divs) {
                for (const Integer& r : {Integer(d), Integer(-d)}) {
                    if (evaluate(f, r) == 0) {
                        cert.status = IrreducibilityStatus::Reducible;
                        cert.factor = IntPoly::linear_root(r);
                        cert.reason = "rational root " + r.get_str();
                        return cert;
                    }
                }
            }
        }
    }

    // attainable[k]: some product of factors has degree k, for every prime so far
    std::vector<bool> attainable(static_cast<std::size_t>(n) + 1, true);
    unsigned used = 0;
    std::uint64_t bound = 256;
    std::size_t idx = 0;
    std::vector<std::uint64_t> primes = primes_up_to(bound);
    while (used < prime_budget) {
        if (idx == primes.size()) {
            bound *= 4;
            primes = primes_up_to(bound);
        }
        const std::uint64_t p = primes[idx++];
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        ++used;
        FactorPattern pat = factor_pattern(f, p);
        if (pat.parts.size() == 1) {
            cert.status = IrreducibilityStatus::Irreducible;
            cert.witness_primes = {p};
            cert.reason = "irreducible modulo " + std::to_string(p);
            return cert;
        }
        std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
        sums[0] = true;
        for (const auto& [deg, mult] : pat.parts)
            for (unsigned m = 0; m < mult; ++m)
                for (int s = n - deg; s >= 0; --s)
                    if (sums[s]) sums[s + deg] = true;
        bool changed = false;
        for (int k = 1; k < n; ++k) {
            if (attainable[k] && !sums[k]) {
                attainable[k] = false;
                changed = true;
            }
        }
        if (changed) cert.witness_primes.push_back(p);
        if (std::none_of(attainable.begin() + 1, attainable.end() - 1, [](bool b) { return b; })) {
            cert.status = IrreducibilityStatus::Irreducible;
            cert.reason = "incompatible factor degrees modulo " + std::to_string(cert.witness_primes.size()) + " primes";
            return cert;
        }
    }
    cert.witness_primes.clear();
    cert.status = IrreducibilityStatus::Unknown;
    cert.reason = "no certificate within " + std::to_string(prime_budget) + " primes";
    return cert;
}

const char* to_string(IrreducibilityStatus s)
{
    switch (s) {
    case IrreducibilityStatus::Irreducible: return "Irreducible";
    case IrreducibilityStatus::Reducible: return "Reducible";
    case IrreducibilityStatus::Unknown: return "Unknown";
    }
    return "?";
}

} // namespace recipmono
