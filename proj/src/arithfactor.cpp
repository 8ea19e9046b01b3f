#include "recipmono/arithfactor.hpp"

#include <algorithm>
#include <map>

namespace recipmono {

const Integer kDeterministicPrimalityBound("3317044064679887385961981");

namespace {

const std::vector<std::uint64_t>& small_primes()
{
    static const std::vector<std::uint64_t> table = primes_up_to(1u << 16);
    return table;
}

bool strong_probable_prime(const Integer& n, unsigned long base)
{
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Integer x, nm1 = n - 1;
    Integer b = base;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Brent's variant of Pollard rho on f(x) = x^2 + c, with a batched gcd.
std::optional<Integer> rho_split(const Integer& n, unsigned long c, std::uint64_t budget)
{
    Integer x = 2, y = 2, ys, q = 1, g = 1, tmp;
    std::uint64_t r = 1, used = 0;
    const std::uint64_t m = 128;
    auto step = [&](Integer& v) {
        v *= v;
        v += c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && used < budget) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                step(y);
                tmp = x - y;
                q *= tmp;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            used += lim;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            tmp = x - ys;
            mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == 1 || g == n) return std::nullopt;
    return g;
}

struct Accumulator {
    std::map<Integer, unsigned> primes;
    std::vector<Integer> unsplit;
};

void split_into(Accumulator& acc, const Integer& n, unsigned mult, const FactorEffort& effort)
{
    if (n == 1) return;
    if (is_prime(n)) {
        acc.primes[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        // n = root^k, take the largest k
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                split_into(acc, root, mult * static_cast<unsigned>(k), effort);
                return;
            }
        }
    }
    for (unsigned attempt = 0; attempt < effort.rho_attempts; ++attempt) {
        if (auto d = rho_split(n, 1 + attempt, effort.rho_iterations)) {
            Integer other = n / *d;
            Integer g;
            mpz_gcd(g.get_mpz_t(), d->get_mpz_t(), other.get_mpz_t());
            if (g == 1) {
                split_into(acc, *d, mult, effort);
                split_into(acc, other, mult, effort);
            } else {
                // shared factor: peel it off so multiplicities stay exact
                Integer rest = n;
                unsigned e = 0;
                while (mpz_divisible_p(rest.get_mpz_t(), g.get_mpz_t())) {
                    rest /= g;
                    ++e;
                }
                split_into(acc, g, mult * e, effort);
                split_into(acc, rest, mult, effort);
            }
            return;
        }
    }
    for (unsigned i = 0; i < mult; ++i) acc.unsplit.push_back(n);
}

} // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    static const unsigned long witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long p : witnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    for (unsigned long p : witnesses)
        if (!strong_probable_prime(n, p)) return false;
    if (n < kDeterministicPrimalityBound) return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

Integer IntFactorization::value() const
{
    Integer v = sign;
    for (const auto& pp : factors) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= t;
    }
    return v * cofactor;
}

unsigned IntFactorization::exponent_of(const Integer& p) const
{
    for (const auto& pp : factors)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

IntFactorization factor_int(const Integer& n, const FactorEffort& effort)
{
    IntFactorization out;
    out.sign = sgn(n);
    if (n == 0) return out;
    Integer m = abs(n);

    Accumulator acc;
    for (std::uint64_t p : small_primes()) {
        if (p > effort.trial_bound) break;
        if (Integer(p) * p > m) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) acc.primes[Integer(p)] += e;
    }
    split_into(acc, m, 1, effort);

    for (auto& [p, e] : acc.primes) out.factors.push_back({p, e});
    for (const auto& u : acc.unsplit) out.cofactor *= u;
    return out;
}

SquarefreeResult is_squarefree_int(const Integer& n, const FactorEffort& effort)
{
    if (n == 0) return {Squarefreeness::NotSquarefree, std::nullopt};
    IntFactorization fac = factor_int(n, effort);
    for (const auto& pp : fac.factors)
        if (pp.exponent >= 2) return {Squarefreeness::NotSquarefree, pp.prime};
    if (fac.complete()) return {Squarefreeness::Squarefree, std::nullopt};
    // cofactors left over from several unsplit pieces may still share a factor
    if (mpz_perfect_square_p(fac.cofactor.get_mpz_t())) return {Squarefreeness::NotSquarefree, std::nullopt};
    for (const auto& pp : fac.factors)
        if (mpz_divisible_p(fac.cofactor.get_mpz_t(), pp.prime.get_mpz_t()))
            return {Squarefreeness::NotSquarefree, pp.prime};
    return {Squarefreeness::Unknown, std::nullopt};
}

const char* to_string(Squarefreeness s)
{
    switch (s) {
    case Squarefreeness::Squarefree: return "Squarefree";
    case Squarefreeness::NotSquarefree: return "NotSquarefree";
    case Squarefreeness::Unknown: return "Unknown";
    }
    return "?";
}

} // namespace recipmono
