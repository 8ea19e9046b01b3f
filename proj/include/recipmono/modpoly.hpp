#ifndef RECIPMONO_MODPOLY_HPP
#define RECIPMONO_MODPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "recipmono/polycore.hpp"

namespace recipmono {

/// Largest supported modulus is below 2^63.
constexpr std::uint64_t kMaxModulus = (1ull << 63) - 1;

/// Seed for the equal-degree splitter; RECIPMONO_SEED overrides it in the CLI.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2025u;

/* Polynomial over F_p, residues in [0, p) in ascending degree, canonical
 * (no trailing zeros).  p is assumed prime; reduce_mod checks it. */
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static ModPoly constant(std::uint64_t p, std::uint64_t c);
    /// c x^k
    static ModPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t k);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t operator[](std::size_t j) const { return j < c_.size() ? c_[j] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    /// Integer lift with coefficients in [0, p).
    IntPoly lift() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    /// (degree, coefficients from the top) ordering used for sorted output.
    friend bool operator<(const ModPoly& a, const ModPoly& b);

private:
    void normalize();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

namespace fp {
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
} // namespace fp

struct ModDivRem {
    ModPoly quotient;
    ModPoly remainder;
};

ModDivRem divrem(const ModPoly& a, const ModPoly& b);
ModPoly mod(const ModPoly& a, const ModPoly& b);
ModPoly scale(const ModPoly& a, std::uint64_t c);
ModPoly make_monic(const ModPoly& a);
ModPoly gcd(const ModPoly& a, const ModPoly& b);
ModPoly derivative(const ModPoly& a);
/// base^e mod m
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m);

/// Throws std::invalid_argument if p is not a prime below 2^63.
ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);
ModPoly reduce_mod(const IntPoly& f, const Integer& p);

struct ModFactor {
    ModPoly factor; // monic irreducible
    unsigned multiplicity = 0;
};

struct ModPolyFactorization {
    std::uint64_t p = 2;
    std::uint64_t unit = 0;
    std::vector<ModFactor> factors; // sorted by (degree, coefficients)

    ModPoly product() const;
};

/* Squarefree decomposition, distinct-degree split, then Cantor-Zassenhaus
 * equal-degree splitting driven by a generator seeded from `seed` (trace
 * map in characteristic 2).  The same seed always gives the same output. */
ModPolyFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed = kDefaultSeed);

/// Rabin test.  Constants are not irreducible.
bool is_irreducible(const ModPoly& f);

struct FactorPattern {
    std::uint64_t p = 2;
    std::vector<std::pair<int, unsigned>> parts; // (degree, multiplicity), sorted
    bool all_simple = true;
    /// p | Delta(f); with p not dividing lc(f) this is exactly !all_simple.
    bool p_divides_disc = false;
};

/// Requires p not dividing the leading coefficient (std::invalid_argument).
FactorPattern factor_pattern(const IntPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

enum class IrreducibilityStatus { Irreducible, Reducible, Unknown };

struct IrreducibilityCertificate {
    IrreducibilityStatus status = IrreducibilityStatus::Unknown;
    /// Irreducible: the primes whose degree patterns settle it (one prime
    /// if a single reduction was irreducible).
    std::vector<std::uint64_t> witness_primes;
    /// Reducible: a nontrivial factor over Z, when one was exhibited.
    IntPoly factor;
    std::string reason;
};

/* Mod-p evidence for irreducibility over Q of a monic f.  Scans the first
 * `prime_budget` primes not dividing Delta(f); proves irreducibility when
 * some reduction is irreducible or when the sets of attainable factor
 * degrees intersect to {0, deg f}.  Rational roots and repeated factors
 * prove reducibility. */
IrreducibilityCertificate irreducibility_certificate(const IntPoly& f, unsigned prime_budget = 25);

const char* to_string(IrreducibilityStatus s);

} // namespace recipmono

#endif
