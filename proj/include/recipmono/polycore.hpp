#ifndef RECIPMONO_POLYCORE_HPP
#define RECIPMONO_POLYCORE_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace recipmono {

using Integer = mpz_class;
using Rational = mpq_class;

/* Dense univariate polynomial over Z, coefficients in ascending degree.
 *
 * The representation is kept canonical: the highest stored coefficient is
 * nonzero, and the zero polynomial is the empty sequence.  degree() of the
 * zero polynomial is -1 (standing in for -infinity).
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t k);
    /// x - c
    static IntPoly linear_root(const Integer& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    /// Coefficient of x^j; zero beyond the degree.
    const Integer& operator[](std::size_t j) const;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division by a monic divisor; throws std::domain_error for a zero divisor
/// and std::invalid_argument for a non-monic one.
DivRem divrem_monic(const IntPoly& dividend, const IntPoly& divisor);

/// Exact division of every coefficient by c; throws std::domain_error if
/// some coefficient is not a multiple of c.
IntPoly divide_exact(const IntPoly& f, const Integer& c);

Integer evaluate(const IntPoly& f, const Integer& x);
Rational evaluate(const IntPoly& f, const Rational& x);
IntPoly derivative(const IntPoly& f);
/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Integer content(const IntPoly& f);
IntPoly power(const IntPoly& f, unsigned e);
/// f(g(x))
IntPoly compose(const IntPoly& f, const IntPoly& g);

/// a_j == a_{deg-j} for all j.  Requires f nonzero.
bool is_reciprocal(const IntPoly& f);

/// x^deg(f) f(1/x).  Rejects f(0) == 0.
IntPoly reverse(const IntPoly& f);

/// f(x^k)
IntPoly compose_power(const IntPoly& f, unsigned k);

/* Memo of C_j(u) = 2 T_j(u/2), the integer-rescaled Chebyshev polynomials:
 * C_0 = 2, C_1 = u, C_j = u C_{j-1} - C_{j-2}.  Grows on demand, so an
 * instance must not be shared between threads without external locking.
 */
class ChebCoeffTable {
public:
    const IntPoly& operator()(std::size_t j);
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<IntPoly> entries_;
};

IntPoly chebyshev_c(std::size_t j);

/// For reciprocal f of even degree 2n >= 2, the degree-n g with
/// f(x) = x^n g(x + 1/x).
IntPoly reciprocal_to_half(const IntPoly& f);

/// Inverse transform: sum_k b_k x^(n-k) (x^2+1)^k for g = sum_k b_k u^k.
IntPoly half_to_reciprocal(const IntPoly& g, int n);

/// Phi_N for N = 2^a q^b with q an odd prime, b >= 1.
IntPoly cyclotomic_2aqb(unsigned long q, unsigned a, unsigned b);

/// Euler phi of 2^a q^b.
unsigned long phi_2aqb(unsigned long q, unsigned a, unsigned b);

// Text formats (polyio.cpp).

/// Accepts a JSON array of decimal integers (strings or numbers) or the
/// human syntax "x^4+3x^3-2*x+1".  The format is chosen by the first
/// non-blank character.  Throws std::invalid_argument on malformed input.
IntPoly parse_poly(const std::string& text);

/// ["1","3","5","3","1"]; the zero polynomial is [].
std::string to_json_array(const IntPoly& f);

/// Human syntax, highest degree first: "x^4+3*x^3-x+1".
std::string to_string(const IntPoly& f, char var = 'x');

} // namespace recipmono

#endif
