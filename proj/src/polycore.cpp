#include "recipmono/polycore.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace recipmono {

namespace {
const Integer kZero{0};
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k)
{
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& c) { return IntPoly(std::vector<Integer>{-c, Integer(1)}); }

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::operator[](std::size_t j) const
{
    return j < coeffs_.size() ? coeffs_[j] : kZero;
}

const Integer& IntPoly::leading() const
{
    return coeffs_.empty() ? kZero : coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& c)
{
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

IntPoly operator-(IntPoly a)
{
    for (auto& x : a.coeffs_) x = -x;
    return a;
}

DivRem divrem_monic(const IntPoly& dividend, const IntPoly& divisor)
{
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (!divisor.is_monic()) throw std::invalid_argument("divrem_monic: divisor is not monic");
    const int db = divisor.degree();
    std::vector<Integer> rem = dividend.coeffs();
    if (dividend.degree() < db) return {IntPoly{}, dividend};
    std::vector<Integer> quot(dividend.degree() - db + 1);
    for (int k = dividend.degree(); k >= db; --k) {
        Integer c = rem[k];
        if (c == 0) continue;
        quot[k - db] = c;
        for (int j = 0; j <= db; ++j) mpz_submul(rem[k - db + j].get_mpz_t(), c.get_mpz_t(), divisor[j].get_mpz_t());
    }
    rem.resize(db);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& f, const Integer& c)
{
    if (c == 0) throw std::domain_error("divide_exact: division by zero");
    std::vector<Integer> out = f.coeffs();
    for (auto& x : out) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw std::domain_error("divide_exact: coefficient not divisible");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return IntPoly(std::move(out));
}

Integer evaluate(const IntPoly& f, const Integer& x)
{
    Integer acc = 0;
    for (int j = f.degree(); j >= 0; --j) {
        acc *= x;
        acc += f[j];
    }
    return acc;
}

Rational evaluate(const IntPoly& f, const Rational& x)
{
    Rational acc = 0;
    for (int j = f.degree(); j >= 0; --j) {
        acc *= x;
        acc += Rational(f[j]);
    }
    acc.canonicalize();
    return acc;
}

IntPoly derivative(const IntPoly& f)
{
    if (f.degree() < 1) return {};
    std::vector<Integer> out(f.degree());
    for (int j = 1; j <= f.degree(); ++j) out[j - 1] = f[j] * j;
    return IntPoly(std::move(out));
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly power(const IntPoly& f, unsigned e)
{
    IntPoly result = IntPoly::constant(1);
    IntPoly base = f;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

IntPoly compose(const IntPoly& f, const IntPoly& g)
{
    IntPoly acc;
    for (int j = f.degree(); j >= 0; --j) {
        acc *= g;
        acc += IntPoly::constant(f[j]);
    }
    return acc;
}

bool is_reciprocal(const IntPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("is_reciprocal: zero polynomial");
    const auto& c = f.coeffs();
    return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

IntPoly reverse(const IntPoly& f)
{
    if (f.is_zero() || f[0] == 0)
        throw std::invalid_argument("reverse: constant term is zero, reversal would drop the degree");
    std::vector<Integer> c = f.coeffs();
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
}

IntPoly compose_power(const IntPoly& f, unsigned k)
{
    if (k == 0) throw std::invalid_argument("compose_power: k must be positive");
    if (f.is_zero()) return {};
    std::vector<Integer> out(static_cast<std::size_t>(f.degree()) * k + 1);
    for (int j = 0; j <= f.degree(); ++j) out[static_cast<std::size_t>(j) * k] = f[j];
    return IntPoly(std::move(out));
}

const IntPoly& ChebCoeffTable::operator()(std::size_t j)
{
    if (entries_.empty()) {
        entries_.push_back(IntPoly::constant(2));
        entries_.push_back(IntPoly::monomial(1, 1));
    }
    const IntPoly u = IntPoly::monomial(1, 1);
    while (entries_.size() <= j) {
        const std::size_t k = entries_.size();
        entries_.push_back(u * entries_[k - 1] - entries_[k - 2]);
    }
    return entries_[j];
}

IntPoly chebyshev_c(std::size_t j)
{
    ChebCoeffTable table;
    return table(j);
}

IntPoly reciprocal_to_half(const IntPoly& f)
{
    if (f.is_zero() || f.degree() % 2 != 0 || f.degree() < 2)
        throw std::invalid_argument("reciprocal_to_half: need a reciprocal polynomial of even degree >= 2");
    if (!is_reciprocal(f)) throw std::invalid_argument("reciprocal_to_half: polynomial is not reciprocal");
    const int n = f.degree() / 2;
    ChebCoeffTable cheb;
    IntPoly g = IntPoly::constant(f[n]);
    for (int j = 1; j <= n; ++j) g += f[n - j] * cheb(j);
    return g;
}

IntPoly half_to_reciprocal(const IntPoly& g, int n)
{
    if (n < 1 || g.degree() != n)
        throw std::invalid_argument("half_to_reciprocal: degree of g must equal n >= 1");
    const IntPoly x2p1{1, 0, 1};
    IntPoly f;
    IntPoly pw = IntPoly::constant(1); // (x^2+1)^k
    for (int k = 0; k <= n; ++k) {
        if (g[k] != 0) f += pw * IntPoly::monomial(g[k], static_cast<std::size_t>(n - k));
        pw *= x2p1;
    }
    return f;
}

namespace {

bool small_is_prime(unsigned long n)
{
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long ipow(unsigned long b, unsigned e)
{
    unsigned long r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

unsigned long phi_2aqb(unsigned long q, unsigned a, unsigned b)
{
    unsigned long phi = (q - 1) * ipow(q, b - 1);
    if (a >= 1) phi *= ipow(2, a - 1);
    return phi;
}

IntPoly cyclotomic_2aqb(unsigned long q, unsigned a, unsigned b)
{
    if (q < 3 || !small_is_prime(q)) throw std::invalid_argument("cyclotomic_2aqb: q must be an odd prime");
    if (b < 1) throw std::invalid_argument("cyclotomic_2aqb: b must be >= 1");
    std::vector<Integer> base(q);
    for (unsigned long k = 0; k < q; ++k) base[k] = (a >= 1 && (k & 1)) ? -1 : 1;
    unsigned long stretch = ipow(q, b - 1);
    if (a >= 1) stretch *= ipow(2, a - 1);
    return compose_power(IntPoly(std::move(base)), static_cast<unsigned>(stretch));
}

} // namespace recipmono
