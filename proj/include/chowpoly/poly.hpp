#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over arbitrary-precision integers.
 *
 * Coefficients are stored lowest degree first with trailing zeros trimmed,
 * so the zero polynomial has no coefficients at all and its degree is
 * reported as std::nullopt (minus infinity).
 *
 * Besides ring arithmetic this header carries the positivity toolkit:
 * palindromicity about an explicit center, unimodality, expansion in the
 * gamma basis x^k (1+x)^(d-2k), and an exact Sturm-sequence test for
 * real-rootedness.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chowpoly/error.hpp"

namespace chowpoly {

using BigInt = boost::multiprecision::cpp_int;

class IntPolynomial {
public:
    IntPolynomial() = default;

    // Coefficients lowest degree first: {1, 2} is 1 + 2x.
    IntPolynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

    static IntPolynomial monomial(BigInt c, std::size_t k)
    {
        std::vector<BigInt> cs(k + 1);
        cs[k] = std::move(c);
        return IntPolynomial(std::move(cs));
    }

    static IntPolynomial x() { return monomial(1, 1); }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const noexcept
    {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    const BigInt& leading() const
    {
        if (coeffs_.empty()) throw ArithmeticError("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    BigInt operator()(const BigInt& at) const
    {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    // p(inner(x)), Horner style.
    IntPolynomial compose(const IntPolynomial& inner) const
    {
        IntPolynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= inner;
            acc += constant(*it);
        }
        return acc;
    }

    // x^center * p(1/x). Requires center >= degree.
    IntPolynomial reversed(std::size_t center) const
    {
        if (is_zero()) return {};
        if (*degree() > center) throw ArithmeticError("reversal center below polynomial degree");
        std::vector<BigInt> cs(center + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[center - i] = coeffs_[i];
        return IntPolynomial(std::move(cs));
    }

    IntPolynomial pow(std::size_t e) const
    {
        IntPolynomial result = constant(1);
        IntPolynomial base = *this;
        while (e > 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e > 0) base *= base;
        }
        return result;
    }

    IntPolynomial& operator+=(const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator*=(const IntPolynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    IntPolynomial& operator*=(const BigInt& c)
    {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator-(IntPolynomial a)
    {
        for (auto& v : a.coeffs_) v = -v;
        return a;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(cs));
    }

    friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
    friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
inline IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

// (1 + x)^k
inline IntPolynomial one_plus_x_pow(std::size_t k) { return IntPolynomial{1, 1}.pow(k); }

/// Quotient r with r * divisor == dividend. Throws ArithmeticError when the
/// division over the integers leaves a remainder.
inline IntPolynomial exact_div(const IntPolynomial& dividend, const IntPolynomial& divisor)
{
    if (divisor.is_zero()) throw ArithmeticError("division by the zero polynomial");
    if (dividend.is_zero()) return {};
    const std::size_t dd = *divisor.degree();
    if (*dividend.degree() < dd) throw ArithmeticError("exact_div: nonzero remainder (dividend degree below divisor)");

    std::vector<BigInt> rem = dividend.coeffs();
    const auto& dv = divisor.coeffs();
    const BigInt& lc = dv.back();
    std::vector<BigInt> quot(rem.size() - dd);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& top = rem[k + dd];
        if (top == 0) continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(top, lc, q, r);
        if (r != 0) throw ArithmeticError("exact_div: nonzero remainder (leading coefficient not divisible)");
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * dv[j];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) throw ArithmeticError("exact_div: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

// ---------------------------------------------------------------------------
// Formatting and parsing

enum class TermOrder { Descending, Ascending };

inline std::string to_string(const IntPolynomial& p, std::string_view var = "x",
                             TermOrder order = TermOrder::Descending)
{
    if (p.is_zero()) return "0";
    const auto& cs = p.coeffs();
    std::vector<std::size_t> powers;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) powers.push_back(i);
    if (order == TermOrder::Descending) std::reverse(powers.begin(), powers.end());

    std::string out;
    bool first = true;
    for (std::size_t k : powers) {
        BigInt c = cs[k];
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (k == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str();
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

/// Parses expressions such as "-x", "1 - x^2", "3*x^2 + 2x - 7" in a single
/// variable. Throws InputError on anything else.
inline IntPolynomial parse_polynomial(std::string_view text, char var = 'x')
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty polynomial expression");

    auto fail = [&](const std::string& why) -> InputError {
        return InputError("cannot parse polynomial '" + std::string(text) + "': " + why);
    };

    IntPolynomial result;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;

        BigInt coeff = 1;
        bool have_digits = false;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) {
            coeff = BigInt(s.substr(start, i - start));
            have_digits = true;
        }
        std::size_t power = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_digits) throw fail("'*' without coefficient");
            ++i;
            if (i >= s.size() || s[i] != var) throw fail("expected variable after '*'");
        }
        if (i < s.size() && s[i] == var) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t estart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == estart) throw fail("missing exponent");
                power = std::stoul(s.substr(estart, i - estart));
            }
        } else if (!have_digits) {
            throw fail("expected a term");
        }
        result += IntPolynomial::monomial(sign * coeff, power);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Positivity toolkit

/// True iff coeff_i == coeff_{center - i} for all i. A polynomial whose degree
/// exceeds the center is never palindromic about it.
inline bool is_palindromic(const IntPolynomial& p, std::size_t center_degree)
{
    if (p.is_zero()) return true;
    if (*p.degree() > center_degree) return false;
    for (std::size_t i = 0; i <= center_degree / 2; ++i)
        if (p.coeff(i) != p.coeff(center_degree - i)) return false;
    return true;
}

inline bool is_unimodal(const IntPolynomial& p)
{
    const auto& cs = p.coeffs();
    std::size_t i = 1;
    while (i < cs.size() && cs[i - 1] <= cs[i]) ++i;
    while (i < cs.size() && cs[i - 1] >= cs[i]) ++i;
    return i >= cs.size();
}

struct GammaVector {
    std::size_t center_degree = 0;
    std::vector<BigInt> gammas;  // gammas[k] multiplies x^k (1+x)^(d-2k)

    friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// Sum of gamma_k x^k (1+x)^(d-2k).
inline IntPolynomial reconstruct(const GammaVector& g)
{
    IntPolynomial acc;
    for (std::size_t k = 0; k < g.gammas.size(); ++k) {
        if (g.gammas[k] == 0) continue;
        acc += IntPolynomial::monomial(g.gammas[k], k) * one_plus_x_pow(g.center_degree - 2 * k);
    }
    return acc;
}

/// Coordinates of a palindromic polynomial in the gamma basis, obtained by
/// peeling off the lowest remaining coefficient. Throws ArithmeticError if p is
/// not palindromic about center_degree.
inline GammaVector gamma_vector(const IntPolynomial& p, std::size_t center_degree)
{
    if (!is_palindromic(p, center_degree))
        throw ArithmeticError("gamma_vector: polynomial " + to_string(p) + " is not palindromic about degree " +
                              std::to_string(center_degree));
    GammaVector g{center_degree, std::vector<BigInt>(center_degree / 2 + 1)};
    IntPolynomial rest = p;
    for (std::size_t k = 0; k <= center_degree / 2; ++k) {
        g.gammas[k] = rest.coeff(k);
        if (g.gammas[k] != 0)
            rest -= IntPolynomial::monomial(g.gammas[k], k) * one_plus_x_pow(center_degree - 2 * k);
    }
    if (!rest.is_zero()) throw ArithmeticError("gamma_vector: elimination left a remainder");
    return g;
}

inline bool is_gamma_positive(const GammaVector& g)
{
    return std::all_of(g.gammas.begin(), g.gammas.end(), [](const BigInt& v) { return v >= 0; });
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rational>;  // lowest first, trimmed

inline void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly rat_remainder(RatPoly a, const RatPoly& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline RatPoly rat_quotient(RatPoly a, const RatPoly& b)
{
    if (a.size() < b.size()) return {};
    RatPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return q;
}

inline RatPoly rat_derivative(const RatPoly& p)
{
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
    trim(d);
    return d;
}

inline RatPoly rat_gcd(RatPoly a, RatPoly b)
{
    while (!b.empty()) {
        RatPoly r = rat_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Distinct real roots of p via Sturm's theorem: sign changes at -inf minus +inf.
inline std::size_t sturm_distinct_real_roots(const RatPoly& p)
{
    std::vector<RatPoly> seq{p, rat_derivative(p)};
    while (!seq.back().empty()) {
        RatPoly r = rat_remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    if (seq.back().empty()) seq.pop_back();

    auto changes = [&](bool at_plus_infinity) {
        std::size_t count = 0;
        int prev = 0;
        for (const auto& s : seq) {
            int sign = s.back() > 0 ? 1 : -1;
            if (!at_plus_infinity && (s.size() - 1) % 2 == 1) sign = -sign;
            if (prev != 0 && sign != prev) ++count;
            prev = sign;
        }
        return count;
    };
    return changes(false) - changes(true);
}

}  // namespace detail

/// True iff every complex root of p is real. Decided exactly: the square-free
/// part p / gcd(p, p') has as many distinct real roots (Sturm count) as its degree.
inline bool real_roots_diagnostic(const IntPolynomial& p)
{
    if (p.is_zero()) throw ArithmeticError("real_roots_diagnostic: zero polynomial");
    detail::RatPoly rp(p.coeffs().begin(), p.coeffs().end());
    if (rp.size() == 1) return true;
    detail::RatPoly g = detail::rat_gcd(rp, detail::rat_derivative(rp));
    detail::RatPoly squarefree = detail::rat_quotient(rp, g);
    return detail::sturm_distinct_real_roots(squarefree) == squarefree.size() - 1;
}

}  // namespace chowpoly
