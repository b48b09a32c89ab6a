#pragma once

/**
 * @file abpoly.hpp
 * @brief Polynomials in two noncommuting letters a, b with coefficients in Z[y].
 *
 * Words are strings over {'a','b'}; the empty word is the identity. Terms are
 * kept in a map ordered shortlex (shorter words first, then lexicographic) so
 * iteration, printing and serialization are deterministic.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chowpoly/error.hpp"
#include "chowpoly/poly.hpp"

namespace chowpoly {

class ABWord {
public:
    ABWord() = default;

    explicit ABWord(std::string letters) : letters_(std::move(letters))
    {
        for (char c : letters_)
            if (c != 'a' && c != 'b') throw InputError("ab-word may only contain 'a' and 'b': \"" + letters_ + "\"");
    }

    static ABWord a() { return ABWord("a"); }
    static ABWord b() { return ABWord("b"); }

    const std::string& str() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    std::size_t count(char letter) const
    {
        std::size_t n = 0;
        for (char c : letters_) n += c == letter;
        return n;
    }

    ABWord drop_first() const
    {
        if (letters_.empty()) throw ArithmeticError("cannot delete the first letter of the empty word");
        ABWord w;
        w.letters_ = letters_.substr(1);
        return w;
    }

    void push_back(char letter)
    {
        if (letter != 'a' && letter != 'b') throw InputError("ab-word letter must be 'a' or 'b'");
        letters_.push_back(letter);
    }

    friend ABWord operator*(const ABWord& u, const ABWord& v)
    {
        ABWord w;
        w.letters_ = u.letters_ + v.letters_;
        return w;
    }

    friend bool operator==(const ABWord&, const ABWord&) = default;

private:
    std::string letters_;
};

struct ShortLex {
    bool operator()(const ABWord& u, const ABWord& v) const
    {
        if (u.size() != v.size()) return u.size() < v.size();
        return u.str() < v.str();
    }
};

class ABPolynomial {
public:
    using TermMap = std::map<ABWord, IntPolynomial, ShortLex>;

    ABPolynomial() = default;

    ABPolynomial(const ABWord& w, IntPolynomial coeff = IntPolynomial::constant(1)) { add_term(w, std::move(coeff)); }

    static ABPolynomial scalar(IntPolynomial c) { return ABPolynomial(ABWord(), std::move(c)); }
    static ABPolynomial letter_a() { return ABPolynomial(ABWord::a()); }
    static ABPolynomial letter_b() { return ABPolynomial(ABWord::b()); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    IntPolynomial coeff(const ABWord& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? IntPolynomial{} : it->second;
    }

    void add_term(const ABWord& w, const IntPolynomial& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // True iff every word has the given length.
    bool is_homogeneous_of_degree(std::size_t degree) const
    {
        for (const auto& [w, c] : terms_)
            if (w.size() != degree) return false;
        return true;
    }

    ABPolynomial& operator+=(const ABPolynomial& o)
    {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    ABPolynomial& operator-=(const ABPolynomial& o)
    {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    ABPolynomial& operator*=(const IntPolynomial& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, coeff] : terms_) coeff *= c;
        return *this;
    }

    friend ABPolynomial operator+(ABPolynomial p, const ABPolynomial& q) { return p += q; }
    friend ABPolynomial operator-(ABPolynomial p, const ABPolynomial& q) { return p -= q; }
    friend ABPolynomial operator*(ABPolynomial p, const IntPolynomial& c) { return p *= c; }
    friend ABPolynomial operator*(const IntPolynomial& c, ABPolynomial p) { return p *= c; }

    // Word concatenation, coefficients multiply.
    friend ABPolynomial operator*(const ABPolynomial& p, const ABPolynomial& q)
    {
        ABPolynomial r;
        for (const auto& [u, cu] : p.terms_)
            for (const auto& [v, cv] : q.terms_) r.add_term(u * v, cu * cv);
        return r;
    }

    friend bool operator==(const ABPolynomial&, const ABPolynomial&) = default;

private:
    TermMap terms_;
};

inline ABPolynomial word_concat_sum(const ABPolynomial& p, const ABPolynomial& q) { return p * q; }

/// wt_S = w_0 ... w_{n-1} with w_k = b for k in mask, a - b otherwise.
inline ABPolynomial wt_weight_mask(std::uint64_t mask, std::size_t n)
{
    const ABPolynomial b = ABPolynomial::letter_b();
    const ABPolynomial a_minus_b = ABPolynomial::letter_a() - b;
    ABPolynomial acc = ABPolynomial::scalar(IntPolynomial::constant(1));
    for (std::size_t k = 0; k < n; ++k) acc = acc * (((mask >> k) & 1U) ? b : a_minus_b);
    return acc;
}

inline ABPolynomial wt_weight(const std::set<std::size_t>& S, std::size_t n)
{
    if (n >= 64) throw InputError("wt_weight: rank too large");
    std::uint64_t mask = 0;
    for (std::size_t k : S) {
        if (k >= n)
            throw InputError("wt_weight: index " + std::to_string(k) + " outside {0," + "...," +
                             std::to_string(n == 0 ? 0 : n - 1) + "}");
        mask |= std::uint64_t{1} << k;
    }
    return wt_weight_mask(mask, n);
}

/// Deletes the first letter of every word; coefficients of merging words add.
inline ABPolynomial iota(const ABPolynomial& p)
{
    ABPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) throw ArithmeticError("iota: term with the empty word has no first letter");
        r.add_term(w.drop_first(), c);
    }
    return r;
}

/// The substitution relating the ab-index to the extended ab-index. Each
/// factor ab of a word (matched greedily left to right; the pattern cannot
/// overlap itself) becomes ab + y ba + y ab + y^2 ba. The letters of the
/// original word not consumed by such a block become a + y b and b + y a.
inline ABPolynomial omega(const ABPolynomial& p)
{
    const IntPolynomial one = IntPolynomial::constant(1);
    const IntPolynomial y = IntPolynomial::x();
    const IntPolynomial y2 = IntPolynomial::monomial(1, 2);
    const ABWord ab("ab"), ba("ba");

    ABPolynomial block(ab, one + y);
    block.add_term(ba, y + y2);
    ABPolynomial a_sub(ABWord::a(), one);
    a_sub.add_term(ABWord::b(), y);
    ABPolynomial b_sub(ABWord::b(), one);
    b_sub.add_term(ABWord::a(), y);

    ABPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        ABPolynomial acc = ABPolynomial::scalar(c);
        for (std::size_t i = 0; i < w.size();) {
            if (w[i] == 'a' && i + 1 < w.size() && w[i + 1] == 'b') {
                acc = acc * block;
                i += 2;
            } else {
                acc = acc * (w[i] == 'a' ? a_sub : b_sub);
                ++i;
            }
        }
        r += acc;
    }
    return r;
}

/// Commutative evaluation: y, a, b replaced by polynomials in one variable.
inline IntPolynomial evaluate(const ABPolynomial& p, const IntPolynomial& y_val, const IntPolynomial& a_val,
                              const IntPolynomial& b_val)
{
    std::vector<IntPolynomial> a_pows{IntPolynomial::constant(1)};
    std::vector<IntPolynomial> b_pows{IntPolynomial::constant(1)};
    auto power = [](std::vector<IntPolynomial>& cache, const IntPolynomial& base, std::size_t k) -> const IntPolynomial& {
        while (cache.size() <= k) cache.push_back(cache.back() * base);
        return cache[k];
    };
    IntPolynomial acc;
    for (const auto& [w, c] : p.terms()) {
        const std::size_t na = w.count('a');
        acc += c.compose(y_val) * power(a_pows, a_val, na) * power(b_pows, b_val, w.size() - na);
    }
    return acc;
}

/// Sets y = 0 in every coefficient.
inline ABPolynomial at_y_zero(const ABPolynomial& p)
{
    ABPolynomial r;
    for (const auto& [w, c] : p.terms()) r.add_term(w, IntPolynomial::constant(c.coeff(0)));
    return r;
}

/// Terms joined by " + " / " - ": "a + y*b", "(1 + y)", "2*ab", "-(1 + y)*ba".
inline std::string to_string(const ABPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        IntPolynomial coeff = c;
        bool negative = false;
        const bool monomial_coeff =
            std::count_if(c.coeffs().begin(), c.coeffs().end(), [](const BigInt& v) { return v != 0; }) == 1;
        if (monomial_coeff && c.leading() < 0) {
            negative = true;
            coeff = -c;
        }
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;

        std::string cs = to_string(coeff, "y", TermOrder::Ascending);
        if (w.empty()) {
            out += monomial_coeff ? cs : "(" + cs + ")";
            continue;
        }
        if (coeff == IntPolynomial::constant(1)) {
            out += w.str();
        } else {
            out += (monomial_coeff ? cs : "(" + cs + ")") + "*" + w.str();
        }
    }
    return out;
}

}  // namespace chowpoly
