#pragma once

/**
 * @file chow.hpp
 * @brief Chow and augmented Chow polynomials of graded posets.
 *
 * Three independent algorithms:
 *   - by_chains:   the defining chain sums of reduced characteristic
 *                  polynomials (any graded poset);
 *   - by_descents: maximal chains of an R-labeling with isolated descent set,
 *                  each contributing x^des (x+1)^(n-1-2des), resp. (x+1)^(n-2des);
 *   - by_extab:    exPsi~(-x,1,x) and exPsi(-x,1,x) divided by (1-x)^n
 *                  (any graded poset).
 * Every algorithm returns 1 for a rank-0 poset.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chowpoly/abpoly.hpp"
#include "chowpoly/error.hpp"
#include "chowpoly/extab.hpp"
#include "chowpoly/parallel.hpp"
#include "chowpoly/poly.hpp"
#include "chowpoly/poset.hpp"
#include "chowpoly/rlabel.hpp"

namespace chowpoly {

namespace detail {

inline IntPolynomial reduced_char_chain_sum(const GradedPoset& P, std::span<const Element> starts,
                                            const std::vector<IntPolynomial>& initial)
{
    auto step = [&](const IntPolynomial& acc, Element from, Element to) { return acc * P.interval_reduced_char(from, to); };
    auto task = [&](std::size_t i) {
        IntPolynomial local;
        fold_chains_from(P, starts[i], initial[i], step, [&](const IntPolynomial& prod, ChainView) { local += prod; });
        return local;
    };
    return parallel_fold(starts.size(), IntPolynomial{}, task,
                         [](IntPolynomial& acc, IntPolynomial&& part) { acc += part; });
}

// Sum of x^des (x+1)^(n - shift - 2des) over maximal chains with isolated
// descent set; when skip_first, chains with 1 in Des are excluded.
inline IntPolynomial descent_expansion(const GradedPoset& P, const EdgeLabeling& lambda, bool skip_first,
                                       std::size_t shift)
{
    lambda.require_complete(P);
    const std::size_t n = P.rank();
    std::vector<BigInt> by_des(n + 1);
    for_each_maximal_chain(P, [&](ChainView c) {
        const LabelWord w = label_word(P, lambda, c);
        const std::uint64_t des = descent_mask(w);
        if (!is_isolated_mask(des)) return;
        if (skip_first && (des & 1U)) return;
        const std::size_t d = static_cast<std::size_t>(__builtin_popcountll(des));
        if (2 * d + shift > n)
            throw ArithmeticError("descent expansion: des(F) = " + std::to_string(d) + " exceeds the admissible bound");
        by_des[d] += 1;
    });
    IntPolynomial out;
    for (std::size_t d = 0; d < by_des.size(); ++d) {
        if (by_des[d] == 0) continue;
        out += IntPolynomial::monomial(by_des[d], d) * one_plus_x_pow(n - shift - 2 * d);
    }
    return out;
}

inline IntPolynomial divide_by_one_minus_x_pow(const IntPolynomial& p, std::size_t n)
{
    return exact_div(p, IntPolynomial{1, -1}.pow(n));
}

}  // namespace detail

/// Sum over chains 0 = C_1 < ... < C_{k+1} = 1 of the chain reduced
/// characteristic polynomial.
inline IntPolynomial chow_by_chains(const GradedPoset& P)
{
    if (P.rank() == 0) return IntPolynomial::constant(1);
    std::vector<Element> starts;
    std::vector<IntPolynomial> initial;
    for (Element s : P.up_set(P.bottom())) {
        if (s == P.bottom()) continue;
        starts.push_back(s);
        initial.push_back(P.interval_reduced_char(P.bottom(), s));
    }
    return detail::reduced_char_chain_sum(P, starts, initial);
}

/// Sum over all chains C ending at the top of x^rank(C_1) times the chain
/// reduced characteristic polynomial; the singleton {1} contributes x^n.
inline IntPolynomial augmented_chow_by_chains(const GradedPoset& P)
{
    if (P.rank() == 0) return IntPolynomial::constant(1);
    std::vector<Element> starts;
    std::vector<IntPolynomial> initial;
    for (Element s = 0; s < P.size(); ++s) {
        starts.push_back(s);
        initial.push_back(IntPolynomial::monomial(1, P.rank(s)));
    }
    return detail::reduced_char_chain_sum(P, starts, initial);
}

inline IntPolynomial chow_by_descents(const GradedPoset& P, const EdgeLabeling& lambda)
{
    if (P.rank() == 0) return IntPolynomial::constant(1);
    return detail::descent_expansion(P, lambda, true, 1);
}

inline IntPolynomial augmented_chow_by_descents(const GradedPoset& P, const EdgeLabeling& lambda)
{
    if (P.rank() == 0) return IntPolynomial::constant(1);
    return detail::descent_expansion(P, lambda, false, 0);
}

namespace detail {

inline const IntPolynomial& minus_x()
{
    static const IntPolynomial v{0, -1};
    return v;
}

}  // namespace detail

/// exPsi~(-x, 1, x) / (1-x)^n. A remainder is reported as ArithmeticError.
inline IntPolynomial chow_by_extab(const GradedPoset& P)
{
    if (P.rank() == 0) return IntPolynomial::constant(1);
    const IntPolynomial num =
        evaluate(ext_ab_index_truncated(P), detail::minus_x(), IntPolynomial::constant(1), IntPolynomial::x());
    return detail::divide_by_one_minus_x_pow(num, P.rank());
}

/// exPsi(-x, 1, x) / (1-x)^n.
inline IntPolynomial augmented_chow_by_extab(const GradedPoset& P)
{
    if (P.rank() == 0) return IntPolynomial::constant(1);
    const IntPolynomial num = evaluate(ext_ab_index(P), detail::minus_x(), IntPolynomial::constant(1), IntPolynomial::x());
    return detail::divide_by_one_minus_x_pow(num, P.rank());
}

inline bool symmetry_check(const IntPolynomial& h, std::size_t center) { return is_palindromic(h, center); }

}  // namespace chowpoly
