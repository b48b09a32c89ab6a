#pragma once

/**
 * @file extab.hpp
 * @brief The Poincare-extended ab-index and its relatives.
 *
 * Two independent routes to the extended index are provided:
 *   - ext_ab_index: the chain sum  sum_C Poin_{P,C}(y) wt_C(a,b)  over all
 *     chains ending at the top (including the singleton chain);
 *   - ext_ab_via_labeling: sum over maximal chains F and subsets E of
 *     y^|E| u_{F,E}(a,b), valid for R-labeled posets.
 * The chain sum is grouped by rank set before the weights are expanded, so
 * each wt_S is built once.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowpoly/abpoly.hpp"
#include "chowpoly/error.hpp"
#include "chowpoly/parallel.hpp"
#include "chowpoly/poset.hpp"
#include "chowpoly/rlabel.hpp"

namespace chowpoly {

namespace detail {

inline void require_positive_rank(const GradedPoset& P, const char* what)
{
    if (P.rank() == 0) throw InputError(std::string(what) + " requires a poset of rank >= 1");
    if (P.rank() >= 32) throw InputError(std::string(what) + ": rank too large");
}

// Sum of chain Poincare polynomials grouped by the rank set of C minus its top.
inline std::vector<IntPolynomial> chain_poincare_by_rank_set(const GradedPoset& P, bool require_bottom)
{
    const std::size_t n = P.rank();
    using Buckets = std::vector<IntPolynomial>;
    struct State {
        IntPolynomial poin;
        std::uint64_t mask;
    };
    std::vector<Element> starts;
    if (require_bottom)
        starts.push_back(P.bottom());
    else
        for (Element s = 0; s < P.size(); ++s) starts.push_back(s);

    auto task = [&](std::size_t i) {
        Buckets local(std::size_t{1} << n);
        fold_chains_from(
            P, starts[i], State{IntPolynomial::constant(1), 0},
            [&](const State& s, Element from, Element to) {
                return State{s.poin * P.interval_poincare(from, to), s.mask | (std::uint64_t{1} << P.rank(from))};
            },
            [&](const State& s, ChainView) { local[s.mask] += s.poin; });
        return local;
    };
    auto combine = [](Buckets& acc, Buckets&& part) {
        for (std::size_t m = 0; m < acc.size(); ++m) acc[m] += part[m];
    };
    return parallel_fold(starts.size(), Buckets(std::size_t{1} << n), task, combine);
}

inline ABPolynomial expand_by_rank_set(const std::vector<IntPolynomial>& buckets, std::size_t n)
{
    ABPolynomial out;
    for (std::size_t m = 0; m < buckets.size(); ++m) {
        if (buckets[m].is_zero()) continue;
        out += wt_weight_mask(m, n) * buckets[m];
    }
    return out;
}

}  // namespace detail

/// sum over chains C ending at the top of Poin_{P,C}(y) * wt_C(a, b).
inline ABPolynomial ext_ab_index(const GradedPoset& P)
{
    detail::require_positive_rank(P, "ext_ab_index");
    return detail::expand_by_rank_set(detail::chain_poincare_by_rank_set(P, false), P.rank());
}

/// Same chain sum restricted to chains starting at the bottom. Equals
/// b * iota(ext_ab_index(P)).
inline ABPolynomial bottom_anchored_ext_sum(const GradedPoset& P)
{
    detail::require_positive_rank(P, "bottom_anchored_ext_sum");
    return detail::expand_by_rank_set(detail::chain_poincare_by_rank_set(P, true), P.rank());
}

/// The ab-index, sum over chains of wt_C, from chain counts per rank set.
inline ABPolynomial ab_index(const GradedPoset& P)
{
    detail::require_positive_rank(P, "ab_index");
    const std::size_t n = P.rank();
    std::vector<BigInt> counts(std::size_t{1} << n);
    for (Element s = 0; s < P.size(); ++s) {
        fold_chains_from(
            P, s, std::uint64_t{0},
            [&](std::uint64_t mask, Element from, Element) { return mask | (std::uint64_t{1} << P.rank(from)); },
            [&](std::uint64_t mask, ChainView) { counts[mask] += 1; });
    }
    ABPolynomial out;
    for (std::size_t m = 0; m < counts.size(); ++m)
        if (counts[m] != 0) out += wt_weight_mask(m, n) * IntPolynomial::constant(counts[m]);
    return out;
}

inline ABPolynomial ext_ab_index_truncated(const GradedPoset& P) { return iota(ext_ab_index(P)); }

/// sum over maximal chains F and E subset {1..n} of y^|E| u_{F,E}(a, b).
/// Meaningful (equal to ext_ab_index) when lambda is an R-labeling.
inline ABPolynomial ext_ab_via_labeling(const GradedPoset& P, const EdgeLabeling& lambda)
{
    detail::require_positive_rank(P, "ext_ab_via_labeling");
    lambda.require_complete(P);
    const std::size_t n = P.rank();
    using Tally = std::map<std::string, std::vector<BigInt>>;

    const auto first = P.upper_covers(P.bottom());
    auto task = [&](std::size_t i) {
        Tally local;
        LabelWord w(n);
        w[0] = lambda.at_slot(P.bottom(), i);
        auto rec = [&](auto& self, Element cur, std::size_t depth) -> void {
            if (depth == n) {
                for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
                    auto& slot = local[u_monomial_mask(w, e).str()];
                    if (slot.empty()) slot.resize(n + 1);
                    slot[static_cast<std::size_t>(__builtin_popcountll(e))] += 1;
                }
                return;
            }
            const auto up = P.upper_covers(cur);
            for (std::size_t j = 0; j < up.size(); ++j) {
                w[depth] = lambda.at_slot(cur, j);
                self(self, up[j], depth + 1);
            }
        };
        rec(rec, first[i], 1);
        return local;
    };
    auto combine = [](Tally& acc, Tally&& part) {
        for (auto& [word, ys] : part) {
            auto& slot = acc[word];
            if (slot.empty()) slot.resize(ys.size());
            for (std::size_t k = 0; k < ys.size(); ++k) slot[k] += ys[k];
        }
    };
    Tally tally = parallel_fold(first.size(), Tally{}, task, combine);
    ABPolynomial out;
    for (auto& [word, ys] : tally) out.add_term(ABWord(word), IntPolynomial(std::move(ys)));
    return out;
}

/// The ab-index as sum over maximal chains of u_{F,empty}.
inline ABPolynomial ab_index_via_labeling(const GradedPoset& P, const EdgeLabeling& lambda)
{
    detail::require_positive_rank(P, "ab_index_via_labeling");
    lambda.require_complete(P);
    ABPolynomial out;
    for_each_maximal_chain(P, [&](ChainView c) {
        out.add_term(u_monomial_mask(label_word(P, lambda, c), 0), IntPolynomial::constant(1));
    });
    return out;
}

/// omega(ab_index(P)) == ext_ab_index(P), where the ab-index is also required
/// to agree with its expansion over the labeling's maximal chains.
inline bool omega_identity_check(const GradedPoset& P, const EdgeLabeling& lambda)
{
    const ABPolynomial psi = ab_index(P);
    if (psi != ab_index_via_labeling(P, lambda)) return false;
    return omega(psi) == ext_ab_index(P);
}

// ---------------------------------------------------------------------------
// Coarse flag Hilbert-Poincare series

struct RationalPair {
    IntPolynomial numerator;
    IntPolynomial denominator;
};

/// (exPsi~(y_val, 1, t_val), (1 - t_val)^n), unreduced.
inline RationalPair coarse_flag_hp(const GradedPoset& P, const IntPolynomial& y_val, const IntPolynomial& t_val)
{
    const ABPolynomial truncated = ext_ab_index_truncated(P);
    return {evaluate(truncated, y_val, IntPolynomial::constant(1), t_val),
            (IntPolynomial::constant(1) - t_val).pow(P.rank())};
}

/// Numerator exPsi~(y, 1, t) in two variables; entry j is the coefficient of
/// t^j as a polynomial in y. The denominator is (1 - t)^rank.
struct CoarseFlagNumerator {
    std::vector<IntPolynomial> by_t_degree;
    std::size_t rank = 0;
};

inline CoarseFlagNumerator coarse_flag_hp_symbolic(const GradedPoset& P)
{
    const ABPolynomial truncated = ext_ab_index_truncated(P);
    CoarseFlagNumerator out{std::vector<IntPolynomial>(P.rank()), P.rank()};
    for (const auto& [w, c] : truncated.terms()) out.by_t_degree.at(w.count('b')) += c;
    while (!out.by_t_degree.empty() && out.by_t_degree.back().is_zero()) out.by_t_degree.pop_back();
    return out;
}

/// "1 + 3y + 2y^2 + 2t + 3y*t + y^2*t": ascending in t, then in y.
inline std::string to_string(const CoarseFlagNumerator& num)
{
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < num.by_t_degree.size(); ++j) {
        const auto& cs = num.by_t_degree[j].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i] == 0) continue;
            BigInt c = cs[i];
            const bool negative = c < 0;
            if (negative) c = -c;
            out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
            first = false;
            std::string vars;
            if (i > 0) vars += i == 1 ? "y" : "y^" + std::to_string(i);
            if (j > 0) vars += (vars.empty() ? "" : "*") + (j == 1 ? std::string("t") : "t^" + std::to_string(j));
            if (vars.empty())
                out += c.str();
            else
                out += (c == 1 ? "" : c.str()) + vars;
        }
    }
    return first ? "0" : out;
}

}  // namespace chowpoly
