#pragma once

/**
 * @file poset.hpp
 * @brief Finite bounded graded posets, Moebius function, intervals and chains.
 *
 * A GradedPoset is built from its cover relations. Ranks are computed (longest
 * path from the unique minimum) and then validated: every cover must raise the
 * rank by exactly one.
 *
 * Order, Moebius and interval polynomial data are memoized per lower element
 * and filled on first use under std::call_once, so a poset may be shared by
 * concurrent readers. Copies share the memo.
 *
 * Chains follow the convention that they always end in the maximum element.
 * Enumeration is streaming: callers pass a visitor that receives each chain as
 * a span, in lexicographic order of element indices along the search tree.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chowpoly/error.hpp"
#include "chowpoly/poly.hpp"

namespace chowpoly {

using Element = std::uint32_t;

struct Cover {
    Element lower = 0;
    Element upper = 0;

    friend bool operator==(const Cover&, const Cover&) = default;
    friend auto operator<=>(const Cover&, const Cover&) = default;
};

using ChainView = std::span<const Element>;
using Chain = std::vector<Element>;

namespace detail {

struct ReachRow {
    std::once_flag once;
    std::vector<Element> up;          // elements >= F, ascending index
    std::vector<std::int32_t> where;  // element -> position in `up`, or -1
};

struct IntervalRow {
    std::once_flag once;
    std::vector<std::int64_t> mobius;           // indexed like ReachRow::up
    std::vector<IntPolynomial> poincare;        // Poin of [F, G]
    std::vector<IntPolynomial> reduced_char;    // reduced char of [F, G]; zero when G == F
};

struct PosetMemo {
    explicit PosetMemo(std::size_t n)
        : reach(std::make_unique<ReachRow[]>(n)), intervals(std::make_unique<IntervalRow[]>(n))
    {
    }
    std::unique_ptr<ReachRow[]> reach;
    std::unique_ptr<IntervalRow[]> intervals;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("Moebius value exceeds 64-bit range");
    return r;
}

}  // namespace detail

class GradedPoset {
public:
    /// Validates and builds. Names default to decimal indices. Throws InputError
    /// naming the problem: out-of-range or duplicate cover, several minima or
    /// maxima, a cycle, or a cover that does not raise the rank by one.
    static GradedPoset from_covers(std::size_t n_elements, std::span<const Cover> covers,
                                   std::vector<std::string> names = {})
    {
        if (n_elements == 0) throw InputError("poset must have at least one element");
        if (n_elements > std::size_t{1} << 30) throw InputError("poset too large");
        if (names.empty()) {
            names.reserve(n_elements);
            for (std::size_t i = 0; i < n_elements; ++i) names.push_back(std::to_string(i));
        }
        if (names.size() != n_elements) throw InputError("element name count does not match element count");

        GradedPoset P;
        P.names_ = std::move(names);
        for (std::size_t i = 0; i < n_elements; ++i) {
            if (!P.index_.emplace(P.names_[i], static_cast<Element>(i)).second)
                throw InputError("duplicate element id '" + P.names_[i] + "'");
        }
        P.upper_.resize(n_elements);
        P.lower_.resize(n_elements);
        for (const Cover& c : covers) {
            if (c.lower >= n_elements || c.upper >= n_elements)
                throw InputError("cover (" + std::to_string(c.lower) + "," + std::to_string(c.upper) +
                                 ") references a nonexistent element");
            if (c.lower == c.upper) throw InputError("cover of element " + P.names_[c.lower] + " with itself");
            P.upper_[c.lower].push_back(c.upper);
            P.lower_[c.upper].push_back(c.lower);
        }
        for (std::size_t i = 0; i < n_elements; ++i) {
            auto& up = P.upper_[i];
            std::sort(up.begin(), up.end());
            if (std::adjacent_find(up.begin(), up.end()) != up.end())
                throw InputError("duplicate cover out of element '" + P.names_[i] + "'");
            std::sort(P.lower_[i].begin(), P.lower_[i].end());
        }

        std::vector<Element> minima, maxima;
        for (Element e = 0; e < n_elements; ++e) {
            if (P.lower_[e].empty()) minima.push_back(e);
            if (P.upper_[e].empty()) maxima.push_back(e);
        }
        auto list = [&](const std::vector<Element>& es) {
            std::string s;
            for (std::size_t i = 0; i < es.size() && i < 5; ++i) s += (i ? ", " : "") + P.names_[es[i]];
            if (es.size() > 5) s += ", ...";
            return s;
        };
        if (minima.size() != 1)
            throw InputError("poset must have a unique minimum; found " + std::to_string(minima.size()) +
                             (minima.empty() ? "" : " (" + list(minima) + ")"));
        if (maxima.size() != 1)
            throw InputError("poset must have a unique maximum; found " + std::to_string(maxima.size()) +
                             (maxima.empty() ? "" : " (" + list(maxima) + ")"));
        P.bottom_ = minima.front();
        P.top_ = maxima.front();

        // Kahn's algorithm; ranks are longest-path lengths from the minimum.
        std::vector<std::size_t> indegree(n_elements);
        for (Element e = 0; e < n_elements; ++e) indegree[e] = P.lower_[e].size();
        std::vector<Element> order{P.bottom_};
        P.rank_.assign(n_elements, 0);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const Element e = order[head];
            for (Element u : P.upper_[e]) {
                P.rank_[u] = std::max(P.rank_[u], P.rank_[e] + 1);
                if (--indegree[u] == 0) order.push_back(u);
            }
        }
        if (order.size() != n_elements) throw InputError("cover relations contain a cycle");

        for (Element e = 0; e < n_elements; ++e) {
            for (Element u : P.upper_[e]) {
                if (P.rank_[u] != P.rank_[e] + 1)
                    throw InputError("non-graded cover (" + P.names_[e] + "," + P.names_[u] + "): rank jumps from " +
                                     std::to_string(P.rank_[e]) + " to " + std::to_string(P.rank_[u]));
            }
        }
        P.memo_ = std::make_shared<detail::PosetMemo>(n_elements);
        return P;
    }

    static GradedPoset from_covers(std::size_t n_elements, std::initializer_list<Cover> covers,
                                   std::vector<std::string> names = {})
    {
        return from_covers(n_elements, std::span<const Cover>(covers.begin(), covers.size()), std::move(names));
    }

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t rank() const noexcept { return rank_[top_]; }
    std::size_t rank(Element e) const { return rank_.at(e); }
    Element bottom() const noexcept { return bottom_; }
    Element top() const noexcept { return top_; }

    std::span<const Element> upper_covers(Element e) const { return upper_.at(e); }
    std::span<const Element> lower_covers(Element e) const { return lower_.at(e); }

    bool is_cover(Element lo, Element hi) const
    {
        const auto& up = upper_.at(lo);
        return std::binary_search(up.begin(), up.end(), hi);
    }

    /// All covers sorted by (lower, upper).
    std::vector<Cover> covers() const
    {
        std::vector<Cover> out;
        for (Element e = 0; e < size(); ++e)
            for (Element u : upper_[e]) out.push_back({e, u});
        return out;
    }

    std::size_t cover_count() const
    {
        std::size_t n = 0;
        for (const auto& up : upper_) n += up.size();
        return n;
    }

    const std::string& name(Element e) const { return names_.at(e); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    Element index_of(const std::string& name) const
    {
        auto it = index_.find(name);
        if (it == index_.end()) throw InputError("unknown element id '" + name + "'");
        return it->second;
    }

    /// Elements G >= F, ascending by index.
    std::span<const Element> up_set(Element f) const { return reach_row(f).up; }

    bool leq(Element a, Element b) const
    {
        if (a == b) return true;
        if (rank_.at(a) >= rank_.at(b)) return false;
        return reach_row(a).where[b] >= 0;
    }

    bool less(Element a, Element b) const { return a != b && leq(a, b); }

    std::int64_t mobius(Element f, Element g) const
    {
        const auto& row = reach_row(f);
        const std::int32_t pos = row.where.at(g);
        if (pos < 0) throw InputError("mobius: " + names_[f] + " is not below " + names_[g]);
        return interval_row(f).mobius[pos];
    }

    // Poincare polynomial of the interval [f, g].
    const IntPolynomial& interval_poincare(Element f, Element g) const
    {
        const std::int32_t pos = position_or_throw(f, g, "interval_poincare");
        return interval_row(f).poincare[pos];
    }

    // Reduced characteristic polynomial of [f, g]; requires f < g.
    const IntPolynomial& interval_reduced_char(Element f, Element g) const
    {
        if (f == g) throw InputError("reduced characteristic polynomial of a rank-0 interval is undefined");
        const std::int32_t pos = position_or_throw(f, g, "interval_reduced_char");
        return interval_row(f).reduced_char[pos];
    }

private:
    GradedPoset() = default;

    std::int32_t position_or_throw(Element f, Element g, const char* what) const
    {
        const std::int32_t pos = reach_row(f).where.at(g);
        if (pos < 0) throw InputError(std::string(what) + ": " + names_[f] + " is not below " + names_[g]);
        return pos;
    }

    const detail::ReachRow& reach_row(Element f) const
    {
        if (f >= size()) throw InputError("element index out of range");
        detail::ReachRow& row = memo_->reach[f];
        std::call_once(row.once, [&] {
            row.where.assign(size(), -1);
            std::vector<Element> stack{f};
            std::vector<Element> seen{f};
            row.where[f] = 0;
            while (!stack.empty()) {
                Element e = stack.back();
                stack.pop_back();
                for (Element u : upper_[e]) {
                    if (row.where[u] >= 0) continue;
                    row.where[u] = 0;
                    seen.push_back(u);
                    stack.push_back(u);
                }
            }
            std::sort(seen.begin(), seen.end());
            row.up = std::move(seen);
            for (std::size_t i = 0; i < row.up.size(); ++i) row.where[row.up[i]] = static_cast<std::int32_t>(i);
        });
        return row;
    }

    const detail::IntervalRow& interval_row(Element f) const
    {
        detail::IntervalRow& row = memo_->intervals[f];
        std::call_once(row.once, [&] {
            const auto& reach = reach_row(f);
            const auto& up = reach.up;
            std::vector<std::size_t> by_rank(up.size());
            std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
            std::stable_sort(by_rank.begin(), by_rank.end(),
                             [&](std::size_t i, std::size_t j) { return rank_[up[i]] < rank_[up[j]]; });

            const std::size_t base = rank_[f];
            row.mobius.assign(up.size(), 0);
            row.poincare.assign(up.size(), IntPolynomial{});
            row.reduced_char.assign(up.size(), IntPolynomial{});
            // Sums over H in [f, g] of mu(f, H), bucketed by rank(H) - rank(f).
            std::vector<std::int64_t> by_level;
            for (std::size_t gi : by_rank) {
                const Element g = up[gi];
                const std::size_t r = rank_[g] - base;
                by_level.assign(r + 1, 0);
                std::int64_t below = 0;
                for (std::size_t hi : by_rank) {
                    const Element h = up[hi];
                    if (rank_[h] >= rank_[g]) break;
                    if (!leq(h, g)) continue;
                    below = detail::checked_add(below, row.mobius[hi]);
                    by_level[rank_[h] - base] = detail::checked_add(by_level[rank_[h] - base], row.mobius[hi]);
                }
                row.mobius[gi] = (g == f) ? 1 : -below;
                by_level[r] = row.mobius[gi];

                std::vector<BigInt> poin(r + 1), chi(r + 1);
                for (std::size_t d = 0; d <= r; ++d) {
                    poin[d] = (d % 2 == 0) ? BigInt(by_level[d]) : BigInt(-by_level[d]);
                    chi[r - d] = by_level[d];
                }
                row.poincare[gi] = IntPolynomial(std::move(poin));
                if (r > 0) row.reduced_char[gi] = exact_div(IntPolynomial(std::move(chi)), IntPolynomial{-1, 1});
            }
        });
        return row;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, Element> index_;
    std::vector<std::vector<Element>> upper_;
    std::vector<std::vector<Element>> lower_;
    std::vector<std::size_t> rank_;
    Element bottom_ = 0;
    Element top_ = 0;
    std::shared_ptr<detail::PosetMemo> memo_;
};

// ---------------------------------------------------------------------------
// Moebius-derived polynomials

inline std::int64_t mobius(const GradedPoset& P, Element f, Element g) { return P.mobius(f, g); }

/// Sum over F of mu(0, F) (-q)^rank(F).
inline IntPolynomial poincare_polynomial(const GradedPoset& P) { return P.interval_poincare(P.bottom(), P.top()); }

/// Sum over F of mu(0, F) q^(n - rank(F)).
inline IntPolynomial characteristic_polynomial(const GradedPoset& P)
{
    const IntPolynomial& poin = P.interval_poincare(P.bottom(), P.top());
    std::vector<BigInt> cs(P.rank() + 1);
    for (std::size_t d = 0; d <= P.rank(); ++d) cs[P.rank() - d] = (d % 2 == 0) ? poin.coeff(d) : BigInt(-poin.coeff(d));
    return IntPolynomial(std::move(cs));
}

inline IntPolynomial reduced_characteristic_polynomial(const GradedPoset& P)
{
    if (P.rank() == 0) throw InputError("reduced characteristic polynomial requires rank >= 1");
    return exact_div(characteristic_polynomial(P), IntPolynomial{-1, 1});
}

// ---------------------------------------------------------------------------
// Intervals

/// Elements of [f, g] in ascending parent index.
inline std::vector<Element> interval_elements(const GradedPoset& P, Element f, Element g)
{
    if (!P.leq(f, g)) throw InputError("interval: " + P.name(f) + " is not below " + P.name(g));
    std::vector<Element> out;
    for (Element h : P.up_set(f))
        if (P.leq(h, g)) out.push_back(h);
    return out;
}

/// Induced subposet on [f, g], re-ranked so f has rank 0; element names carry over.
inline GradedPoset interval(const GradedPoset& P, Element f, Element g)
{
    const std::vector<Element> elems = interval_elements(P, f, g);
    std::unordered_map<Element, Element> local;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        local.emplace(elems[i], static_cast<Element>(i));
        names.push_back(P.name(elems[i]));
    }
    std::vector<Cover> covers;
    for (Element e : elems)
        for (Element u : P.upper_covers(e)) {
            auto it = local.find(u);
            if (it != local.end()) covers.push_back({local.at(e), it->second});
        }
    return GradedPoset::from_covers(elems.size(), covers, std::move(names));
}

// ---------------------------------------------------------------------------
// Chains

/// Depth-first fold over all chains start = C_1 < ... < C_{k+1} = top. `step`
/// maps (state, from, to) to the state for the extended chain; `emit` is
/// called with (state, chain) for every complete chain.
template <class State, class Step, class Emit>
void fold_chains_from(const GradedPoset& P, Element start, const State& init, Step&& step, Emit&& emit)
{
    Chain chain{start};
    auto rec = [&](auto& self, Element cur, const State& state) -> void {
        if (cur == P.top()) {
            emit(state, ChainView(chain));
            return;
        }
        for (Element next : P.up_set(cur)) {
            if (next == cur) continue;
            chain.push_back(next);
            self(self, next, step(state, cur, next));
            chain.pop_back();
        }
    };
    rec(rec, start, init);
}

/// Streams every chain ending at the top. With require_bottom only chains
/// starting at the bottom; the singleton {top} appears iff !require_bottom or
/// the poset has rank 0.
template <class Visitor>
void for_each_chain_to_top(const GradedPoset& P, bool require_bottom, Visitor&& visit)
{
    struct Unit {};
    auto step = [](const Unit& u, Element, Element) { return u; };
    auto emit = [&](const Unit&, ChainView c) { visit(c); };
    if (require_bottom) {
        fold_chains_from(P, P.bottom(), Unit{}, step, emit);
        return;
    }
    for (Element s = 0; s < P.size(); ++s) fold_chains_from(P, s, Unit{}, step, emit);
}

/// Streams maximal chains bottom = F_0 < ... < F_n = top along cover relations.
template <class Visitor>
void for_each_maximal_chain(const GradedPoset& P, Visitor&& visit)
{
    Chain chain{P.bottom()};
    auto rec = [&](auto& self, Element cur) -> void {
        if (cur == P.top()) {
            visit(ChainView(chain));
            return;
        }
        for (Element next : P.upper_covers(cur)) {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    rec(rec, P.bottom());
}

inline std::vector<Chain> chains_to_top(const GradedPoset& P, bool require_bottom)
{
    std::vector<Chain> out;
    for_each_chain_to_top(P, require_bottom, [&](ChainView c) { out.emplace_back(c.begin(), c.end()); });
    return out;
}

inline std::vector<Chain> maximal_chains(const GradedPoset& P)
{
    std::vector<Chain> out;
    for_each_maximal_chain(P, [&](ChainView c) { out.emplace_back(c.begin(), c.end()); });
    return out;
}

/// Number of maximal chains by dynamic programming over ranks.
inline BigInt count_maximal_chains(const GradedPoset& P)
{
    std::vector<BigInt> ways(P.size());
    std::vector<Element> order(P.size());
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return P.rank(a) < P.rank(b); });
    ways[P.bottom()] = 1;
    for (Element e : order)
        for (Element u : P.upper_covers(e)) ways[u] += ways[e];
    return ways[P.top()];
}

namespace detail {

inline void check_chain(const GradedPoset& P, ChainView c)
{
    if (c.empty() || c.back() != P.top()) throw InputError("chain must end at the maximum element");
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!P.less(c[i], c[i + 1])) throw InputError("chain elements are not strictly increasing");
}

}  // namespace detail

/// Product of interval Poincare polynomials over consecutive chain elements.
inline IntPolynomial chain_poincare(const GradedPoset& P, ChainView c)
{
    detail::check_chain(P, c);
    IntPolynomial acc = IntPolynomial::constant(1);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) acc *= P.interval_poincare(c[i], c[i + 1]);
    return acc;
}

/// Product of interval reduced characteristic polynomials.
inline IntPolynomial chain_reduced_char(const GradedPoset& P, ChainView c)
{
    detail::check_chain(P, c);
    IntPolynomial acc = IntPolynomial::constant(1);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) acc *= P.interval_reduced_char(c[i], c[i + 1]);
    return acc;
}

}  // namespace chowpoly
