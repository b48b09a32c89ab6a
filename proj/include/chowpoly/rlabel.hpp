#pragma once

/**
 * @file rlabel.hpp
 * @brief Edge labelings, the R-labeling property, descents and signed words.
 *
 * Conventions, which are easy to get backwards:
 *   - an R-labeling has, in every interval, exactly one maximal chain whose
 *     labels are WEAKLY increasing (<=);
 *   - a descent of a label word is a position i with lambda_i > lambda_{i+1}
 *     (STRICT).
 * Labels are positive integers, so the leading 0 of a signed word compares
 * strictly below every unflipped label.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "chowpoly/abpoly.hpp"
#include "chowpoly/error.hpp"
#include "chowpoly/poset.hpp"

namespace chowpoly {

using Label = std::uint32_t;
using LabelWord = std::vector<Label>;
using IndexSet = std::set<std::size_t>;

/// Labels aligned with GradedPoset::upper_covers. An unset cover reads as
/// missing; operations that need a label on it throw.
class EdgeLabeling {
public:
    EdgeLabeling() = default;

    explicit EdgeLabeling(const GradedPoset& P) : labels_(P.size())
    {
        for (Element e = 0; e < P.size(); ++e) labels_[e].assign(P.upper_covers(e).size(), kMissing);
    }

    void set(const GradedPoset& P, Element lo, Element hi, Label value)
    {
        if (value == 0)
            throw InputError("edge labels must be positive; got 0 on cover (" + P.name(lo) + "," + P.name(hi) + ")");
        labels_.at(lo).at(slot(P, lo, hi)) = value;
    }

    std::optional<Label> find(const GradedPoset& P, Element lo, Element hi) const
    {
        if (lo >= labels_.size()) return std::nullopt;
        const Label v = labels_[lo].at(slot(P, lo, hi));
        if (v == kMissing) return std::nullopt;
        return v;
    }

    Label at(const GradedPoset& P, Element lo, Element hi) const
    {
        auto v = find(P, lo, hi);
        if (!v) throw InputError("no label on cover (" + P.name(lo) + "," + P.name(hi) + ")");
        return *v;
    }

    // Label of the i-th upper cover of lo, without validation.
    Label at_slot(Element lo, std::size_t i) const { return labels_[lo][i]; }

    bool is_complete() const
    {
        for (const auto& row : labels_)
            if (std::find(row.begin(), row.end(), kMissing) != row.end()) return false;
        return !labels_.empty();
    }

    bool has_any() const
    {
        for (const auto& row : labels_)
            for (Label v : row)
                if (v != kMissing) return true;
        return false;
    }

    /// Throws InputError naming the first unlabeled cover.
    void require_complete(const GradedPoset& P) const
    {
        if (labels_.size() != P.size()) throw InputError("labeling does not match the poset");
        for (Element e = 0; e < P.size(); ++e) {
            const auto up = P.upper_covers(e);
            for (std::size_t i = 0; i < up.size(); ++i)
                if (labels_[e][i] == kMissing)
                    throw InputError("labeling is incomplete: no label on cover (" + P.name(e) + "," + P.name(up[i]) +
                                     ")");
        }
    }

    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

private:
    static constexpr Label kMissing = 0;

    static std::size_t slot(const GradedPoset& P, Element lo, Element hi)
    {
        const auto up = P.upper_covers(lo);
        auto it = std::lower_bound(up.begin(), up.end(), hi);
        if (it == up.end() || *it != hi)
            throw InputError("(" + P.name(lo) + "," + P.name(hi) + ") is not a cover relation");
        return static_cast<std::size_t>(it - up.begin());
    }

    std::vector<std::vector<Label>> labels_;
};

struct LabeledPoset {
    GradedPoset poset;
    EdgeLabeling labeling;
};

// ---------------------------------------------------------------------------
// R-labeling verification

struct RLabelingViolation {
    Element lower = 0;
    Element upper = 0;
    std::size_t increasing_chains = 0;  // saturates at 2
};

/// First interval [F, G] (F in rank order, then G in rank order) whose
/// number of weakly increasing maximal chains is not exactly one.
inline std::optional<RLabelingViolation> find_r_labeling_violation(const GradedPoset& P, const EdgeLabeling& lambda)
{
    lambda.require_complete(P);
    auto by_rank = [&](Element a, Element b) { return P.rank(a) != P.rank(b) ? P.rank(a) < P.rank(b) : a < b; };
    std::vector<Element> order(P.size());
    std::iota(order.begin(), order.end(), Element{0});
    std::sort(order.begin(), order.end(), by_rank);

    // Per element: (last label, saturating count) of weakly increasing chains from F.
    using Tail = std::vector<std::pair<Label, std::uint8_t>>;
    std::vector<Tail> tails(P.size());
    for (Element f : order) {
        std::vector<Element> up(P.up_set(f).begin(), P.up_set(f).end());
        std::sort(up.begin(), up.end(), by_rank);
        for (Element h : up) tails[h].clear();
        tails[f].push_back({0, 1});
        std::optional<RLabelingViolation> found;
        for (Element h : up) {
            if (h != f) {
                std::size_t total = 0;
                for (const auto& [l, c] : tails[h]) total += c;
                if (total != 1 && !found) found = RLabelingViolation{f, h, std::min<std::size_t>(total, 2)};
            }
            const auto covers = P.upper_covers(h);
            for (std::size_t i = 0; i < covers.size(); ++i) {
                const Label l = lambda.at_slot(h, i);
                std::uint8_t add = 0;
                for (const auto& [last, c] : tails[h])
                    if (last <= l) add = static_cast<std::uint8_t>(std::min(2, add + c));
                if (add == 0) continue;
                Tail& t = tails[covers[i]];
                auto it = std::find_if(t.begin(), t.end(), [&](const auto& p) { return p.first == l; });
                if (it == t.end())
                    t.push_back({l, add});
                else
                    it->second = static_cast<std::uint8_t>(std::min(2, it->second + add));
            }
        }
        if (found) return found;
    }
    return std::nullopt;
}

inline bool verify_r_labeling(const GradedPoset& P, const EdgeLabeling& lambda)
{
    return !find_r_labeling_violation(P, lambda).has_value();
}

// ---------------------------------------------------------------------------
// Words along maximal chains

inline bool is_maximal_chain(const GradedPoset& P, ChainView c)
{
    if (c.size() != P.rank() + 1 || c.front() != P.bottom() || c.back() != P.top()) return false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!P.is_cover(c[i], c[i + 1])) return false;
    return true;
}

inline LabelWord label_word(const GradedPoset& P, const EdgeLabeling& lambda, ChainView chain)
{
    if (!is_maximal_chain(P, chain)) throw InputError("label_word: chain is not maximal");
    LabelWord w;
    w.reserve(chain.size() - 1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) w.push_back(lambda.at(P, chain[i], chain[i + 1]));
    return w;
}

// Bit i-1 set iff i is a descent (1-based positions).
inline std::uint64_t descent_mask(std::span<const Label> w)
{
    std::uint64_t m = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m |= std::uint64_t{1} << i;
    return m;
}

inline IndexSet descent_set(std::span<const Label> w)
{
    IndexSet s;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) s.insert(i + 1);
    return s;
}

inline bool is_isolated(const IndexSet& S)
{
    for (std::size_t i : S)
        if (S.count(i + 1)) return false;
    return true;
}

inline bool is_isolated_mask(std::uint64_t m) { return (m & (m >> 1U)) == 0; }

namespace detail {

inline std::uint64_t flip_mask(const IndexSet& E, std::size_t n)
{
    if (n >= 64) throw InputError("label word too long");
    std::uint64_t m = 0;
    for (std::size_t i : E) {
        if (i < 1 || i > n)
            throw InputError("flip position " + std::to_string(i) + " outside {1,...," + std::to_string(n) + "}");
        m |= std::uint64_t{1} << (i - 1);
    }
    return m;
}

}  // namespace detail

/// (0, +-lambda_1, ..., +-lambda_n), negated on the 1-based positions in E.
inline std::vector<std::int64_t> signed_word(std::span<const Label> w, const IndexSet& E)
{
    const std::uint64_t m = detail::flip_mask(E, w.size());
    std::vector<std::int64_t> out{0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto v = static_cast<std::int64_t>(w[i]);
        out.push_back(((m >> i) & 1U) ? -v : v);
    }
    return out;
}

// u_i = a if lambda'_i <= lambda'_{i+1}, else b. Flip bit i-1 negates lambda_i.
inline ABWord u_monomial_mask(std::span<const Label> w, std::uint64_t flip)
{
    ABWord u;
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto v = static_cast<std::int64_t>(w[i]);
        const std::int64_t cur = ((flip >> i) & 1U) ? -v : v;
        u.push_back(prev <= cur ? 'a' : 'b');
        prev = cur;
    }
    return u;
}

inline ABWord u_monomial(std::span<const Label> w, const IndexSet& E)
{
    return u_monomial_mask(w, detail::flip_mask(E, w.size()));
}

}  // namespace chowpoly
