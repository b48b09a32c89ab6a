#pragma once

/**
 * @file braid.hpp
 * @brief Set partition lattices and the braid-arrangement closed formulas.
 *
 * Pi_n is the lattice of set partitions of {1, ..., n+1} ordered by
 * refinement, rank n. Merging blocks B, B' is labeled max(min B, min B'),
 * an R-labeling whose label word along any maximal chain is a permutation of
 * {2, ..., n+1}. The number of maximal chains with a given label word sigma
 * is the product of the entries of its inversion sequence, which turns the
 * descent expansions into sums over inversion sequences.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chowpoly/error.hpp"
#include "chowpoly/parallel.hpp"
#include "chowpoly/poly.hpp"
#include "chowpoly/poset.hpp"
#include "chowpoly/rlabel.hpp"

namespace chowpoly {

/// Partition of {1, ..., m} in canonical form: blocks sorted by minimum,
/// elements sorted within blocks.
class SetPartition {
public:
    SetPartition() = default;

    explicit SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks))
    {
        std::size_t total = 0;
        for (auto& b : blocks_) {
            if (b.empty()) throw InputError("set partition has an empty block");
            std::sort(b.begin(), b.end());
            total += b.size();
        }
        std::sort(blocks_.begin(), blocks_.end());
        std::vector<bool> seen(total + 1, false);
        for (const auto& b : blocks_)
            for (int v : b) {
                if (v < 1 || static_cast<std::size_t>(v) > total || seen[v])
                    throw InputError("set partition blocks must be disjoint and cover {1,...," + std::to_string(total) +
                                     "}");
                seen[v] = true;
            }
        ground_ = total;
    }

    /// From a restricted growth string: rgs[i] is the 0-based block of element i+1.
    static SetPartition from_rgs(std::span<const std::uint8_t> rgs)
    {
        std::vector<std::vector<int>> blocks;
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            if (rgs[i] > blocks.size()) throw InputError("not a restricted growth string");
            if (rgs[i] == blocks.size()) blocks.emplace_back();
            blocks[rgs[i]].push_back(static_cast<int>(i + 1));
        }
        return SetPartition(std::move(blocks));
    }

    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    std::size_t ground_size() const noexcept { return ground_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    std::vector<std::uint8_t> rgs() const
    {
        std::vector<std::uint8_t> out(ground_);
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (int v : blocks_[b]) out[v - 1] = static_cast<std::uint8_t>(b);
        return out;
    }

    SetPartition merge(std::size_t i, std::size_t j) const
    {
        if (i == j || i >= blocks_.size() || j >= blocks_.size()) throw InputError("invalid block merge");
        std::vector<std::vector<int>> bs;
        for (std::size_t k = 0; k < blocks_.size(); ++k)
            if (k != i && k != j) bs.push_back(blocks_[k]);
        std::vector<int> merged = blocks_[i];
        merged.insert(merged.end(), blocks_[j].begin(), blocks_[j].end());
        bs.push_back(std::move(merged));
        return SetPartition(std::move(bs));
    }

    // "{1,2},{3}"
    std::string to_string() const
    {
        std::string s;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            s += b ? ",{" : "{";
            for (std::size_t k = 0; k < blocks_[b].size(); ++k) s += (k ? "," : "") + std::to_string(blocks_[b][k]);
            s += "}";
        }
        return s;
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    std::vector<std::vector<int>> blocks_;
    std::size_t ground_ = 0;
};

namespace detail {

inline void for_each_rgs(std::size_t m, const std::function<void(std::span<const std::uint8_t>)>& visit)
{
    std::vector<std::uint8_t> rgs(m, 0);
    auto rec = [&](auto& self, std::size_t i, std::uint8_t max_used) -> void {
        if (i == m) {
            visit(rgs);
            return;
        }
        for (std::uint8_t b = 0; b <= max_used + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(max_used, b));
        }
    };
    if (m == 0) {
        visit(rgs);
        return;
    }
    rgs[0] = 0;
    rec(rec, 1, 0);
}

struct PartitionPosetRules {
    std::function<bool(const SetPartition&)> admissible;
    std::function<bool(const std::vector<int>&, const std::vector<int>&)> mergeable;
    std::function<Label(const std::vector<int>&, const std::vector<int>&)> label;
};

/// Partitions of {1..m} accepted by the rules, ordered by rank then
/// restricted growth string; covers merge two mergeable blocks.
inline LabeledPoset partition_poset(std::size_t m, const PartitionPosetRules& rules,
                                    std::vector<SetPartition>* elements_out = nullptr)
{
    std::vector<SetPartition> elems;
    for_each_rgs(m, [&](std::span<const std::uint8_t> r) {
        SetPartition p = SetPartition::from_rgs(r);
        if (rules.admissible(p)) elems.push_back(std::move(p));
    });
    std::stable_sort(elems.begin(), elems.end(),
                     [](const SetPartition& a, const SetPartition& b) { return a.block_count() > b.block_count(); });
    std::map<std::vector<std::uint8_t>, Element> index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        index.emplace(elems[i].rgs(), static_cast<Element>(i));
        names.push_back(elems[i].to_string());
    }

    struct Labeled {
        Cover cover;
        Label label;
    };
    std::vector<Labeled> labeled;
    for (std::size_t e = 0; e < elems.size(); ++e) {
        const auto& bs = elems[e].blocks();
        for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = i + 1; j < bs.size(); ++j) {
                if (!rules.mergeable(bs[i], bs[j])) continue;
                auto it = index.find(elems[e].merge(i, j).rgs());
                if (it == index.end()) throw InputError("partition poset: merge leaves the admissible set");
                labeled.push_back({{static_cast<Element>(e), it->second}, rules.label(bs[i], bs[j])});
            }
    }
    std::vector<Cover> covers;
    covers.reserve(labeled.size());
    for (const auto& l : labeled) covers.push_back(l.cover);

    LabeledPoset out{GradedPoset::from_covers(elems.size(), covers, std::move(names)), EdgeLabeling{}};
    out.labeling = EdgeLabeling(out.poset);
    for (const auto& l : labeled) out.labeling.set(out.poset, l.cover.lower, l.cover.upper, l.label);
    if (elements_out) *elements_out = std::move(elems);
    return out;
}

}  // namespace detail

inline constexpr std::size_t kMaxPartitionGround = 10;
inline constexpr std::size_t kMaxBraidFormulaRank = 12;

/// Pi_n with the max-of-min labeling. Requires 1 <= n and n + 1 <= 10.
inline LabeledPoset partition_lattice(std::size_t n, std::vector<SetPartition>* elements = nullptr)
{
    if (n < 1) throw InputError("partition_lattice: n must be at least 1");
    if (n + 1 > kMaxPartitionGround)
        throw InputError("partition_lattice: ground set size " + std::to_string(n + 1) + " exceeds the cap of " +
                         std::to_string(kMaxPartitionGround) + " (Bell numbers grow super-exponentially)");
    detail::PartitionPosetRules rules{
        [](const SetPartition&) { return true; },
        [](const std::vector<int>&, const std::vector<int>&) { return true; },
        [](const std::vector<int>& b1, const std::vector<int>& b2) {
            return static_cast<Label>(std::max(b1.front(), b2.front()));
        }};
    return detail::partition_poset(n + 1, rules, elements);
}

// ---------------------------------------------------------------------------
// Inversion sequences

using Permutation = std::vector<int>;

struct InversionSequence {
    std::vector<int> entries;  // a_i in {1, ..., n+1-i}

    friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
};

namespace detail {

inline void require_shifted_permutation(std::span<const int> sigma)
{
    const std::size_t n = sigma.size();
    std::vector<bool> seen(n + 2, false);
    for (int v : sigma) {
        if (v < 2 || static_cast<std::size_t>(v) > n + 1 || seen[v])
            throw InputError("expected a permutation of {2,...," + std::to_string(n + 1) + "}");
        seen[v] = true;
    }
}

}  // namespace detail

/// a_i = #{ j >= i : sigma_j <= sigma_i } for a permutation of {2, ..., n+1}.
inline InversionSequence inversion_sequence(std::span<const int> sigma)
{
    detail::require_shifted_permutation(sigma);
    InversionSequence a;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        int count = 0;
        for (std::size_t j = i; j < sigma.size(); ++j) count += sigma[j] <= sigma[i];
        a.entries.push_back(count);
    }
    return a;
}

/// The same sequence from prefixes only: a_i = sigma_i - #{ j <= i : sigma_j <= sigma_i }.
inline InversionSequence inversion_sequence_from_prefixes(std::span<const int> sigma)
{
    detail::require_shifted_permutation(sigma);
    InversionSequence a;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        int count = 0;
        for (std::size_t j = 0; j <= i; ++j) count += sigma[j] <= sigma[i];
        a.entries.push_back(sigma[i] - count);
    }
    return a;
}

inline void validate_inversion_sequence(const InversionSequence& a)
{
    const std::size_t n = a.entries.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int hi = static_cast<int>(n - i);  // n + 1 - (i+1)
        if (a.entries[i] < 1 || a.entries[i] > hi)
            throw InputError("inversion sequence entry a_" + std::to_string(i + 1) + " = " +
                             std::to_string(a.entries[i]) + " outside {1,...," + std::to_string(hi) + "}");
    }
}

/// The unique sigma with inversion_sequence(sigma) == a: sigma_i is the a_i-th
/// smallest value not used by sigma_1..sigma_{i-1}.
inline Permutation inversion_sequence_inverse(const InversionSequence& a)
{
    validate_inversion_sequence(a);
    const std::size_t n = a.entries.size();
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 2);
    Permutation sigma;
    for (int ai : a.entries) {
        sigma.push_back(remaining[ai - 1]);
        remaining.erase(remaining.begin() + (ai - 1));
    }
    return sigma;
}

/// Number of maximal chains of Pi_n whose label word is sigma: a_1 * ... * a_n.
inline BigInt count_chains_with_label(std::size_t n, std::span<const int> sigma)
{
    if (sigma.size() != n) throw InputError("permutation length must equal n");
    BigInt prod = 1;
    for (int ai : inversion_sequence(sigma).entries) prod *= ai;
    return prod;
}

/// Visits every inversion sequence of length n with isolated descent set
/// (and 1 not a descent when skip_first), with its entry product and des.
/// Branches are pruned as soon as a descent pattern is ruled out.
template <class Visitor>
void for_each_qualifying_sequence(std::size_t n, bool skip_first, Visitor&& visit, int first_entry = 0)
{
    std::vector<int> seq(n);
    auto rec = [&](auto& self, std::size_t i, std::uint64_t prod, std::size_t des, bool prev_descent) -> void {
        if (i == n) {
            visit(std::span<const int>(seq), prod, des);
            return;
        }
        const int hi = static_cast<int>(n - i);
        for (int v = 1; v <= hi; ++v) {
            bool descent = false;
            if (i > 0 && seq[i - 1] > v) {
                if (prev_descent) continue;
                if (skip_first && i == 1) continue;
                descent = true;
            }
            seq[i] = v;
            self(self, i + 1, prod * static_cast<std::uint64_t>(v), des + descent, descent);
        }
    };
    if (n == 0) return;
    if (first_entry > 0) {
        seq[0] = first_entry;
        rec(rec, 1, static_cast<std::uint64_t>(first_entry), 0, false);
    } else {
        rec(rec, 0, 1, 0, false);
    }
}

namespace detail {

inline IntPolynomial braid_formula(std::size_t n, bool skip_first, std::size_t shift)
{
    if (n < 1) throw InputError("braid formula requires n >= 1");
    if (n > kMaxBraidFormulaRank)
        throw InputError("braid formula: n = " + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(kMaxBraidFormulaRank));
    // Every bucket is bounded by the total chain count (n+1)! n! / 2^n < 2^64 for n <= 12.
    using Buckets = std::vector<std::uint64_t>;
    auto task = [&](std::size_t i) {
        Buckets local(n + 1, 0);
        for_each_qualifying_sequence(
            n, skip_first, [&](std::span<const int>, std::uint64_t prod, std::size_t des) { local[des] += prod; },
            static_cast<int>(i + 1));
        return local;
    };
    auto combine = [](Buckets& acc, Buckets&& part) {
        for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += part[d];
    };
    Buckets by_des = parallel_fold(n, Buckets(n + 1, 0), task, combine);
    IntPolynomial out;
    for (std::size_t d = 0; d < by_des.size(); ++d) {
        if (by_des[d] == 0) continue;
        if (2 * d + shift > n) throw ArithmeticError("braid formula: descent count out of range");
        out += IntPolynomial::monomial(BigInt(by_des[d]), d) * one_plus_x_pow(n - shift - 2 * d);
    }
    return out;
}

}  // namespace detail

/// Chow polynomial of the braid arrangement: sum over inversion sequences
/// with isolated descent set avoiding 1 of a_1...a_n x^des (x+1)^(n-1-2des).
inline IntPolynomial chow_braid(std::size_t n) { return detail::braid_formula(n, true, 1); }

/// Augmented version: isolated descent set, weight x^des (x+1)^(n-2des).
inline IntPolynomial augmented_chow_braid(std::size_t n) { return detail::braid_formula(n, false, 0); }

}  // namespace chowpoly
