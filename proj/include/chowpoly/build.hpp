#pragma once

// Corpus constructions: Boolean lattices, flats of uniform matroids, and bond
// lattices of graphs. Every construction attaches an R-labeling.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "chowpoly/braid.hpp"
#include "chowpoly/error.hpp"
#include "chowpoly/poset.hpp"
#include "chowpoly/rlabel.hpp"

namespace chowpoly {

inline constexpr std::size_t kMaxBooleanRank = 16;
inline constexpr std::size_t kMaxUniformGround = 20;
inline constexpr std::size_t kMaxGraphVertices = 10;

namespace detail {

inline std::string subset_name(std::uint32_t mask)
{
    std::string s = "{";
    bool first = true;
    for (std::uint32_t i = 0; i < 32; ++i)
        if (mask >> i & 1U) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

// Subsets of {1..m} given by masks, sorted by size then mask, with covers
// F < F + {i} whenever both are present, plus explicit extra covers.
struct SubsetPoset {
    std::vector<std::uint32_t> masks;
    std::vector<std::string> names;
};

inline SubsetPoset sorted_subsets(std::vector<std::uint32_t> masks)
{
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    SubsetPoset out{std::move(masks), {}};
    for (auto m : out.masks) out.names.push_back(subset_name(m));
    return out;
}

}  // namespace detail

/// Subsets of {1..n} under inclusion; the cover F < F + {i} is labeled i.
inline LabeledPoset boolean_lattice(std::size_t n)
{
    if (n > kMaxBooleanRank)
        throw InputError("boolean_lattice: n = " + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(kMaxBooleanRank));
    std::vector<std::uint32_t> all(std::size_t{1} << n);
    std::iota(all.begin(), all.end(), 0U);
    auto sp = detail::sorted_subsets(std::move(all));
    std::vector<Element> where(sp.masks.size());
    for (std::size_t i = 0; i < sp.masks.size(); ++i) where[sp.masks[i]] = static_cast<Element>(i);

    std::vector<Cover> covers;
    for (std::size_t i = 0; i < sp.masks.size(); ++i)
        for (std::size_t b = 0; b < n; ++b)
            if (!(sp.masks[i] >> b & 1U)) covers.push_back({static_cast<Element>(i), where[sp.masks[i] | 1U << b]});

    LabeledPoset out{GradedPoset::from_covers(sp.masks.size(), covers, sp.names), EdgeLabeling{}};
    out.labeling = EdgeLabeling(out.poset);
    for (const Cover& c : covers) {
        const std::uint32_t added = sp.masks[c.upper] & ~sp.masks[c.lower];
        out.labeling.set(out.poset, c.lower, c.upper, static_cast<Label>(std::countr_zero(added) + 1));
    }
    return out;
}

/// Flats of U_{k,m}: subsets of size < k and the full set. The cover F < G
/// is labeled min(G \ F).
inline LabeledPoset uniform_matroid_flats(std::size_t k, std::size_t m)
{
    if (k > m) throw InputError("uniform_matroid_flats: need 0 <= k <= m, got k=" + std::to_string(k) +
                                ", m=" + std::to_string(m));
    if (m > kMaxUniformGround)
        throw InputError("uniform_matroid_flats: m = " + std::to_string(m) + " exceeds the cap of " +
                         std::to_string(kMaxUniformGround));
    const std::uint32_t full = m == 32 ? ~0U : (1U << m) - 1U;
    std::vector<std::uint32_t> flats;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) < k) flats.push_back(s);
        if (s == full) break;
    }
    if (std::find(flats.begin(), flats.end(), full) == flats.end()) flats.push_back(full);
    auto sp = detail::sorted_subsets(std::move(flats));

    std::vector<Cover> covers;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < sp.masks.size(); ++i)
        for (std::size_t j = 0; j < sp.masks.size(); ++j) {
            const std::uint32_t f = sp.masks[i], g = sp.masks[j];
            if (f == g || (f & ~g) != 0) continue;
            const bool to_full = g == full && static_cast<std::size_t>(std::popcount(f)) + 1 == k;
            const bool boolean_step = g != full && std::popcount(g) == std::popcount(f) + 1;
            if (!to_full && !boolean_step) continue;
            covers.push_back({static_cast<Element>(i), static_cast<Element>(j)});
            labels.push_back(static_cast<Label>(std::countr_zero(g & ~f) + 1));
        }

    LabeledPoset out{GradedPoset::from_covers(sp.masks.size(), covers, sp.names), EdgeLabeling{}};
    out.labeling = EdgeLabeling(out.poset);
    for (std::size_t c = 0; c < covers.size(); ++c)
        out.labeling.set(out.poset, covers[c].lower, covers[c].upper, labels[c]);
    return out;
}

// ---------------------------------------------------------------------------
// Bond lattices

struct GraphInput {
    std::size_t vertices = 0;
    std::vector<std::pair<int, int>> edges;  // 1-indexed
};

/// Complete graph on n vertices.
inline GraphInput complete_graph(std::size_t n)
{
    GraphInput g{n, {}};
    for (int u = 1; u <= static_cast<int>(n); ++u)
        for (int v = u + 1; v <= static_cast<int>(n); ++v) g.edges.emplace_back(u, v);
    return g;
}

namespace detail {

// Distinct edges as (min, max), sorted by (max, min).
inline std::vector<std::pair<int, int>> normalized_edges(const GraphInput& g)
{
    if (g.vertices == 0) throw InputError("graph must have at least one vertex");
    if (g.vertices > kMaxGraphVertices)
        throw InputError("bond_lattice: " + std::to_string(g.vertices) + " vertices exceeds the cap of " +
                         std::to_string(kMaxGraphVertices));
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges) {
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g.vertices || static_cast<std::size_t>(v) > g.vertices)
            throw InputError("edge [" + std::to_string(u) + "," + std::to_string(v) + "] references a vertex outside 1.." +
                             std::to_string(g.vertices));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u) + " is not allowed");
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end(), [](auto a, auto b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

inline bool induces_connected(const std::vector<int>& block, const std::vector<std::uint32_t>& adjacency)
{
    std::uint32_t members = 0;
    for (int v : block) members |= 1U << (v - 1);
    std::uint32_t seen = 1U << (block.front() - 1), frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adjacency[std::countr_zero(f)];
        next &= members & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == members;
}

}  // namespace detail

/// Partitions of the vertex set into connected blocks, ordered by refinement.
/// Edges are ranked by (larger endpoint, smaller endpoint); merging B and B'
/// is labeled with the rank of the least edge between them. On a complete
/// graph this orders every chain's labels exactly as max(min B, min B').
inline LabeledPoset bond_lattice(const GraphInput& g)
{
    const auto edges = detail::normalized_edges(g);
    std::vector<std::uint32_t> adjacency(g.vertices, 0);
    for (auto [u, v] : edges) {
        adjacency[u - 1] |= 1U << (v - 1);
        adjacency[v - 1] |= 1U << (u - 1);
    }
    std::vector<int> everything(g.vertices);
    std::iota(everything.begin(), everything.end(), 1);
    if (!detail::induces_connected(everything, adjacency))
        throw InputError("bond_lattice: graph is disconnected, so the one-block partition is not a flat");

    auto crossing_edge = [&](const std::vector<int>& b1, const std::vector<int>& b2) -> std::size_t {
        std::uint32_t m1 = 0, m2 = 0;
        for (int v : b1) m1 |= 1U << (v - 1);
        for (int v : b2) m2 |= 1U << (v - 1);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::uint32_t a = 1U << (edges[i].first - 1), b = 1U << (edges[i].second - 1);
            if (((a & m1) && (b & m2)) || ((a & m2) && (b & m1))) return i + 1;
        }
        return 0;
    };
    detail::PartitionPosetRules rules{
        [&](const SetPartition& p) {
            for (const auto& b : p.blocks())
                if (!detail::induces_connected(b, adjacency)) return false;
            return true;
        },
        [&](const std::vector<int>& b1, const std::vector<int>& b2) { return crossing_edge(b1, b2) != 0; },
        [&](const std::vector<int>& b1, const std::vector<int>& b2) { return static_cast<Label>(crossing_edge(b1, b2)); }};
    return detail::partition_poset(g.vertices, rules);
}

/// Number of distinct non-loop edges, the atom count of the bond lattice.
inline std::size_t distinct_edge_count(const GraphInput& g) { return detail::normalized_edges(g).size(); }

}  // namespace chowpoly
