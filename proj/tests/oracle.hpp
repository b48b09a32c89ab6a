#pragma once

// Brute-force reference implementations used by the tests. Nothing here calls
// into the library's algorithms: the order relation is rebuilt from the raw
// cover list by transitive closure, Mobius values come from the defining
// recursion, chains are enumerated from the closure matrix, and polynomials are
// plain vectors of long long.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowpoly/chowpoly.hpp"

namespace oracle {

using Poly = std::vector<long long>;  // lowest degree first, trimmed

inline void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly add(Poly a, const Poly& b)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline Poly power(const Poly& p, std::size_t e)
{
    Poly r{1};
    for (std::size_t i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

inline Poly monomial(long long c, std::size_t k)
{
    Poly p(k + 1, 0);
    p[k] = c;
    trim(p);
    return p;
}

// Synthetic division by (q - 1); the remainder must vanish.
inline Poly divide_by_q_minus_1(const Poly& p)
{
    if (p.empty()) return {};
    Poly q(p.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry += p[i];
        q[i - 1] = carry;
    }
    if (carry + p[0] != 0) throw std::runtime_error("oracle: remainder in division by q-1");
    trim(q);
    return q;
}

inline Poly from_library(const chowpoly::IntPolynomial& p)
{
    Poly out;
    for (const auto& c : p.coeffs()) out.push_back(static_cast<long long>(c));
    return out;
}

struct Brute {
    std::size_t n = 0;
    std::vector<std::vector<char>> le;  // le[x][y] iff x <= y
    std::vector<std::vector<char>> cover;
    std::vector<int> rank;
    int bottom = -1, top = -1;
    std::map<std::pair<int, int>, long long> mu_memo;

    explicit Brute(const chowpoly::GradedPoset& P) : Brute(P.size(), P.covers()) {}

    Brute(std::size_t size, const std::vector<chowpoly::Cover>& covers) : n(size)
    {
        le.assign(n, std::vector<char>(n, 0));
        cover.assign(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
        for (const auto& c : covers) le[c.lower][c.upper] = cover[c.lower][c.upper] = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (le[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (le[k][j]) le[i][j] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            bool is_min = true, is_max = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i && le[j][i]) is_min = false;
                if (j != i && le[i][j]) is_max = false;
            }
            if (is_min) bottom = static_cast<int>(i);
            if (is_max) top = static_cast<int>(i);
        }
        // Rank by breadth-first distance along covers from the bottom.
        rank.assign(n, -1);
        rank[bottom] = 0;
        std::vector<int> queue{bottom};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (std::size_t j = 0; j < n; ++j)
                if (cover[queue[h]][j] && rank[j] < 0) {
                    rank[j] = rank[queue[h]] + 1;
                    queue.push_back(static_cast<int>(j));
                }
    }

    bool lt(int x, int y) const { return x != y && le[x][y]; }

    long long mu(int x, int y)
    {
        if (x == y) return 1;
        if (!le[x][y]) return 0;
        auto key = std::make_pair(x, y);
        if (auto it = mu_memo.find(key); it != mu_memo.end()) return it->second;
        long long s = 0;
        for (std::size_t h = 0; h < n; ++h)
            if (le[x][h] && lt(static_cast<int>(h), y)) s += mu(x, static_cast<int>(h));
        return mu_memo[key] = -s;
    }

    Poly chi(int x, int z)
    {
        Poly p;
        for (std::size_t w = 0; w < n; ++w)
            if (le[x][w] && le[w][z]) p = add(p, monomial(mu(x, static_cast<int>(w)), rank[z] - rank[w]));
        return p;
    }

    Poly chi_bar(int x, int z) { return divide_by_q_minus_1(chi(x, z)); }

    Poly poin(int x, int z)
    {
        Poly p;
        for (std::size_t w = 0; w < n; ++w)
            if (le[x][w] && le[w][z]) {
                const int k = rank[w] - rank[x];
                p = add(p, monomial(mu(x, static_cast<int>(w)) * (k % 2 ? -1 : 1), k));
            }
        return p;
    }

    // Every strictly increasing sequence ending at the top.
    void chains_to_top(bool require_bottom, const std::function<void(const std::vector<int>&)>& visit)
    {
        std::vector<int> c;
        std::function<void(int)> extend = [&](int last) {
            if (last == top) {
                visit(c);
                return;
            }
            for (std::size_t h = 0; h < n; ++h)
                if (lt(last, static_cast<int>(h))) {
                    c.push_back(static_cast<int>(h));
                    extend(static_cast<int>(h));
                    c.pop_back();
                }
        };
        for (std::size_t s = 0; s < n; ++s) {
            if (require_bottom && static_cast<int>(s) != bottom) continue;
            c = {static_cast<int>(s)};
            extend(static_cast<int>(s));
        }
    }

    void maximal_chains_between(int x, int y, const std::function<void(const std::vector<int>&)>& visit)
    {
        std::vector<int> c{x};
        std::function<void(int)> extend = [&](int last) {
            if (last == y) {
                visit(c);
                return;
            }
            for (std::size_t h = 0; h < n; ++h)
                if (cover[last][h] && le[h][y]) {
                    c.push_back(static_cast<int>(h));
                    extend(static_cast<int>(h));
                    c.pop_back();
                }
        };
        extend(x);
    }
};

// Sum over chains 0 = C_1 < ... < 1 of the product of reduced characteristic polynomials.
inline Poly chow(Brute& B)
{
    if (B.rank[B.top] == 0) return {1};
    Poly total;
    B.chains_to_top(true, [&](const std::vector<int>& c) {
        Poly p{1};
        for (std::size_t i = 0; i + 1 < c.size(); ++i) p = mul(p, B.chi_bar(c[i], c[i + 1]));
        total = add(total, p);
    });
    return total;
}

inline Poly augmented_chow(Brute& B)
{
    if (B.rank[B.top] == 0) return {1};
    Poly total;
    B.chains_to_top(false, [&](const std::vector<int>& c) {
        Poly p = monomial(1, B.rank[c.front()]);
        for (std::size_t i = 0; i + 1 < c.size(); ++i) p = mul(p, B.chi_bar(c[i], c[i + 1]));
        total = add(total, p);
    });
    return total;
}

using ABPoly = std::map<std::string, Poly>;

inline void ab_add(ABPoly& acc, const std::string& w, const Poly& c)
{
    Poly& slot = acc[w];
    slot = add(slot, c);
    if (slot.empty()) acc.erase(w);
}

// wt_S expanded letter by letter: b for k in S, a - b otherwise.
inline ABPoly wt(const std::set<int>& S, int n)
{
    ABPoly cur{{"", {1}}};
    for (int k = 0; k < n; ++k) {
        ABPoly next;
        for (const auto& [w, c] : cur) {
            if (S.count(k)) {
                ab_add(next, w + "b", c);
            } else {
                ab_add(next, w + "a", c);
                Poly neg = c;
                for (auto& v : neg) v = -v;
                ab_add(next, w + "b", neg);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

inline ABPoly ext_ab_index(Brute& B, bool require_bottom = false)
{
    const int n = B.rank[B.top];
    ABPoly total;
    B.chains_to_top(require_bottom, [&](const std::vector<int>& c) {
        Poly p{1};
        std::set<int> S;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            p = mul(p, B.poin(c[i], c[i + 1]));
            S.insert(B.rank[c[i]]);
        }
        for (const auto& [w, coeff] : wt(S, n)) ab_add(total, w, mul(coeff, p));
    });
    return total;
}

inline ABPoly from_library(const chowpoly::ABPolynomial& p)
{
    ABPoly out;
    for (const auto& [w, c] : p.terms()) out[w.str()] = from_library(c);
    return out;
}

// Number of weakly increasing maximal chains in [x, y] under the given labels.
inline int increasing_chains(Brute& B, const std::map<std::pair<int, int>, unsigned>& labels, int x, int y)
{
    int count = 0;
    B.maximal_chains_between(x, y, [&](const std::vector<int>& c) {
        bool inc = true;
        for (std::size_t i = 0; i + 2 < c.size(); ++i)
            if (labels.at({c[i], c[i + 1]}) > labels.at({c[i + 1], c[i + 2]})) inc = false;
        count += inc;
    });
    return count;
}

inline bool is_r_labeling(Brute& B, const std::map<std::pair<int, int>, unsigned>& labels)
{
    for (std::size_t x = 0; x < B.n; ++x)
        for (std::size_t y = 0; y < B.n; ++y)
            if (B.lt(static_cast<int>(x), static_cast<int>(y)) &&
                increasing_chains(B, labels, static_cast<int>(x), static_cast<int>(y)) != 1)
                return false;
    return true;
}

inline std::map<std::pair<int, int>, unsigned> labels_of(const chowpoly::LabeledPoset& L)
{
    std::map<std::pair<int, int>, unsigned> out;
    for (const auto& c : L.poset.covers())
        out[{static_cast<int>(c.lower), static_cast<int>(c.upper)}] = L.labeling.at(L.poset, c.lower, c.upper);
    return out;
}

// Eulerian polynomial sum over permutations of [n] of x^des.
inline Poly eulerian(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    Poly out;
    do {
        int d = 0;
        for (int i = 0; i + 1 < n; ++i) d += p[i] > p[i + 1];
        out = add(out, monomial(1, d));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline long long binomial(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Augmented Chow polynomial of the Boolean lattice: sum_k C(n,k) A_k(x) x^(n-k).
inline Poly augmented_boolean(int n)
{
    Poly out;
    for (int k = 0; k <= n; ++k) out = add(out, mul(monomial(binomial(n, k), n - k), k == 0 ? Poly{1} : eulerian(k)));
    return out;
}

inline long long factorial(int n)
{
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace oracle
