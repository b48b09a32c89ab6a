#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "chowpoly/chowpoly.hpp"
#include "oracle.hpp"

using namespace chowpoly;

namespace {

IntPolynomial P(std::initializer_list<long long> desc)
{
    std::vector<BigInt> v(desc.begin(), desc.end());
    std::reverse(v.begin(), v.end());
    return IntPolynomial(std::move(v));
}

std::vector<Permutation> all_permutations(std::size_t n)
{
    Permutation s(n);
    std::iota(s.begin(), s.end(), 2);
    std::vector<Permutation> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

// Label words of all maximal chains of Pi_n, read with the oracle's own chain walk.
std::map<std::vector<unsigned>, long long> brute_label_counts(std::size_t n)
{
    const auto L = partition_lattice(n);
    oracle::Brute B(L.poset);
    const auto labels = oracle::labels_of(L);
    std::map<std::vector<unsigned>, long long> counts;
    B.maximal_chains_between(B.bottom, B.top, [&](const std::vector<int>& c) {
        std::vector<unsigned> w;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) w.push_back(labels.at({c[i], c[i + 1]}));
        ++counts[w];
    });
    return counts;
}

}  // namespace

TEST(SetPartition, CanonicalForm)
{
    const SetPartition p({{3, 1}, {2}});
    EXPECT_EQ(p.to_string(), "{1,3},{2}");
    EXPECT_EQ(p.rgs(), (std::vector<std::uint8_t>{0, 1, 0}));
    EXPECT_EQ(SetPartition::from_rgs(p.rgs()), p);
    EXPECT_EQ(p.merge(0, 1).to_string(), "{1,2,3}");
    EXPECT_THROW(SetPartition({{1, 2}, {2}}), InputError);
    EXPECT_THROW(SetPartition({{1}, {3}}), InputError);
    EXPECT_THROW(SetPartition({{1}, {}}), InputError);
}

TEST(PartitionLattice, Sizes)
{
    const auto L2 = partition_lattice(2);
    EXPECT_EQ(L2.poset.size(), 5u);
    EXPECT_EQ(L2.poset.upper_covers(L2.poset.bottom()).size(), 3u);
    EXPECT_EQ(L2.poset.rank(), 2u);
    const auto L3 = partition_lattice(3);
    EXPECT_EQ(L3.poset.size(), 15u);
    EXPECT_EQ(L3.poset.rank(), 3u);
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(partition_lattice(n).poset.size(), bell[n + 1]);
    const auto L1 = partition_lattice(1);
    EXPECT_EQ(L1.labeling.at(L1.poset, L1.poset.index_of("{1},{2}"), L1.poset.index_of("{1,2}")), 2u);
    EXPECT_THROW(partition_lattice(0), InputError);
    EXPECT_THROW(partition_lattice(10), InputError);
}

TEST(PartitionLattice, RLabelingAndWords)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto L = partition_lattice(n);
        EXPECT_TRUE(verify_r_labeling(L.poset, L.labeling)) << n;
        for_each_maximal_chain(L.poset, [&](ChainView c) {
            LabelWord w = label_word(L.poset, L.labeling, c);
            std::sort(w.begin(), w.end());
            for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(w[i], i + 2);
        });
    }
}

TEST(Inversion, RankThreeTable)
{
    const std::vector<std::pair<Permutation, std::vector<int>>> table{
        {{2, 3, 4}, {1, 1, 1}}, {{2, 4, 3}, {1, 2, 1}}, {{3, 2, 4}, {2, 1, 1}},
        {{3, 4, 2}, {2, 2, 1}}, {{4, 2, 3}, {3, 1, 1}}, {{4, 3, 2}, {3, 2, 1}}};
    for (const auto& [sigma, a] : table) {
        EXPECT_EQ(inversion_sequence(sigma).entries, a);
        EXPECT_EQ(inversion_sequence_from_prefixes(sigma).entries, a);
        EXPECT_EQ(inversion_sequence_inverse(InversionSequence{a}), sigma);
    }
}

TEST(Inversion, Validation)
{
    EXPECT_THROW(inversion_sequence(Permutation{1, 2, 3}), InputError);
    EXPECT_THROW(inversion_sequence(Permutation{2, 2, 4}), InputError);
    EXPECT_THROW(inversion_sequence_from_prefixes(Permutation{2, 5}), InputError);
    EXPECT_NO_THROW(inversion_sequence_inverse(InversionSequence{{1, 2, 1}}));
}

TEST(Inversion, RoundTripAndDescents)
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Permutation& s : all_permutations(n)) {
            const InversionSequence a = inversion_sequence(s);
            ASSERT_EQ(a, inversion_sequence_from_prefixes(s));
            ASSERT_EQ(inversion_sequence_inverse(a), s);
            for (std::size_t i = 0; i + 1 < n; ++i) ASSERT_EQ(s[i] > s[i + 1], a.entries[i] > a.entries[i + 1]);
        }
}

TEST(Inversion, InverseRejectsOutOfRange)
{
    EXPECT_THROW(inversion_sequence_inverse(InversionSequence{{1, 1, 2}}), InputError);
    EXPECT_THROW(inversion_sequence_inverse(InversionSequence{{4, 1, 1}}), InputError);
    EXPECT_THROW(inversion_sequence_inverse(InversionSequence{{0, 1, 1}}), InputError);
}

TEST(ChainCount, Examples)
{
    EXPECT_EQ(count_chains_with_label(3, Permutation{3, 4, 2}), 4);
    EXPECT_EQ(count_chains_with_label(3, Permutation{2, 3, 4}), 1);
    BigInt total = 0;
    for (const auto& s : all_permutations(3)) total += count_chains_with_label(3, s);
    EXPECT_EQ(total, 18);
    EXPECT_THROW(count_chains_with_label(4, Permutation{2, 3, 4}), InputError);
}

TEST(ChainCount, MatchesBruteForce)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto counts = brute_label_counts(n);
        for (const auto& s : all_permutations(n)) {
            const std::vector<unsigned> w(s.begin(), s.end());
            const long long brute = counts.count(w) ? counts.at(w) : 0;
            EXPECT_EQ(count_chains_with_label(n, s), brute);
        }
    }
}

TEST(ChainCount, TotalFormula)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (const auto& s : all_permutations(n)) total += count_chains_with_label(n, s);
        EXPECT_EQ(total, BigInt(oracle::factorial(n + 1)) * oracle::factorial(n) / (BigInt(1) << n));
    }
}

TEST(BraidFormula, Values)
{
    EXPECT_EQ(chow_braid(1), P({1}));
    EXPECT_EQ(chow_braid(2), P({1, 1}));
    EXPECT_EQ(chow_braid(3), P({1, 8, 1}));
    EXPECT_EQ(augmented_chow_braid(1), P({1, 1}));
    EXPECT_EQ(augmented_chow_braid(2), P({1, 4, 1}));
    EXPECT_EQ(augmented_chow_braid(3), P({1, 14, 14, 1}));
    EXPECT_THROW(chow_braid(0), InputError);
    EXPECT_THROW(chow_braid(13), InputError);
}

TEST(BraidFormula, QualifyingSequencesForRankThree)
{
    std::vector<std::vector<int>> reduced, augmented;
    for_each_qualifying_sequence(3, true, [&](std::span<const int> a, std::uint64_t, std::size_t) {
        reduced.emplace_back(a.begin(), a.end());
    });
    for_each_qualifying_sequence(3, false, [&](std::span<const int> a, std::uint64_t, std::size_t) {
        augmented.emplace_back(a.begin(), a.end());
    });
    EXPECT_EQ(reduced, (std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 1}, {2, 2, 1}}));
    EXPECT_EQ(augmented.size(), 5u);
}

TEST(BraidFormula, MatchesLattice)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto L = partition_lattice(n);
        EXPECT_EQ(chow_braid(n), chow_by_chains(L.poset)) << n;
        EXPECT_EQ(augmented_chow_braid(n), augmented_chow_by_chains(L.poset)) << n;
    }
}

TEST(BraidFormula, SequencesReproduceChainCount)
{
    // Without the descent filter the weighted sequence sum is the chain count.
    for (std::size_t n = 1; n <= 8; ++n) {
        BigInt total = 0;
        std::vector<int> seq(n);
        auto rec = [&](auto& self, std::size_t i, BigInt prod) -> void {
            if (i == n) {
                total += prod;
                return;
            }
            for (int v = 1; v <= static_cast<int>(n - i); ++v) self(self, i + 1, prod * v);
        };
        rec(rec, 0, BigInt(1));
        EXPECT_EQ(total, BigInt(oracle::factorial(n + 1)) * oracle::factorial(n) / (BigInt(1) << n));
    }
}
