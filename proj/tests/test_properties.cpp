#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chowpoly/chowpoly.hpp"
#include "oracle.hpp"

using namespace chowpoly;

namespace {

// A random bounded graded poset: middle ranks of 1..width elements, each with
// a random nonempty set of lower covers, and every element below the top
// covered at least once.
GradedPoset random_graded(std::mt19937& rng, std::size_t rank, std::size_t width)
{
    std::vector<std::vector<Element>> levels{{0}};
    Element next = 1;
    for (std::size_t r = 1; r < rank; ++r) {
        const std::size_t k = 1 + rng() % width;
        levels.emplace_back();
        for (std::size_t i = 0; i < k; ++i) levels.back().push_back(next++);
    }
    if (rank > 0) levels.push_back({next++});
    std::vector<Cover> covers;
    for (std::size_t r = 1; r < levels.size(); ++r) {
        const auto& below = levels[r - 1];
        std::vector<bool> covered(below.size(), false);
        for (Element e : levels[r]) {
            bool any = false;
            for (std::size_t i = 0; i < below.size(); ++i)
                if (rng() % 2 || (!any && i + 1 == below.size())) {
                    covers.push_back({below[i], e});
                    covered[i] = any = true;
                }
        }
        for (std::size_t i = 0; i < below.size(); ++i)
            if (!covered[i]) covers.push_back({below[i], levels[r][rng() % levels[r].size()]});
    }
    return GradedPoset::from_covers(next, covers);
}

}  // namespace

TEST(Properties, RandomGradedPosetsAgreeWithOracle)
{
    std::mt19937 rng(20241014);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rank = 1 + rng() % 4;
        const GradedPoset P = random_graded(rng, rank, 3);
        oracle::Brute B(P);
        ASSERT_EQ(static_cast<std::size_t>(B.rank[B.top]), P.rank());

        std::size_t oracle_chains = 0;
        B.chains_to_top(false, [&](const std::vector<int>&) { ++oracle_chains; });
        EXPECT_EQ(chains_to_top(P, false).size(), oracle_chains);

        const IntPolynomial h = chow_by_chains(P), aug = augmented_chow_by_chains(P);
        EXPECT_EQ(oracle::from_library(h), oracle::chow(B));
        EXPECT_EQ(oracle::from_library(aug), oracle::augmented_chow(B));
        EXPECT_EQ(chow_by_extab(P), h);
        EXPECT_EQ(augmented_chow_by_extab(P), aug);

        const ABPolynomial ext = ext_ab_index(P);
        EXPECT_EQ(oracle::from_library(ext), oracle::ext_ab_index(B));
        EXPECT_EQ(ABPolynomial::letter_b() * iota(ext), bottom_anchored_ext_sum(P));
        EXPECT_EQ(ab_index(P), at_y_zero(ext));
        const RationalPair cf = coarse_flag_hp(P, IntPolynomial{0, -1}, IntPolynomial::x());
        EXPECT_EQ(cf.numerator, cf.denominator * h);
    }
}

namespace {

bool distinct_along_chains(const LabeledPoset& L)
{
    bool ok = true;
    for_each_maximal_chain(L.poset, [&](ChainView c) {
        LabelWord w = label_word(L.poset, L.labeling, c);
        std::sort(w.begin(), w.end());
        if (std::adjacent_find(w.begin(), w.end()) != w.end()) ok = false;
    });
    return ok;
}

}  // namespace

TEST(Properties, RandomLabelingsOfDiamondsAndBooleans)
{
    // Random R-labelings (checked against brute force) without repeated
    // labels along a maximal chain: the labeling expansions equal the chain sums.
    std::mt19937 rng(4242);
    int r_count = 0;
    for (int trial = 0; trial < 150; ++trial) {
        LabeledPoset L = boolean_lattice(1 + rng() % 3);
        for (const Cover& c : L.poset.covers()) L.labeling.set(L.poset, c.lower, c.upper, 1 + rng() % 3);
        oracle::Brute B(L.poset);
        const bool is_r = oracle::is_r_labeling(B, oracle::labels_of(L));
        ASSERT_EQ(verify_r_labeling(L.poset, L.labeling), is_r);
        if (!is_r || !distinct_along_chains(L)) continue;
        ++r_count;
        EXPECT_EQ(ext_ab_via_labeling(L.poset, L.labeling), ext_ab_index(L.poset));
        EXPECT_TRUE(omega_identity_check(L.poset, L.labeling));
        EXPECT_EQ(chow_by_descents(L.poset, L.labeling), chow_by_chains(L.poset));
        EXPECT_EQ(augmented_chow_by_descents(L.poset, L.labeling), augmented_chow_by_chains(L.poset));
    }
    EXPECT_GT(r_count, 10);
}

TEST(Properties, RepeatedLabelsBreakTheSignedWordExpansion)
{
    // Chain 0 < {2} < {1,2} carries (1,1); flipping both positions gives
    // (0,-1,-1), read as ba although the chain-sum side needs bb.
    LabeledPoset L = boolean_lattice(2);
    const GradedPoset& P = L.poset;
    L.labeling.set(P, P.index_of("{}"), P.index_of("{1}"), 2);
    L.labeling.set(P, P.index_of("{}"), P.index_of("{2}"), 1);
    L.labeling.set(P, P.index_of("{1}"), P.index_of("{1,2}"), 1);
    L.labeling.set(P, P.index_of("{2}"), P.index_of("{1,2}"), 1);
    ASSERT_TRUE(verify_r_labeling(P, L.labeling));
    const ABPolynomial ext = ext_ab_index(P);
    EXPECT_EQ(ext.coeff(ABWord("bb")), (IntPolynomial{0, 0, 1}));
    EXPECT_TRUE(ext_ab_via_labeling(P, L.labeling).coeff(ABWord("bb")).is_zero());
}

TEST(Properties, GammaOfRandomPalindromes)
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = rng() % 8;
        std::vector<BigInt> cs(d + 1);
        for (std::size_t i = 0; i <= d / 2; ++i) cs[i] = cs[d - i] = static_cast<long>(rng() % 41) - 20;
        const IntPolynomial p(cs);
        EXPECT_EQ(reconstruct(gamma_vector(p, d)), p);
    }
}
