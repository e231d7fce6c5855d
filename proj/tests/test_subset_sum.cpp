/*
 * Copyright 2026 The egrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "egrl/random.hpp"
#include "egrl/subset_sum.hpp"

#include <gtest/gtest.h>

using namespace egrl;

namespace {

// Counts m-subsets by walking every bitmask; only for |elems| <= 16.
BigCount enumerate_subsets(const Field& f, const std::vector<Code>& elems, std::size_t m, Code b) {
    BigCount n = 0;
    const std::size_t sz = elems.size();
    for (std::uint32_t mask = 0; mask < (1u << sz); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
        Code s = 0;
        for (std::size_t i = 0; i < sz; ++i)
            if (mask >> i & 1) s = f.add(s, elems[i]);
        n += s == b;
    }
    return n;
}

} // namespace

TEST(SubsetSum, Binomials) {
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(SubsetSum, SmallExamples) {
    auto f5 = Field::make_q(5);
    EXPECT_EQ(count_dp(SubsetSumQuery::over(f5, Domain::Star, 2, 1)), 1);
    EXPECT_EQ(count_li_wan(*f5, Domain::Star, 2, 1), 1);
    EXPECT_FALSE(vanishes(*f5, Domain::Star, 2, 1));
    for (std::uint64_t q : {2, 5, 9, 16}) {
        auto f = Field::make_q(q);
        EXPECT_EQ(count_dp(SubsetSumQuery::over(f, Domain::Full, 0, 0)), 1);
        EXPECT_EQ(count_li_wan(*f, Domain::Star, 0, 0), 1);
        EXPECT_EQ(count_li_wan(*f, Domain::Full, 0, 1), 0);
        for (Code b = 0; b < f->q(); ++b) EXPECT_EQ(count_li_wan(*f, Domain::Full, 1, b), 1);
    }
    auto f4 = Field::make_q(4);
    EXPECT_EQ(count_dp(SubsetSumQuery::over(f4, Domain::Full, 2, 0)), 0);
    EXPECT_TRUE(vanishes(*f4, Domain::Full, 2, 0));
    auto f8 = Field::make_q(8);
    EXPECT_TRUE(vanishes(*f8, Domain::Star, 2, 0));
    auto f9 = Field::make_q(9);
    EXPECT_EQ(count_li_wan(*f9, Domain::Star, 4, 2), count_dp(SubsetSumQuery::over(f9, Domain::Star, 4, 2)));
}

TEST(SubsetSum, DpMatchesBitmaskEnumeration) {
    Rng rng(21);
    for (std::uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
        auto f = Field::make_q(q);
        for (int trial = 0; trial < 10; ++trial) {
            auto elems = random_distinct(*f, rng.between(1, std::min<std::uint64_t>(q, 12)), rng);
            const std::size_t m = rng.below(elems.size() + 1);
            const Code b = static_cast<Code>(rng.below(q));
            EXPECT_EQ(count_dp({f, elems, m, b}), enumerate_subsets(*f, elems, m, b));
        }
    }
}

TEST(SubsetSum, ClosedFormsMatchDpExhaustively) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
        auto f = Field::make_q(q);
        for (Domain d : {Domain::Full, Domain::Star}) {
            const auto elems = domain_elements(*f, d);
            const auto table = subset_sum_table(*f, elems, elems.size());
            for (std::size_t m = 0; m <= elems.size(); ++m) {
                BigCount row = 0;
                for (Code b = 0; b < q; ++b) {
                    ASSERT_EQ(count_li_wan(*f, d, m, b), table[m][b]) << "q=" << q << " m=" << m << " b=" << b;
                    row += table[m][b];
                }
                EXPECT_EQ(row, binomial(static_cast<long long>(elems.size()), static_cast<long long>(m)));
            }
        }
    }
}

TEST(SubsetSum, VanishingAgreesWithCountsInStatedRange) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 32}) {
        auto f = Field::make_q(q);
        for (Domain d : {Domain::Full, Domain::Star}) {
            for (std::size_t m = 0; m <= domain_size(*f, d); ++m)
                for (Code b = 0; b < q; ++b) {
                    const bool zero = count_li_wan(*f, d, m, b) == 0;
                    try {
                        EXPECT_EQ(vanishes(*f, d, m, b), zero) << "q=" << q << " m=" << m << " b=" << b;
                    } catch (const Error& e) {
                        EXPECT_EQ(e.code(), Errc::OutOfStatedRange);
                    }
                }
        }
    }
}

TEST(SubsetSum, VanishingRefusesOutsideStatedRange) {
    auto f7 = Field::make_q(7);
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::ParseError;
    };
    EXPECT_EQ(code_of([&] { vanishes(*f7, Domain::Full, 1, 0); }), Errc::OutOfStatedRange);
    EXPECT_EQ(code_of([&] { vanishes(*f7, Domain::Star, 6, 3); }), Errc::OutOfStatedRange);
    EXPECT_EQ(code_of([&] { vanishes(*f7, Domain::Full, 7, 0); }), Errc::OutOfStatedRange);
    // Edge of the stated range: m = q-2, b = 0 over F_q^* for odd q is a genuine zero.
    EXPECT_EQ(count_li_wan(*f7, Domain::Star, 5, 0), 0);
    EXPECT_TRUE(vanishes(*f7, Domain::Star, 5, 0));
}

TEST(SubsetSum, Errors) {
    auto f5 = Field::make_q(5);
    EXPECT_THROW(count_li_wan(*f5, Domain::Star, 5, 0), Error);
    EXPECT_THROW(count_dp(SubsetSumQuery::over(f5, Domain::Full, 6, 0)), Error);
    EXPECT_THROW(count_dp({f5, {1, 1, 2}, 2, 0}), Error);
    EXPECT_THROW(count_dp({f5, {1, 7}, 1, 0}), Error);
}

TEST(SubsetSum, FindSubsetIsLexicographicallySmallest) {
    auto f13 = Field::make_q(13);
    std::vector<Code> alpha{1, 2, 7, 8, 9};
    auto w = find_subset(*f13, alpha, 4, 5);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, (std::vector<std::size_t>{0, 1, 2, 3}));
    // 4-subset sums are 1 minus the omitted element: {0, 12, 7, 6, 5}.
    EXPECT_EQ(*find_subset(*f13, alpha, 4, 0), (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_FALSE(find_subset(*f13, alpha, 4, 2));

    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = Field::make_q(rng.between(0, 1) ? 11 : 16);
        auto elems = random_distinct(*f, rng.between(1, 10), rng);
        const std::size_t m = rng.below(elems.size() + 1);
        const Code b = static_cast<Code>(rng.below(f->q()));
        auto got = find_subset(*f, elems, m, b);
        // Oracle: first bitmask in colex-of-indices order that works.
        std::optional<std::vector<std::size_t>> best;
        const std::size_t n = elems.size();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
            Code s = 0;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) {
                    s = f->add(s, elems[i]);
                    idx.push_back(i);
                }
            if (s == b && (!best || idx < *best)) best = idx;
        }
        EXPECT_EQ(got, best);
    }
}
