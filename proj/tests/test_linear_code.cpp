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

#include "egrl/linear_code.hpp"
#include "egrl/random.hpp"

#include <gtest/gtest.h>

using namespace egrl;

namespace {

Matrix random_generator(const FieldPtr& f, std::size_t k, std::size_t n, Rng& rng) {
    while (true) {
        Matrix m(f, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Code>(rng.below(f->q()));
        if (m.rank() == k) return m;
    }
}

// Message-by-message product with the generator; no shared code with the engine.
WeightDistribution naive_distribution(const LinearCode& c) {
    const Field& f = *c.field();
    const std::size_t n = c.length(), k = c.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= f.q();
    WeightDistribution w(n);
    std::vector<Code> msg(k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = k; i-- > 0;) {
            msg[i] = static_cast<Code>(x % f.q());
            x /= f.q();
        }
        std::size_t wt = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Code s = 0;
            for (std::size_t i = 0; i < k; ++i) s = f.add(s, f.mul(msg[i], c.generator()(i, j)));
            wt += s != 0;
        }
        w.counts[wt] += 1;
    }
    return w;
}

// d = size of the smallest linearly dependent set of parity-check columns.
std::size_t column_test_distance(const LinearCode& c) {
    const Matrix h = c.dual().generator();
    const std::size_t n = c.length();
    if (h.rows() == 0) return 1;
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            std::vector<std::size_t> idx;
            for (std::size_t j = 0; j < n; ++j)
                if (pick[j]) idx.push_back(j);
            if (h.select_columns(idx).rank() < size) return size;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return n + 1;
}

} // namespace

TEST(LinearCode, RepetitionAndEvenWeight) {
    auto f2 = Field::make_q(2);
    auto rep = LinearCode::from_generator(Matrix::from_rows(f2, {{1, 1, 1}}));
    EXPECT_EQ(rep.length(), 3u);
    EXPECT_EQ(rep.dimension(), 1u);
    auto even = rep.dual();
    EXPECT_EQ(even.dimension(), 2u);
    auto we = weight_distribution(even);
    EXPECT_EQ(we.decimal_strings(), (std::vector<std::string>{"1", "0", "3", "0"}));
    EXPECT_EQ(macwilliams(weight_distribution(rep), 1, *f2), we);
    auto cls = classify(even);
    EXPECT_EQ(cls.label, CodeClass::Label::MDS);
    EXPECT_EQ(cls.d, 2u);

    auto f3 = Field::make_q(3);
    auto rep3 = LinearCode::from_generator(Matrix::from_rows(f3, {{1, 1, 1}}));
    EXPECT_EQ(weight_distribution(rep3).decimal_strings(), (std::vector<std::string>{"1", "0", "0", "2"}));
    EXPECT_EQ(weight_distribution(rep3).polynomial(), "1+2x^3");
}

TEST(LinearCode, RankNormalization) {
    auto f5 = Field::make_q(5);
    auto c = LinearCode::from_generator(Matrix::from_rows(f5, {{1, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 0, 1}}));
    EXPECT_EQ(c.dimension(), 2u);
    try {
        LinearCode::from_generator(Matrix(f5, 2, 4));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroCode);
    }
}

TEST(LinearCode, DoubleDualIsOriginal) {
    Rng rng(63);
    auto f5 = Field::make_q(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = LinearCode::from_generator(random_generator(f5, 3, 6, rng));
        auto dd = c.dual().dual();
        EXPECT_TRUE(dd.same_code(c));
        EXPECT_TRUE((c.generator() * c.dual().generator().transpose()).is_zero());
    }
}

TEST(LinearCode, EngineMatchesNaiveEnumeration) {
    Rng rng(4);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        auto f = Field::make_q(q);
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t n = rng.between(2, 8), k = rng.between(1, std::min<std::size_t>(n, 4));
            auto c = LinearCode::from_generator(random_generator(f, k, n, rng));
            const auto expect = naive_distribution(c);
            EXPECT_EQ(weight_distribution(c, kDefaultBudget, 1), expect);
            EXPECT_EQ(weight_distribution(c, kDefaultBudget, 3), expect);
        }
    }
}

TEST(LinearCode, MacWilliamsAgainstDualEnumeration) {
    Rng rng(20);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        auto f = Field::make_q(q);
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t n = rng.between(3, 9), k = rng.between(1, n - 1);
            auto c = LinearCode::from_generator(random_generator(f, k, n, rng));
            std::uint64_t need = 1, need_d = 1;
            for (std::size_t i = 0; i < k; ++i) need *= q;
            for (std::size_t i = 0; i < n - k; ++i) need_d *= q;
            if (need > (1u << 20) || need_d > (1u << 20)) continue;
            const auto a = weight_distribution(c), b = weight_distribution(c.dual());
            EXPECT_EQ(macwilliams(a, k, *f), b);
            EXPECT_EQ(macwilliams(b, n - k, *f), a);
            EXPECT_EQ(a.total(), BigCount(need));
            EXPECT_EQ(a.counts[0], 1);
        }
    }
}

TEST(LinearCode, GeneratedCodeOverGf4MatchesMacWilliamsOfDual) {
    Rng rng(44);
    auto f4 = Field::make_q(4);
    auto c = LinearCode::from_generator(random_generator(f4, 3, 6, rng));
    EXPECT_EQ(weight_distribution(c), macwilliams(weight_distribution(c.dual()), 3, *f4));
}

TEST(LinearCode, MinDistanceMatchesColumnTest) {
    Rng rng(10);
    for (std::uint64_t q : {2, 3, 5, 7, 8}) {
        auto f = Field::make_q(q);
        for (int trial = 0; trial < 8; ++trial) {
            const std::size_t n = rng.between(3, 10), k = rng.between(1, std::min<std::size_t>(n - 1, 4));
            auto c = LinearCode::from_generator(random_generator(f, k, n, rng));
            EXPECT_EQ(min_distance(c), column_test_distance(c));
        }
    }
}

TEST(LinearCode, ScalingPreservesDistribution) {
    Rng rng(31);
    auto f = Field::make_q(7);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix g = random_generator(f, 3, 7, rng);
        std::vector<Code> d(7);
        for (auto& x : d) x = random_nonzero(*f, rng);
        auto a = classify(LinearCode::from_generator(g));
        auto b = classify(LinearCode::from_generator(g.scale_columns(d)));
        EXPECT_EQ(a.primal, b.primal);
        EXPECT_EQ(a.label, b.label);
    }
}

TEST(LinearCode, BudgetExceededReportsRequiredCount) {
    auto f = Field::make_q(9);
    Rng rng(2);
    auto c = LinearCode::from_generator(random_generator(f, 4, 6, rng));
    try {
        weight_distribution(c, 1000);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BudgetExceeded);
        EXPECT_NE(std::string(e.what()).find("6561"), std::string::npos);
    }
    // classify enumerates the dual ([6,2]) and needs only 81 messages.
    EXPECT_NO_THROW(classify(c, 1000));
}

TEST(LinearCode, MacWilliamsRejectsInconsistentInput) {
    auto f = Field::make_q(2);
    WeightDistribution bad(3);
    // Transforms to (1, -3/2, 3, -1/2).
    bad.counts = {1, 0, 0, 3};
    EXPECT_THROW(macwilliams(bad, 2, *f), Error);
    WeightDistribution neg(4);
    // Integral but negative: (1, -2, 6, -2, 1).
    neg.counts = {1, 0, 0, 0, 3};
    EXPECT_THROW(macwilliams(neg, 2, *f), Error);
    bad.counts = {1, 0, 0, 0};
    EXPECT_THROW(macwilliams(bad, 1, *f), Error);
}

TEST(LinearCode, NmdsFormulaGoldenGf9) {
    auto f = Field::make_q(9);
    auto [primal, dual] = nmds_distribution(11, 5, *f, 224);
    EXPECT_EQ(primal.polynomial(), "1+224x^6+1520x^7+4880x^8+14040x^9+22240x^10+16144x^11");
    EXPECT_EQ(primal.total(), BigCount(59049));
    EXPECT_EQ(dual.counts[5], 224);
    EXPECT_EQ(dual.total(), BigCount(531441));
    EXPECT_EQ(macwilliams(primal, 5, *f), dual);
}

TEST(LinearCode, NmdsFormulaFirstTerm) {
    auto f = Field::make_q(9);
    auto [primal, dual] = nmds_distribution(11, 5, *f, 0);
    EXPECT_EQ(primal.counts[7], binomial(11, 4) * 8);
    (void)dual;
}

TEST(LinearCode, NmdsFormulaRejectsInfeasible) {
    auto f = Field::make_q(9);
    try {
        nmds_distribution(11, 5, *f, 100000);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NegativeCount);
    }
    EXPECT_THROW(nmds_distribution(5, 5, *f, 0), Error);
}

TEST(LinearCode, PolynomialAndJsonForms) {
    WeightDistribution w(4);
    w.counts = {1, 1, 0, 0, 12};
    EXPECT_EQ(w.polynomial(), "1+x+12x^4");
    EXPECT_EQ(w.decimal_strings(), (std::vector<std::string>{"1", "1", "0", "0", "12"}));
    EXPECT_EQ(w.min_distance(), 1u);
}
