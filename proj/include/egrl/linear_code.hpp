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

/**
 * @file linear_code.hpp
 * @brief Linear codes given by a generator matrix: duals, exhaustive weight
 * enumeration, MacWilliams transform, Singleton-defect classification and the
 * NMDS weight-distribution formulas.
 */

#pragma once

#include "egrl/matrix.hpp"
#include "egrl/subset_sum.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace egrl {

/// Default cap on the number of messages (q^k) enumerated exhaustively.
inline constexpr std::uint64_t kDefaultBudget = 1ull << 26;

/// (A_0, ..., A_n).
struct WeightDistribution {
    std::vector<BigCount> counts;

    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t n) : counts(n + 1, 0) {}

    std::size_t length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
    BigCount total() const {
        BigCount t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }

    /// Least i > 0 with A_i > 0; length() + 1 when the code is {0}.
    std::size_t min_distance() const {
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] > 0) return i;
        return length() + 1;
    }

    bool operator==(const WeightDistribution&) const = default;

    /// "1+224x^6+1520x^7+..."
    std::string polynomial() const {
        std::string out;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i].is_zero()) continue;
            if (!out.empty()) out += '+';
            const std::string c = counts[i].str();
            if (i == 0) out += c;
            else {
                if (c != "1") out += c;
                out += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

    std::vector<std::string> decimal_strings() const {
        std::vector<std::string> v;
        v.reserve(counts.size());
        for (const auto& c : counts) v.push_back(c.str());
        return v;
    }
};

class LinearCode {
public:
    /// Row-reduces g; the dimension is rank(g).
    static LinearCode from_generator(const Matrix& g) {
        Matrix basis = g.row_basis();
        if (basis.rows() == 0) throw Error(Errc::ZeroCode, "generator has rank 0");
        return LinearCode(std::move(basis));
    }

    const FieldPtr& field() const noexcept { return gen_.field(); }
    const Matrix& generator() const noexcept { return gen_; }
    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dimension() const noexcept { return gen_.rows(); }

    /// Generator = basis of the right kernel of this generator.
    LinearCode dual() const {
        if (dimension() == 0) return LinearCode(Matrix::identity(field(), length()));
        return LinearCode(gen_.null_space());
    }

    /// True when both codes have the same row space.
    bool same_code(const LinearCode& o) const {
        return length() == o.length() && dimension() == o.dimension() && gen_.rref() == o.gen_.rref();
    }

private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}

    Matrix gen_;
};

namespace detail {

inline BigCount big_pow(std::uint64_t base, std::size_t e) {
    BigCount r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

inline void check_budget(const LinearCode& c, std::uint64_t budget) {
    const BigCount need = big_pow(c.field()->q(), c.dimension());
    if (need > budget)
        throw Error(Errc::BudgetExceeded, "need " + need.str() + " messages, budget is " + std::to_string(budget));
}

/// Enumerates every codeword whose leading message symbol equals `leading`,
/// messages in lexicographic order of their codes. visit(const Code* word).
template <class Visitor>
void enumerate_partition(const LinearCode& code, Code leading, Visitor&& visit) {
    const Field& f = *code.field();
    const std::size_t n = code.length(), k = code.dimension(), q = f.q();
    const Matrix& g = code.generator();

    // scaled[i][c * n + j] = c * g(i, j)
    std::vector<std::vector<Code>> scaled(k, std::vector<Code>(q * n));
    for (std::size_t i = 0; i < k; ++i)
        for (Code c = 0; c < q; ++c)
            for (std::size_t j = 0; j < n; ++j) scaled[i][c * n + j] = f.mul(c, g(i, j));

    std::vector<std::vector<Code>> acc(k + 1, std::vector<Code>(n, 0));
    if (k == 0) {
        visit(acc[0].data());
        return;
    }
    for (std::size_t j = 0; j < n; ++j) acc[1][j] = scaled[0][leading * n + j];

    std::vector<Code> digit(k, 0);
    std::size_t depth = 1;
    // Iterative odometer over digits 1..k-1.
    while (true) {
        if (depth == k) {
            visit(acc[k].data());
            // Advance.
            std::size_t d = k;
            while (d > 1) {
                --d;
                if (++digit[d] < q) break;
                digit[d] = 0;
                if (d == 1) return;
            }
            if (k == 1) return;
            depth = d;
        }
        const Code* src = acc[depth].data();
        const Code* add = scaled[depth].data() + static_cast<std::size_t>(digit[depth]) * n;
        Code* dst = acc[depth + 1].data();
        for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(src[j], add[j]);
        ++depth;
    }
}

} // namespace detail

/// Calls visit(const Code* word) for all q^k codewords, single-threaded,
/// in lexicographic message order.
template <class Visitor>
void for_each_codeword(const LinearCode& code, Visitor&& visit, std::uint64_t budget = kDefaultBudget) {
    detail::check_budget(code, budget);
    if (code.dimension() == 0) {
        detail::enumerate_partition(code, 0, visit);
        return;
    }
    for (Code lead = 0; lead < code.field()->q(); ++lead) detail::enumerate_partition(code, lead, visit);
}

/// Exact weight distribution by exhausting all q^k messages. Work is split by
/// leading message symbol; per-partition counts are summed, so the result does
/// not depend on scheduling.
inline WeightDistribution weight_distribution(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                                              unsigned threads = 0) {
    detail::check_budget(code, budget);
    const std::size_t n = code.length();
    const std::uint32_t q = code.field()->q();
    if (code.dimension() == 0) {
        WeightDistribution w(n);
        w.counts[0] = 1;
        return w;
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, q);

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 1, 0));
    auto work = [&](unsigned t) {
        auto& cnt = partial[t];
        for (Code lead = t; lead < q; lead += threads)
            detail::enumerate_partition(code, lead, [&](const Code* w) {
                std::size_t wt = 0;
                for (std::size_t j = 0; j < n; ++j) wt += w[j] != 0;
                ++cnt[wt];
            });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    WeightDistribution out(n);
    for (const auto& p : partial)
        for (std::size_t i = 0; i <= n; ++i) out.counts[i] += p[i];
    return out;
}

/// Dual distribution of an [n, k] code over GF(q) via Krawtchouk sums.
inline WeightDistribution macwilliams(const WeightDistribution& dist, std::size_t k, const Field& f) {
    const std::size_t n = dist.length();
    const std::uint64_t q = f.q();
    const BigCount size = detail::big_pow(q, k);
    if (dist.total() != size) throw Error(Errc::InconsistentInput, "distribution does not sum to q^k");

    std::vector<std::vector<BigCount>> C(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        C[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) C[i][j] = C[i - 1][j - 1] + C[i - 1][j];
    }
    auto binom = [&](std::size_t a, std::size_t b) -> BigCount { return b > a ? BigCount(0) : C[a][b]; };
    std::vector<BigCount> qpow(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * (q - 1);

    WeightDistribution out(n);
    for (std::size_t j = 0; j <= n; ++j) {
        BigCount acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (dist.counts[i].is_zero()) continue;
            BigCount kraw = 0;
            for (std::size_t l = 0; l <= j; ++l) {
                BigCount term = qpow[j - l] * binom(i, l) * binom(n - i, j - l);
                if (l % 2) kraw -= term;
                else kraw += term;
            }
            acc += dist.counts[i] * kraw;
        }
        if (acc < 0 || acc % size != 0)
            throw Error(Errc::InconsistentInput, "transform entry " + std::to_string(j) + " is not a nonnegative integer");
        out.counts[j] = acc / size;
    }
    return out;
}

inline std::size_t min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    return weight_distribution(code, budget).min_distance();
}

struct CodeClass {
    enum class Label { MDS, NMDS, AMDSNotNMDS, Other };

    Label label = Label::Other;
    std::size_t n = 0, k = 0, d = 0, dual_d = 0;
    long long singleton_defect = 0;
    long long dual_defect = 0;
    WeightDistribution primal;
    WeightDistribution dual;

    bool is_mds() const noexcept { return singleton_defect == 0; }
    bool is_amds() const noexcept { return singleton_defect == 1; }
    bool is_nmds() const noexcept { return singleton_defect == 1 && dual_defect == 1; }

    std::string label_name() const {
        switch (label) {
        case Label::MDS: return "MDS";
        case Label::NMDS: return "NMDS";
        case Label::AMDSNotNMDS: return "AMDS-not-NMDS";
        case Label::Other: return "other";
        }
        return "other";
    }

    /// "[n,k,d]"
    std::string parameters() const {
        return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
    }
};

/// Enumerates the side with the smaller dimension and derives the other by
/// MacWilliams, then reports both Singleton defects.
inline CodeClass classify(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    CodeClass c;
    c.n = code.length();
    c.k = code.dimension();
    const Field& f = *code.field();
    if (c.k <= c.n - c.k) {
        c.primal = weight_distribution(code, budget);
        c.dual = macwilliams(c.primal, c.k, f);
    } else {
        c.dual = weight_distribution(code.dual(), budget);
        c.primal = macwilliams(c.dual, c.n - c.k, f);
    }
    c.d = c.primal.min_distance();
    c.dual_d = c.dual.min_distance();
    c.singleton_defect = static_cast<long long>(c.n - c.k + 1) - static_cast<long long>(c.d);
    c.dual_defect = static_cast<long long>(c.k + 1) - static_cast<long long>(c.dual_d);
    if (c.singleton_defect == 0) c.label = CodeClass::Label::MDS;
    else if (c.singleton_defect == 1) c.label = c.dual_defect == 1 ? CodeClass::Label::NMDS : CodeClass::Label::AMDSNotNMDS;
    else c.label = CodeClass::Label::Other;
    return c;
}

/**
 * Weight distributions of an [n, k, n-k] NMDS code and its dual, given the
 * number A_{n-k} = A_k^perp of minimum-weight codewords:
 *
 *   A_{n-k+s} = C(n, k-s) sum_{j<s} (-1)^j C(n-k+s, j) (q^{s-j} - 1) + (-1)^s C(k, s) A_{n-k}
 *   A^perp_{k+t} = C(n, k+t) sum_{j<t} (-1)^j C(k+t, j) (q^{t-j} - 1) + (-1)^t C(n-k, t) A^perp_k
 *
 * Throws NegativeCount when a_min is infeasible for those parameters.
 */
inline std::pair<WeightDistribution, WeightDistribution> nmds_distribution(std::size_t n, std::size_t k, const Field& f,
                                                                           const BigCount& a_min) {
    if (k < 1 || k >= n) throw Error(Errc::RangeViolation, "need 1 <= k < n");
    if (a_min < 0) throw Error(Errc::NegativeCount, "A_min < 0");
    const std::uint64_t q = f.q();
    const long long N = static_cast<long long>(n), K = static_cast<long long>(k);

    auto tail = [&](long long lead_n, long long lead_k, long long inner, long long s, long long other,
                    const BigCount& amin) {
        BigCount sum = 0;
        for (long long j = 0; j < s; ++j) {
            BigCount term = binomial(inner, j) * (detail::big_pow(q, static_cast<std::size_t>(s - j)) - 1);
            if (j % 2) sum -= term;
            else sum += term;
        }
        BigCount v = binomial(lead_n, lead_k) * sum;
        BigCount last = binomial(other, s) * amin;
        if (s % 2) v -= last;
        else v += last;
        return v;
    };

    WeightDistribution primal(n), dual(n);
    primal.counts[0] = 1;
    primal.counts[n - k] += a_min;
    for (long long s = 1; s <= K; ++s) {
        BigCount v = tail(N, K - s, N - K + s, s, K, a_min);
        if (v < 0) throw Error(Errc::NegativeCount, "A_" + std::to_string(N - K + s) + " = " + v.str());
        primal.counts[static_cast<std::size_t>(N - K + s)] = v;
    }
    dual.counts[0] = 1;
    dual.counts[k] += a_min;
    for (long long t = 1; t <= N - K; ++t) {
        BigCount v = tail(N, K + t, K + t, t, N - K, a_min);
        if (v < 0) throw Error(Errc::NegativeCount, "A^perp_" + std::to_string(K + t) + " = " + v.str());
        dual.counts[static_cast<std::size_t>(K + t)] = v;
    }
    return {std::move(primal), std::move(dual)};
}

} // namespace egrl
