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
 * @file subset_sum.hpp
 * @brief Counting m-element subsets of a set of field elements with a given sum.
 *
 * Two independent routes: a dynamic program over (elements seen, subset size,
 * partial sum) that works for any duplicate-free set, and the Li–Wan closed
 * forms for the whole field and its unit group. Counts are arbitrary precision.
 *
 * Convention for m = 0: the empty subset sums to 0, so N(0, 0) = 1 and
 * N(0, b) = 0 for b != 0. The closed forms reproduce this without special cases.
 */

#pragma once

#include "egrl/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace egrl {

using BigCount = boost::multiprecision::cpp_int;

/// Binomial coefficient by Pascal's rule; zero outside 0 <= k <= n.
inline BigCount binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (long long i = 1; i <= n; ++i) {
        const long long top = std::min(i, k);
        for (long long j = top; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return row[static_cast<std::size_t>(k)];
}

enum class Domain { Full, Star };

inline std::vector<Code> domain_elements(const Field& f, Domain d) {
    return d == Domain::Full ? f.elements() : f.nonzero();
}

inline std::size_t domain_size(const Field& f, Domain d) { return d == Domain::Full ? f.q() : f.q() - 1; }

struct SubsetSumQuery {
    FieldPtr field;
    std::vector<Code> elements;
    std::size_t m = 0;
    Code target = 0;

    static SubsetSumQuery over(FieldPtr f, Domain d, std::size_t m, Code b) {
        auto elems = domain_elements(*f, d);
        return {std::move(f), std::move(elems), m, b};
    }
};

namespace detail {

inline void check_distinct(const Field& f, std::span<const Code> elems) {
    std::vector<bool> seen(f.q(), false);
    for (Code c : elems) {
        if (!f.contains(c)) throw Error(Errc::DomainSize, "element " + std::to_string(c) + " outside field");
        if (seen[c]) throw Error(Errc::DuplicateNodes, "element " + std::to_string(c) + " repeated");
        seen[c] = true;
    }
}

} // namespace detail

/// table[m][b] = number of m-subsets of elems summing to b, for m <= max_m.
inline std::vector<std::vector<BigCount>> subset_sum_table(const Field& f, std::span<const Code> elems,
                                                           std::size_t max_m) {
    detail::check_distinct(f, elems);
    const std::size_t q = f.q();
    std::vector<std::vector<BigCount>> n(max_m + 1, std::vector<BigCount>(q, 0));
    n[0][0] = 1;
    std::size_t seen = 0;
    for (Code a : elems) {
        ++seen;
        for (std::size_t c = std::min(seen, max_m); c >= 1; --c) {
            const auto& prev = n[c - 1];
            auto& cur = n[c];
            for (Code s = 0; s < q; ++s)
                if (!prev[s].is_zero()) cur[f.add(s, a)] += prev[s];
        }
    }
    return n;
}

inline BigCount count_dp(const SubsetSumQuery& query) {
    if (query.m > query.elements.size())
        throw Error(Errc::DomainSize, "m = " + std::to_string(query.m) + " exceeds |D| = " +
                                          std::to_string(query.elements.size()));
    if (!query.field->contains(query.target)) throw Error(Errc::DomainSize, "target outside field");
    return subset_sum_table(*query.field, query.elements, query.m)[query.m][query.target];
}

/// Li–Wan closed forms for D = F_q and D = F_q^*.
inline BigCount count_li_wan(const Field& f, Domain d, std::size_t m, Code b) {
    if (m > domain_size(f, d))
        throw Error(Errc::DomainSize, "m = " + std::to_string(m) + " exceeds |D| = " + std::to_string(domain_size(f, d)));
    if (!f.contains(b)) throw Error(Errc::DomainSize, "target outside field");
    const long long q = f.q(), p = f.p(), k = static_cast<long long>(m);
    const BigCount vb = b != 0 ? BigCount(-1) : BigCount(q - 1);
    BigCount numer;
    if (d == Domain::Star) {
        const long long kp = k / p;
        const int sign = ((k + kp) % 2 == 0) ? 1 : -1;
        numer = binomial(q - 1, k) + sign * vb * binomial(q / p - 1, kp);
    } else if (k % p != 0) {
        numer = binomial(q, k);
    } else {
        const long long kp = k / p;
        const int sign = ((k + kp) % 2 == 0) ? 1 : -1;
        numer = binomial(q, k) + sign * vb * binomial(q / p, kp);
    }
    if (numer % q != 0 || numer < 0) throw Error(Errc::InconsistentInput, "closed form not an integer");
    return numer / q;
}

/**
 * Closed vanishing characterizations (is N(m, b, D) = 0?).
 *
 * D = F_q, 2 <= m <= q-1: zero iff 2 | q and (m, b) in {(2, 0), (q-2, 0)}.
 * D = F_q^*, b != 0, 2 <= m <= q-2: never zero.
 * D = F_q^*, b = 0, 2 <= m <= q-1: with k = m+1, zero iff k in {3, q-2, q-1}
 * and p = 2, or k in {2, q-1} and p != 2.
 * Anything else throws OutOfStatedRange; use count_li_wan there.
 */
inline bool vanishes(const Field& f, Domain d, std::size_t m, Code b) {
    const std::size_t q = f.q();
    auto out_of_range = [&] {
        return Error(Errc::OutOfStatedRange, "m = " + std::to_string(m) + ", b = " + std::to_string(b) + " over " +
                                                 (d == Domain::Full ? "F_q" : "F_q^*") + ", q = " + std::to_string(q));
    };
    if (m < 2) throw out_of_range();
    if (d == Domain::Full) {
        if (m > q - 1) throw out_of_range();
        return q % 2 == 0 && b == 0 && (m == 2 || m == q - 2);
    }
    if (b != 0) {
        if (m > q - 2) throw out_of_range();
        return false;
    }
    if (m > q - 1) throw out_of_range();
    const std::size_t k = m + 1;
    if (f.p() == 2) return k == 3 || k == q - 2 || k == q - 1;
    return k == 2 || k == q - 1;
}

/// Lexicographically smallest index set I (|I| = m) with sum of elems[I] = b.
inline std::optional<std::vector<std::size_t>> find_subset(const Field& f, std::span<const Code> elems,
                                                           std::size_t m, Code b) {
    detail::check_distinct(f, elems);
    const std::size_t n = elems.size(), q = f.q();
    if (m > n) return std::nullopt;
    // reach[i][c * q + s]: c elements of elems[i..n) can sum to s.
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>((m + 1) * q, 0));
    reach[n][0] = 1;
    for (std::size_t i = n; i-- > 0;) {
        auto& cur = reach[i];
        const auto& nxt = reach[i + 1];
        cur = nxt;
        for (std::size_t c = 1; c <= m; ++c)
            for (Code s = 0; s < q; ++s)
                if (nxt[(c - 1) * q + s]) cur[c * q + f.add(s, elems[i])] = 1;
    }
    if (!reach[0][m * q + b]) return std::nullopt;
    std::vector<std::size_t> out;
    Code s = b;
    std::size_t c = m;
    for (std::size_t i = 0; i < n && c > 0; ++i) {
        const Code rest = f.sub(s, elems[i]);
        if (reach[i + 1][(c - 1) * q + rest]) {
            out.push_back(i);
            s = rest;
            --c;
        }
    }
    return out;
}

} // namespace egrl
