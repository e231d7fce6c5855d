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
 * @file egrl.hpp
 * @brief Extended generalized Roth–Lempel codes EGRL_{k,l,t}(alpha, v, b).
 *
 * A codeword is (v_1 f(a_1), ..., v_n f(a_n), (f_{k-l}, ..., f_{k-1}) M, b f_t)
 * for f of degree < k. Everything here is exact; the MDS / dual-AMDS criteria
 * for l = 2, t = 0 are decided by subset-sum counting, and the special family
 * alpha = F_q^* has closed-form weight distributions.
 */

#pragma once

#include "egrl/linear_code.hpp"
#include "egrl/matrix.hpp"
#include "egrl/subset_sum.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace egrl {

struct EgrlParams {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t ell = 2;
    std::size_t t = 0;
    std::vector<Code> alpha;
    std::vector<Code> v;
    Code b = 1;
    Matrix M;

    std::size_t length() const noexcept { return n + ell + 1; }

    /// Throws the first violated invariant.
    void validate() const {
        if (!field) throw Error(Errc::InconsistentInput, "no field");
        const Field& f = *field;
        if (alpha.size() != n) throw Error(Errc::DimMismatch, "alpha has " + std::to_string(alpha.size()) + " entries, n = " + std::to_string(n));
        if (v.size() != n) throw Error(Errc::DimMismatch, "v has " + std::to_string(v.size()) + " entries, n = " + std::to_string(n));
        if (M.rows() != ell || M.cols() != ell)
            throw Error(Errc::DimMismatch, "M is " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ", ell = " + std::to_string(ell));
        if (M.field() && !(*M.field() == f)) throw Error(Errc::CtxMismatch, "M over a different field");
        if (ell < 1) throw Error(Errc::RangeViolation, "ell >= 1 required");
        if (k < ell) throw Error(Errc::RangeViolation, "ell <= k required (ell = " + std::to_string(ell) + ", k = " + std::to_string(k) + ")");
        if (n < k) throw Error(Errc::RangeViolation, "k <= n required (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
        if (n > f.q()) throw Error(Errc::RangeViolation, "n <= q required (n = " + std::to_string(n) + ", q = " + std::to_string(f.q()) + ")");
        if (k < 3 || t > k - 3) throw Error(Errc::RangeViolation, "0 <= t <= k-3 required (t = " + std::to_string(t) + ", k = " + std::to_string(k) + ")");
        std::vector<bool> seen(f.q(), false);
        for (std::size_t i = 0; i < n; ++i) {
            if (!f.contains(alpha[i]) || !f.contains(v[i])) throw Error(Errc::DomainSize, "coordinate " + std::to_string(i) + " outside field");
            if (seen[alpha[i]]) throw Error(Errc::DuplicateAlpha, "alpha value " + std::to_string(alpha[i]) + " repeated");
            seen[alpha[i]] = true;
            if (v[i] == 0) throw Error(Errc::ZeroV, "v_" + std::to_string(i + 1) + " = 0");
        }
        if (!f.contains(b)) throw Error(Errc::DomainSize, "b outside field");
        if (b == 0) throw Error(Errc::ZeroB, "b = 0");
        if (M.det() == 0) throw Error(Errc::SingularM, "det(M) = 0");
    }

    void require_l2_t0() const {
        if (ell != 2 || t != 0)
            throw Error(Errc::UnsupportedShape, "only ell = 2, t = 0 is supported (ell = " + std::to_string(ell) + ", t = " + std::to_string(t) + ")");
    }
};

/// k x (n + ell + 1) generator matrix.
inline Matrix generator_matrix(const EgrlParams& p) {
    p.validate();
    const Field& f = *p.field;
    Matrix g(p.field, p.k, p.length());
    for (std::size_t j = 0; j < p.n; ++j) {
        Code x = p.v[j];
        for (std::size_t i = 0; i < p.k; ++i) {
            g(i, j) = x;
            x = f.mul(x, p.alpha[j]);
        }
    }
    for (std::size_t r = 0; r < p.ell; ++r)
        for (std::size_t c = 0; c < p.ell; ++c) g(p.k - p.ell + r, p.n + c) = p.M(r, c);
    g(p.t, p.n + p.ell) = p.b;
    return g;
}

inline LinearCode egrl_code(const EgrlParams& p) { return LinearCode::from_generator(generator_matrix(p)); }

/// l = 2, b = 1, t = k-3, v = 1, M = [[0,1],[1,delta]].
inline EgrlParams preset_roth_lempel(FieldPtr field, std::size_t k, std::vector<Code> alpha, Code delta) {
    EgrlParams p;
    p.n = alpha.size();
    p.k = k;
    p.ell = 2;
    p.t = k >= 3 ? k - 3 : 0;
    p.alpha = std::move(alpha);
    p.v.assign(p.n, 1);
    p.b = 1;
    p.M = Matrix::from_rows(field, {{0, 1}, {1, delta}});
    p.field = std::move(field);
    p.validate();
    return p;
}

/// alpha = F_q^* in ascending code order, l = 2, t = 0, b = 1, v = 1, M = [[0,1],[1,0]].
inline EgrlParams preset_full_star(FieldPtr field, std::size_t k) {
    EgrlParams p;
    p.alpha = field->nonzero();
    p.n = p.alpha.size();
    p.k = k;
    p.v.assign(p.n, 1);
    p.M = Matrix::from_rows(field, {{0, 1}, {1, 0}});
    p.field = std::move(field);
    p.validate();
    return p;
}

/// u_i = prod_{j != i} (a_i - a_j)^{-1}.
inline std::vector<Code> compute_u(const Field& f, std::span<const Code> alpha) {
    const std::size_t n = alpha.size();
    if (n < 3) throw Error(Errc::RangeViolation, "n >= 3 required");
    std::vector<Code> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        Code prod = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Code d = f.sub(alpha[i], alpha[j]);
            if (d == 0) throw Error(Errc::DuplicateAlpha, "alpha value " + std::to_string(alpha[i]) + " repeated");
            prod = f.mul(prod, d);
        }
        u[i] = f.inv(prod);
    }
    return u;
}

/**
 * (n-k+3) x (n+3) parity-check matrix for l = 2, t = 0, 4 <= k <= n-1.
 *
 * Rows 1..n-k+2 are (u_i / v_i) a_i^j for j = 0..n-k+1, with the 2x2 block
 * R = [[0,-1],[-1,-sum a_i]] (M^T)^{-1} on the last two of them. Row 0 is
 * (w_1, ..., w_n, 0, 0, -b^{-1} sum v_i w_i) where v_i w_i is orthogonal to
 * a_i^j for 1 <= j <= k-1: all-ones when the power sums of v a^j already
 * vanish, otherwise -u_i / a_i (or the indicator of the zero node).
 */
inline Matrix parity_check_matrix(const EgrlParams& p) {
    p.validate();
    p.require_l2_t0();
    if (p.k < 4 || p.k + 1 > p.n)
        throw Error(Errc::RangeViolation, "4 <= k <= n-1 required (k = " + std::to_string(p.k) + ", n = " + std::to_string(p.n) + ")");
    const Field& f = *p.field;
    const std::size_t n = p.n, k = p.k, rows = n - k + 3;
    const auto u = compute_u(f, p.alpha);
    Matrix h(p.field, rows, n + 3);

    Code sum_alpha = 0;
    for (Code a : p.alpha) sum_alpha = f.add(sum_alpha, a);

    // Data rows.
    for (std::size_t s = 0; s < n; ++s) {
        Code x = f.div(u[s], p.v[s]);
        for (std::size_t j = 0; j + 1 < rows; ++j) {
            h(1 + j, s) = x;
            x = f.mul(x, p.alpha[s]);
        }
    }
    const Code m1 = f.neg(1);
    Matrix base = Matrix::from_rows(p.field, {{0, m1}, {m1, f.neg(sum_alpha)}});
    Matrix R = base.transpose() * p.M.transpose().inverse();
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) h(rows - 2 + r, n + c) = R(r, c);

    // First row.
    Code sum_v = 0;
    for (Code x : p.v) sum_v = f.add(sum_v, x);
    bool ones_ok = sum_v != 0;
    for (std::size_t i = 1; ones_ok && i < k; ++i) {
        Code acc = 0;
        for (std::size_t s = 0; s < n; ++s) acc = f.add(acc, f.mul(p.v[s], f.pow(p.alpha[s], static_cast<std::int64_t>(i))));
        ones_ok = acc == 0;
    }
    std::vector<Code> y(n, 0); // y_s = v_s w_s
    if (ones_ok) {
        y = p.v;
    } else {
        std::optional<std::size_t> zero;
        for (std::size_t s = 0; s < n; ++s)
            if (p.alpha[s] == 0) zero = s;
        if (zero) y[*zero] = 1;
        else
            for (std::size_t s = 0; s < n; ++s) y[s] = f.neg(f.div(u[s], p.alpha[s]));
        Code sum_y = 0;
        for (Code x : y) sum_y = f.add(sum_y, x);
        if (sum_v != 0) {
            const Code scale = f.div(sum_v, sum_y);
            for (auto& x : y) x = f.mul(x, scale);
        }
    }
    Code sum_y = 0;
    for (std::size_t s = 0; s < n; ++s) {
        h(0, s) = f.div(y[s], p.v[s]);
        sum_y = f.add(sum_y, y[s]);
    }
    h(0, n + 2) = f.neg(f.div(sum_y, p.b));
    return h;
}

/// a_{2j} = a_{1j} * (sum of alpha over `indices`), |indices| = k - m.
struct MdsWitness {
    int m = 0;
    int j = 0;
    Code target = 0;
    std::vector<std::size_t> indices;
    std::vector<Code> values;
};

struct MdsReport {
    bool is_mds = false;
    std::optional<std::size_t> alpha_zero_violation;
    std::optional<MdsWitness> witness;
    /// subset_counts[m-1][j-1] = #{I subset alpha : |I| = k-m, a_{1j} sum I = a_{2j}}; zero when a_{1j} = 0.
    std::array<std::array<BigCount, 2>, 2> subset_counts{};
};

/// MDS iff alpha has no zero and no (k-1)- or (k-2)-subset of alpha sums to a_{2j} / a_{1j}.
inline MdsReport check_mds(const EgrlParams& p) {
    p.validate();
    p.require_l2_t0();
    const Field& f = *p.field;
    MdsReport rep;
    for (std::size_t i = 0; i < p.n; ++i)
        if (p.alpha[i] == 0) rep.alpha_zero_violation = i;

    const auto table = subset_sum_table(f, p.alpha, p.k - 1);
    for (int m = 1; m <= 2; ++m) {
        const std::size_t size = p.k - static_cast<std::size_t>(m);
        for (int j = 1; j <= 2; ++j) {
            const Code a1 = p.M(0, static_cast<std::size_t>(j - 1)), a2 = p.M(1, static_cast<std::size_t>(j - 1));
            if (a1 == 0) continue;
            const Code target = f.div(a2, a1);
            const BigCount& cnt = table[size][target];
            rep.subset_counts[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)] = cnt;
            if (!rep.witness && cnt > 0) {
                auto idx = find_subset(f, p.alpha, size, target);
                MdsWitness w;
                w.m = m;
                w.j = j;
                w.target = target;
                w.indices = *idx;
                for (auto i : w.indices) w.values.push_back(p.alpha[i]);
                rep.witness = std::move(w);
            }
        }
    }
    rep.is_mds = !rep.alpha_zero_violation && !rep.witness;
    return rep;
}

/// Dual is AMDS iff alpha has no zero and some subset attains a_{2j} = a_{1j} sum I_m.
inline bool check_dual_amds(const EgrlParams& p) {
    const auto rep = check_mds(p);
    return !rep.alpha_zero_violation && rep.witness.has_value();
}

enum class StarOrder { Ascending, GeneratorPowers };

namespace detail {

inline void check_special_k(const Field& f, std::size_t k) {
    const std::size_t q = f.q();
    if (f.p() == 2) {
        if (k < 5 || k + 2 > q)
            throw Error(Errc::RangeViolation, "p = 2 requires 5 <= k <= q-2 (k = " + std::to_string(k) + ", q = " + std::to_string(q) + ")");
    } else if (k < 4 || k + 1 > q) {
        throw Error(Errc::RangeViolation, "p != 2 requires 4 <= k <= q-1 (k = " + std::to_string(k) + ", q = " + std::to_string(q) + ")");
    }
}

} // namespace detail

/// EGRL_{k,2,0}(F_q^*, 1, b): n = q-1, alpha enumerates F_q^*.
inline EgrlParams special_construction(FieldPtr field, std::size_t k, Code b, Matrix M,
                                       StarOrder order = StarOrder::Ascending) {
    detail::check_special_k(*field, k);
    EgrlParams p;
    p.alpha = order == StarOrder::Ascending ? field->nonzero() : field->generator_powers();
    p.n = p.alpha.size();
    p.k = k;
    p.ell = 2;
    p.t = 0;
    p.v.assign(p.n, 1);
    p.b = b;
    p.M = std::move(M);
    p.field = std::move(field);
    p.validate();
    return p;
}

/// Shape check: l = 2, t = 0, v = 1, alpha a permutation of F_q^*, k in range.
inline bool is_special_construction(const EgrlParams& p) {
    if (!p.field || p.ell != 2 || p.t != 0 || p.n + 1 != p.field->q()) return false;
    for (Code x : p.v)
        if (x != 1) return false;
    std::vector<bool> seen(p.field->q(), false);
    for (Code a : p.alpha) {
        if (a == 0 || !p.field->contains(a) || seen[a]) return false;
        seen[a] = true;
    }
    try {
        detail::check_special_k(*p.field, p.k);
        p.validate();
    } catch (const Error&) {
        return false;
    }
    return true;
}

namespace detail {

inline void require_special(const EgrlParams& p) {
    if (!is_special_construction(p))
        throw Error(Errc::UnsupportedShape, "not a special-construction instance (alpha = F_q^*, v = 1, ell = 2, t = 0, k in range)");
}

} // namespace detail

/// A_k of the dual: sum over columns s with a_{1s} != 0 of
/// (q-1) [N(k-1, a_{2s}/a_{1s}, F_q^*) + N(k-2, a_{2s}/a_{1s}, F_q^*)].
inline BigCount dual_min_weight_count(const EgrlParams& p) {
    detail::require_special(p);
    const Field& f = *p.field;
    BigCount total = 0;
    for (std::size_t s = 0; s < 2; ++s) {
        const Code a1 = p.M(0, s), a2 = p.M(1, s);
        if (a1 == 0) continue;
        const Code r = f.div(a2, a1);
        total += BigCount(f.q() - 1) * (count_li_wan(f, Domain::Star, p.k - 1, r) + count_li_wan(f, Domain::Star, p.k - 2, r));
    }
    return total;
}

/// Primal and dual distributions of the special [q+2, k, q+2-k] NMDS code.
inline std::pair<WeightDistribution, WeightDistribution> special_nmds_distribution(const EgrlParams& p) {
    return nmds_distribution(p.length(), p.k, *p.field, dual_min_weight_count(p));
}

/// Index bits: 1 = c_q != 0, 2 = c_{q+1} != 0, 4 = c_{q+2} != 0
/// (the last three coordinates of a dual codeword).
using TailCensus = std::array<BigCount, 8>;

inline constexpr unsigned kTailQ = 1, kTailQ1 = 2, kTailQ2 = 4;

/// Weight-k dual codewords counted by the zero pattern of their last three coordinates.
inline TailCensus dual_support_pattern_census(const EgrlParams& p, std::uint64_t budget = kDefaultBudget) {
    detail::require_special(p);
    const LinearCode dual = egrl_code(p).dual();
    const std::size_t len = dual.length(), n = p.n, k = p.k;
    std::array<std::uint64_t, 8> cnt{};
    for_each_codeword(
        dual,
        [&](const Code* w) {
            std::size_t wt = 0;
            for (std::size_t j = 0; j < len; ++j) wt += w[j] != 0;
            if (wt != k) return;
            const unsigned pat = (w[n] != 0 ? kTailQ : 0u) | (w[n + 1] != 0 ? kTailQ1 : 0u) | (w[n + 2] != 0 ? kTailQ2 : 0u);
            ++cnt[pat];
        },
        budget);
    TailCensus out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = cnt[i];
    return out;
}

/// The census predicted from subset-sum counts; every other pattern is zero.
inline TailCensus predicted_tail_census(const EgrlParams& p) {
    detail::require_special(p);
    const Field& f = *p.field;
    TailCensus out{};
    const BigCount unit = f.q() - 1;
    const unsigned single[2] = {kTailQ, kTailQ1};
    for (std::size_t s = 0; s < 2; ++s) {
        const Code a1 = p.M(0, s), a2 = p.M(1, s);
        if (a1 == 0) continue;
        const Code r = f.div(a2, a1);
        out[single[s]] += unit * count_li_wan(f, Domain::Star, p.k - 1, r);
        out[single[s] | kTailQ2] += unit * count_li_wan(f, Domain::Star, p.k - 2, r);
    }
    return out;
}

} // namespace egrl
