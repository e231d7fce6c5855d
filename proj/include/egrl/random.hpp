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

#pragma once

#include "egrl/egrl.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace egrl {

/// Seeded generator whose streams are identical on every platform:
/// std::uniform_int_distribution is implementation-defined, so bounded
/// draws use rejection on the raw 64-bit output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error(Errc::RangeViolation, "empty sampling range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return x % n;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        if (hi < lo) throw Error(Errc::RangeViolation, "empty sampling range");
        return lo + below(hi - lo + 1);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

inline Code random_nonzero(const Field& f, Rng& rng) { return static_cast<Code>(rng.between(1, f.q() - 1)); }

/// n distinct field elements in random order.
inline std::vector<Code> random_distinct(const Field& f, std::size_t n, Rng& rng, bool allow_zero = true) {
    std::vector<Code> pool = allow_zero ? f.elements() : f.nonzero();
    if (n > pool.size()) throw Error(Errc::RangeViolation, "asked for more distinct elements than available");
    rng.shuffle(pool);
    pool.resize(n);
    return pool;
}

inline Matrix random_invertible(const FieldPtr& f, std::size_t l, Rng& rng) {
    while (true) {
        Matrix m(f, l, l);
        for (std::size_t r = 0; r < l; ++r)
            for (std::size_t c = 0; c < l; ++c) m(r, c) = static_cast<Code>(rng.below(f->q()));
        if (m.det() != 0) return m;
    }
}

/// Random valid EGRL_{k,2,0} instance of length n + 3.
inline EgrlParams random_params(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng, bool allow_zero = true,
                                bool unit_v = false) {
    EgrlParams p;
    p.field = f;
    p.n = n;
    p.k = k;
    p.ell = 2;
    p.t = 0;
    p.alpha = random_distinct(*f, n, rng, allow_zero);
    p.v.resize(n, 1);
    if (!unit_v)
        for (auto& x : p.v) x = random_nonzero(*f, rng);
    p.b = random_nonzero(*f, rng);
    p.M = random_invertible(f, 2, rng);
    p.validate();
    return p;
}

} // namespace egrl
