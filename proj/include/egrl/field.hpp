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
 * @file field.hpp
 * @brief Finite fields GF(p^s) with integer element codes.
 *
 * An element c_0 + c_1 x + ... + c_{s-1} x^{s-1} of GF(p)[x]/(f) is encoded as
 * the integer sum c_i p^i. Code 0 is the additive identity and code 1 the
 * multiplicative identity. All text and JSON I/O uses these codes.
 *
 * Fields with q <= 2^16 use log/antilog tables (and a full addition table for
 * q <= 256); larger fields fall back to polynomial arithmetic.
 */

#pragma once

#include "egrl/error.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace egrl {

/// Integer code of a field element, in [0, q).
using Code = std::uint32_t;

namespace detail {

/// Polynomial over GF(p), coefficients low-degree-first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = mod_pow(f.back(), p - 2, p);
    while (a.size() > df) {
        const std::size_t shift = a.size() - 1 - df;
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= df; ++i) {
            const std::uint64_t sub = c * f[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return poly_mod(std::move(r), f, p);
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// x^(p^d) mod f, by d applications of the Frobenius map.
inline Poly frobenius_power_of_x(unsigned d, const Poly& f, std::uint32_t p) {
    Poly x = poly_mod(Poly{0, 1}, f, p);
    for (unsigned i = 0; i < d; ++i) x = poly_powmod(x, p, f, p);
    return x;
}

/// Rabin's test: f monic of degree s is irreducible iff x^(p^s) = x (mod f)
/// and gcd(x^(p^(s/r)) - x, f) = 1 for every prime r | s.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const unsigned s = static_cast<unsigned>(f.size() - 1);
    if (s == 0) return false;
    if (s == 1) return true;
    const Poly x = Poly{0, 1};
    if (poly_sub(frobenius_power_of_x(s, f, p), x, p).size() != 0) return false;
    for (std::uint64_t r : prime_factors(s)) {
        Poly g = poly_gcd(f, poly_sub(frobenius_power_of_x(static_cast<unsigned>(s / r), f, p), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Irreducible f is primitive iff x has multiplicative order p^s - 1 modulo f.
inline bool is_primitive(const Poly& f, std::uint32_t p) {
    if (!is_irreducible(f, p)) return false;
    const unsigned s = static_cast<unsigned>(f.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) q *= p;
    if (q == 2) return true;
    for (std::uint64_t r : prime_factors(q - 1)) {
        if (poly_powmod(Poly{0, 1}, (q - 1) / r, f, p) == Poly{1}) return false;
    }
    return true;
}

} // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * A finite field context. Immutable after construction and safe to share
 * between threads; pass it around as FieldPtr.
 */
class Field {
public:
    /// Builds GF(p^s). Without a modulus (s > 1) the lexicographically smallest
    /// primitive monic polynomial is chosen, comparing c_0 first.
    static FieldPtr make(std::uint32_t p, std::uint32_t s = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        return FieldPtr(new Field(p, s, std::move(modulus)));
    }

    /// Builds GF(q) for a prime power q.
    static FieldPtr make_q(std::uint64_t q, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        if (q < 2) throw Error(Errc::CompositeCharacteristic, "q = " + std::to_string(q));
        const auto f = detail::prime_factors(q);
        if (f.size() != 1) throw Error(Errc::CompositeCharacteristic, "q = " + std::to_string(q) + " is not a prime power");
        std::uint32_t s = 0;
        for (std::uint64_t t = q; t > 1; t /= f[0]) ++s;
        return make(static_cast<std::uint32_t>(f[0]), s, std::move(modulus));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t s() const noexcept { return s_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool operator==(const Field& o) const noexcept {
        return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
    }

    /// "p=<p> s=<s> mod=<c_0,...,c_s>"
    std::string to_string() const {
        std::ostringstream os;
        os << "p=" << p_ << " s=" << s_ << " mod=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
        return os.str();
    }

    bool contains(std::int64_t c) const noexcept { return c >= 0 && c < static_cast<std::int64_t>(q_); }

    /// Prime-field image of an integer.
    Code from_int(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Code>(r);
    }

    std::vector<std::uint32_t> digits(Code a) const {
        std::vector<std::uint32_t> d(s_);
        for (std::uint32_t i = 0; i < s_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    Code from_digits(const std::vector<std::uint32_t>& d) const {
        Code c = 0;
        for (std::size_t i = d.size(); i-- > 0;) c = c * p_ + d[i] % p_;
        return c;
    }

    Code add(Code a, Code b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        if (s_ == 1) return static_cast<Code>((static_cast<std::uint64_t>(a) + b) % p_);
        Code r = 0, place = 1;
        for (std::uint32_t i = 0; i < s_; ++i) {
            r += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return r;
    }

    Code neg(Code a) const noexcept {
        if (p_ == 2) return a;
        if (!neg_table_.empty()) return neg_table_[a];
        Code r = 0, place = 1;
        for (std::uint32_t i = 0; i < s_; ++i) {
            r += ((p_ - a % p_) % p_) * place;
            a /= p_;
            place *= p_;
        }
        return r;
    }

    Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

    Code mul(Code a, Code b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) {
            std::uint32_t e = log_[a] + log_[b];
            if (e >= q_ - 1) e -= q_ - 1;
            return exp_[e];
        }
        return mul_poly(a, b);
    }

    Code inv(Code a) const {
        if (a == 0) throw Error(Errc::ZeroInverse, "inverse of 0 in " + to_string());
        if (!log_.empty()) return exp_[log_[a] == 0 ? 0 : q_ - 1 - log_[a]];
        return pow_slow(a, q_ - 2);
    }

    Code div(Code a, Code b) const { return mul(a, inv(b)); }

    /// a^e; negative exponents require a != 0. 0^0 = 1.
    Code pow(Code a, std::int64_t e) const {
        if (e < 0) return pow(inv(a), -e);
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t r = static_cast<std::uint64_t>(e) % (q_ - 1);
        if (!log_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * r % (q_ - 1)];
        return pow_slow(a, r);
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Code a) const {
        if (a == 0) throw Error(Errc::ZeroInverse, "order of 0");
        std::uint64_t ord = q_ - 1;
        for (std::uint64_t r : detail::prime_factors(q_ - 1)) {
            while (ord % r == 0 && pow(a, static_cast<std::int64_t>(ord / r)) == 1) ord /= r;
        }
        return ord;
    }

    /// Smallest-code element of order q - 1.
    Code primitive() const {
        if (q_ < 3) throw Error(Errc::NoPrimitive, "GF(2) has no element of order >= 2");
        return primitive_;
    }

    /// Codes 0..q-1 ascending.
    std::vector<Code> elements() const {
        std::vector<Code> v(q_);
        for (Code i = 0; i < q_; ++i) v[i] = i;
        return v;
    }

    /// Codes 1..q-1 ascending.
    std::vector<Code> nonzero() const {
        std::vector<Code> v(q_ - 1);
        for (Code i = 1; i < q_; ++i) v[i - 1] = i;
        return v;
    }

    /// w^0, w^1, ..., w^(q-2) for the smallest-code primitive element w.
    std::vector<Code> generator_powers() const {
        std::vector<Code> v;
        v.reserve(q_ - 1);
        Code x = 1;
        const Code w = q_ == 2 ? 1 : primitive_;
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            v.push_back(x);
            x = mul(x, w);
        }
        return v;
    }

    /// Full q x q addition table when tabulated (q <= 256, p odd), else empty.
    const std::vector<Code>& add_table() const noexcept { return add_table_; }

private:
    Field(std::uint32_t p, std::uint32_t s, std::optional<std::vector<std::uint32_t>> modulus) : p_(p), s_(s) {
        if (!detail::is_prime(p)) throw Error(Errc::CompositeCharacteristic, "p = " + std::to_string(p));
        if (s < 1) throw Error(Errc::BadModulus, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < s; ++i) {
            q *= p;
            if (q > (1ull << 31)) throw Error(Errc::BadModulus, "field too large");
        }
        q_ = static_cast<std::uint32_t>(q);

        if (modulus) {
            auto& m = *modulus;
            if (m.size() != s + 1) throw Error(Errc::BadModulus, "modulus must have s+1 coefficients");
            for (auto c : m)
                if (c >= p) throw Error(Errc::BadModulus, "modulus coefficient out of range");
            if (m.back() != 1) throw Error(Errc::NonMonic, "leading coefficient must be 1");
            if (!detail::is_irreducible(m, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible");
            modulus_ = s == 1 ? std::vector<std::uint32_t>{0, 1} : m;
        } else if (s == 1) {
            modulus_ = {0, 1};
        } else {
            modulus_ = default_modulus();
        }
        build_tables();
    }

    std::vector<std::uint32_t> default_modulus() const {
        // Enumerate (c_0, ..., c_{s-1}) lexicographically with c_0 most significant.
        std::vector<std::uint32_t> f(s_ + 1, 0);
        f[s_] = 1;
        for (std::uint64_t idx = 0; idx < q_; ++idx) {
            std::uint64_t t = idx;
            for (std::uint32_t i = s_; i-- > 0;) {
                f[i] = static_cast<std::uint32_t>(t % p_);
                t /= p_;
            }
            if (f[0] != 0 && detail::is_primitive(f, p_)) return f;
        }
        throw Error(Errc::BadModulus, "no primitive polynomial found");
    }

    Code mul_poly(Code a, Code b) const {
        if (s_ == 1) return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
        detail::Poly pa = digits(a), pb = digits(b);
        detail::trim(pa);
        detail::trim(pb);
        detail::Poly r = detail::poly_mod(detail::poly_mul(pa, pb, p_), modulus_, p_);
        r.resize(s_, 0);
        return from_digits(r);
    }

    Code pow_slow(Code a, std::uint64_t e) const {
        Code r = 1;
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        primitive_ = 1;
        if (q_ >= 3) {
            auto factors = detail::prime_factors(q_ - 1);
            for (Code c = 2; c < q_; ++c) {
                bool prim = true;
                for (auto r : factors)
                    if (pow_slow(c, (q_ - 1) / r) == 1) {
                        prim = false;
                        break;
                    }
                if (prim) {
                    primitive_ = c;
                    break;
                }
            }
        }
        if (q_ <= (1u << 16)) {
            exp_.assign(q_ - 1, 0);
            log_.assign(q_, 0);
            Code x = 1;
            for (std::uint32_t i = 0; i + 1 < q_; ++i) {
                exp_[i] = x;
                log_[x] = i;
                x = mul_poly(x, primitive_);
            }
            std::vector<Code> negs(q_);
            for (Code a = 0; a < q_; ++a) negs[a] = neg(a);
            neg_table_ = std::move(negs);
        }
        if (p_ != 2 && q_ <= 256 && s_ > 1) {
            std::vector<Code> t(static_cast<std::size_t>(q_) * q_);
            for (Code a = 0; a < q_; ++a)
                for (Code b = 0; b < q_; ++b) t[static_cast<std::size_t>(a) * q_ + b] = add(a, b);
            add_table_ = std::move(t);
        }
    }

    std::uint32_t p_;
    std::uint32_t s_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Code primitive_ = 1;
    std::vector<Code> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Code> neg_table_;
    std::vector<Code> add_table_;
};

/// A field element bound to its context. Mixing contexts throws CtxMismatch.
class FieldElem {
public:
    FieldElem(FieldPtr ctx, Code code) : ctx_(std::move(ctx)), code_(code) {
        if (!ctx_->contains(code)) throw Error(Errc::DomainSize, "code " + std::to_string(code) + " not in " + ctx_->to_string());
    }

    const FieldPtr& ctx() const noexcept { return ctx_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElem operator+(const FieldElem& o) const { return {ctx_, ctx_->add(code_, same(o))}; }
    FieldElem operator-(const FieldElem& o) const { return {ctx_, ctx_->sub(code_, same(o))}; }
    FieldElem operator*(const FieldElem& o) const { return {ctx_, ctx_->mul(code_, same(o))}; }
    FieldElem operator/(const FieldElem& o) const { return {ctx_, ctx_->div(code_, same(o))}; }
    FieldElem operator-() const { return {ctx_, ctx_->neg(code_)}; }
    FieldElem inv() const { return {ctx_, ctx_->inv(code_)}; }
    FieldElem pow(std::int64_t e) const { return {ctx_, ctx_->pow(code_, e)}; }

    bool operator==(const FieldElem& o) const { return code_ == same(o); }

private:
    Code same(const FieldElem& o) const {
        if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_))
            throw Error(Errc::CtxMismatch, ctx_->to_string() + " vs " + o.ctx_->to_string());
        return o.code_;
    }

    FieldPtr ctx_;
    Code code_;
};

/// Parses "c_0,c_1,...,c_s" into modulus coefficients.
inline std::vector<std::uint32_t> parse_code_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw Error(Errc::ParseError, "bad integer '" + item + "'");
        }
    }
    return out;
}

/// Inverse of Field::to_string().
inline FieldPtr parse_field(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::optional<std::uint32_t> p, s;
    std::optional<std::vector<std::uint32_t>> mod;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error(Errc::ParseError, "bad field token '" + tok + "'");
        auto key = tok.substr(0, eq), val = tok.substr(eq + 1);
        auto single = [&](const std::string& v) {
            auto l = parse_code_list(v);
            if (l.size() != 1) throw Error(Errc::ParseError, "expected one integer for '" + key + "'");
            return l[0];
        };
        if (key == "p") p = single(val);
        else if (key == "s") s = single(val);
        else if (key == "mod") mod = parse_code_list(val);
        else throw Error(Errc::ParseError, "unknown field key '" + key + "'");
    }
    if (!p || !s) throw Error(Errc::ParseError, "field needs p= and s=");
    return Field::make(*p, *s, mod);
}

} // namespace egrl
