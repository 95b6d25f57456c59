/*
   Copyright 2026 The nodal-ci Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nodal/field.hpp"

#include <charconv>
#include <limits>
#include <tuple>
#include <utility>

namespace nodal {

namespace {

std::uint64_t checked_power(std::uint32_t p, int k) {
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > (std::uint64_t{1} << 32) / p) throw FieldError("field order exceeds 2^32");
        q *= p;
    }
    return q;
}

// Digit-wise addition of two packed elements of F_p[t]/(m).
std::uint32_t digit_add(std::uint32_t a, std::uint32_t b, std::uint32_t p, int k) {
    std::uint32_t out = 0, scale = 1;
    for (int i = 0; i < k; ++i) {
        const std::uint32_t s = (a % p + b % p) % p;
        out += s * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

// Multiplication by t in F_p[t]/(m) for monic m given by its low coefficients.
std::uint32_t times_t(std::uint32_t a, const std::vector<std::uint32_t>& m, std::uint32_t p, int k) {
    std::vector<std::uint32_t> d(k + 1, 0);
    for (int i = 0; i < k; ++i) {
        d[i + 1] = a % p;
        a /= p;
    }
    const std::uint32_t top = d[k];
    std::uint32_t out = 0, scale = 1;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t v = (d[i] + static_cast<std::uint64_t>(p - m[i]) * top) % p;
        out += static_cast<std::uint32_t>(v) * scale;
        scale *= p;
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteField FiniteField::prime(std::uint32_t p) {
    if (p < 3 || !is_prime(p) || p > (1u << 31)) throw FieldError("fp:" + std::to_string(p) + " is not an odd prime below 2^31");
    return FiniteField(p, 1, p, nullptr);
}

FiniteField FiniteField::extension(std::uint32_t p, int degree) {
    if (degree == 1) return prime(p);
    if (degree < 1) throw FieldError("extension degree must be positive");
    if (p < 3 || !is_prime(p)) throw FieldError("characteristic must be an odd prime");
    const std::uint64_t q = checked_power(p, degree);
    if (q > (1u << 24)) throw FieldError("extension field too large for table arithmetic");

    // Search monic polynomials in increasing packed order for one whose root t
    // generates the multiplicative group; such a polynomial is primitive.
    auto tables = std::make_shared<Tables>();
    const std::uint32_t ord = static_cast<std::uint32_t>(q - 1);
    std::vector<std::uint32_t> m(degree);
    for (std::uint64_t code = 1; code < q; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < degree; ++i) {
            m[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (m[0] == 0) continue;
        std::vector<std::uint32_t> exp;
        exp.reserve(ord);
        std::uint32_t x = 1;
        bool ok = true;
        for (std::uint32_t i = 0; i < ord; ++i) {
            if (i > 0 && x == 1) {
                ok = false;
                break;
            }
            exp.push_back(x);
            x = times_t(x, m, p, degree);
        }
        if (!ok || x != 1) continue;
        tables->modulus = m;
        tables->exp = std::move(exp);
        break;
    }
    if (tables->exp.empty()) throw FieldError("no primitive polynomial found");

    tables->log.assign(q, 0);
    for (std::uint32_t i = 0; i < ord; ++i) tables->log[tables->exp[i]] = i;
    tables->zech.assign(ord, -1);
    for (std::uint32_t i = 0; i < ord; ++i) {
        const std::uint32_t s = digit_add(1, tables->exp[i], p, degree);
        tables->zech[i] = s == 0 ? -1 : static_cast<std::int64_t>(tables->log[s]);
    }
    tables->minus_one_log = ord / 2;
    return FiniteField(p, degree, q, std::move(tables));
}

FiniteField FiniteField::parse(std::string_view spec) {
    if (spec.substr(0, 3) != "fp:") throw FieldError("field spec must look like fp:<p> or fp:<p>^<k>, got '" + std::string(spec) + "'");
    spec.remove_prefix(3);
    const auto caret = spec.find('^');
    auto read = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || v > std::numeric_limits<std::uint32_t>::max())
            throw FieldError("malformed field spec");
        return static_cast<std::uint32_t>(v);
    };
    if (caret == std::string_view::npos) return prime(read(spec));
    return extension(read(spec.substr(0, caret)), static_cast<int>(read(spec.substr(caret + 1))));
}

std::string FiniteField::name() const {
    std::string s = "fp:" + std::to_string(p_);
    if (k_ > 1) s += "^" + std::to_string(k_);
    return s;
}

std::vector<std::uint32_t> FiniteField::modulus() const {
    if (k_ == 1) return {0, 1};
    std::vector<std::uint32_t> m = tables_->modulus;
    m.push_back(1);
    return m;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const noexcept {
    if (k_ == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const auto& t = *tables_;
    std::uint32_t la = t.log[a], lb = t.log[b];
    if (la > lb) std::swap(la, lb);
    const std::int64_t z = t.zech[lb - la];
    if (z < 0) return 0;
    return t.exp[(la + static_cast<std::uint64_t>(z)) % (q_ - 1)];
}

FiniteField::Elem FiniteField::neg(Elem a) const noexcept {
    if (a == 0) return 0;
    if (k_ == 1) return p_ - a;
    const auto& t = *tables_;
    return t.exp[(t.log[a] + t.minus_one_log) % (q_ - 1)];
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const noexcept {
    if (k_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    const auto& t = *tables_;
    return t.exp[(std::uint64_t{t.log[a]} + t.log[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw FieldError("division by zero in " + name());
    if (k_ == 1) {
        std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const std::int64_t qt = r0 / r1;
            std::tie(r0, r1) = std::pair{r1, r0 - qt * r1};
            std::tie(s0, s1) = std::pair{s1, s0 - qt * s1};
        }
        if (s0 < 0) s0 += p_;
        return static_cast<Elem>(s0);
    }
    const auto& t = *tables_;
    return t.exp[(q_ - 1 - t.log[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::from_integer(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return static_cast<Elem>(r.get_ui());
}

FiniteField::Elem FiniteField::from_rational(const mpq_class& v) const {
    const Elem den = from_integer(v.get_den());
    if (den == 0) throw FieldError("denominator " + v.get_den().get_str() + " vanishes in " + name());
    return div(from_integer(v.get_num()), den);
}

FiniteField::Elem FiniteField::from_digits(const std::vector<std::uint32_t>& digits) const {
    if (static_cast<int>(digits.size()) > k_) throw FieldError("too many digits for " + name());
    Elem out = 0, scale = 1;
    for (auto d : digits) {
        if (d >= p_) throw FieldError("digit out of range for " + name());
        out += d * scale;
        scale *= p_;
    }
    return out;
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
    std::vector<std::uint32_t> d(k_);
    for (int i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

int FiniteField::minimal_degree(Elem a) const noexcept {
    for (int j = 1; j < k_; ++j) {
        if (k_ % j) continue;
        if (pow(a, checked_power(p_, j)) == a) return j;
    }
    return k_;
}

RationalField::Elem RationalField::pow(const Elem& a, std::uint64_t e) const {
    Elem r = 1, b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace nodal
