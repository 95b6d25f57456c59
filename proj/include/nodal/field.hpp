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

#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nodal {

class FieldError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Finite field F_q with q = p^k. Elements are packed integers in [0, q): the
/// base-p digits are the coefficients of the residue polynomial modulo the
/// defining polynomial. Prime fields (k = 1) use direct modular arithmetic;
/// proper extensions use Zech logarithm tables.
class FiniteField {
   public:
    using Elem = std::uint32_t;

    static FiniteField prime(std::uint32_t p);
    static FiniteField extension(std::uint32_t p, int degree);
    /// Accepts "fp:<p>" or "fp:<p>^<k>".
    static FiniteField parse(std::string_view spec);

    std::uint32_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return k_ == 1; }
    std::string name() const;
    /// Coefficients (constant term first) of the monic defining polynomial.
    std::vector<std::uint32_t> modulus() const;

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool is_zero(Elem a) const noexcept { return a == 0; }
    bool equal(Elem a, Elem b) const noexcept { return a == b; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    Elem from_integer(long long v) const noexcept;
    Elem from_integer(const mpz_class& v) const;
    /// Throws FieldError when p divides the denominator.
    Elem from_rational(const mpq_class& v) const;
    Elem from_digits(const std::vector<std::uint32_t>& digits) const;
    std::vector<std::uint32_t> digits(Elem a) const;

    /// Smallest j dividing k with a^(p^j) = a.
    int minimal_degree(Elem a) const noexcept;

    std::string to_string(Elem a) const { return std::to_string(a); }

    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
        return a.p_ == b.p_ && a.k_ == b.k_;
    }

   private:
    struct Tables {
        std::vector<std::uint32_t> modulus;
        std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
        std::vector<std::uint32_t> log;  // log[a], a != 0
        std::vector<std::int64_t> zech;  // log(1 + g^i), -1 when 1 + g^i = 0
        std::uint32_t minus_one_log = 0;
    };

    FiniteField(std::uint32_t p, int k, std::uint64_t q, std::shared_ptr<const Tables> t)
        : p_(p), k_(k), q_(q), tables_(std::move(t)) {}

    std::uint32_t p_;
    int k_;
    std::uint64_t q_;
    std::shared_ptr<const Tables> tables_;
};

/// The rational numbers, exact.
class RationalField {
   public:
    using Elem = mpq_class;

    std::string name() const { return "q"; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw FieldError("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, std::uint64_t e) const;
    Elem from_integer(long long v) const { return mpq_class(mpz_class(std::to_string(v))); }
    Elem from_integer(const mpz_class& v) const { return mpq_class(v); }
    Elem from_rational(const mpq_class& v) const { return v; }
    int minimal_degree(const Elem&) const { return 1; }
    std::string to_string(const Elem& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

template <class F>
concept Field = requires(const F& f, const typename F::Elem& a, long long i, const mpq_class& r) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.from_integer(i) } -> std::convertible_to<typename F::Elem>;
    { f.from_rational(r) } -> std::convertible_to<typename F::Elem>;
    { f.name() } -> std::convertible_to<std::string>;
};

static_assert(Field<FiniteField>);
static_assert(Field<RationalField>);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace nodal
