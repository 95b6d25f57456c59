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

#include "nodal/macaulay.hpp"

#include <string>
#include <utility>

namespace nodal::macaulay {

namespace {

void require_base(long d, long minimum) {
    if (d < minimum)
        throw std::invalid_argument("Macaulay base must be at least " + std::to_string(minimum) + ", got " +
                                    std::to_string(d));
}

void require_nonnegative(const mpz_class& c) {
    if (c < 0) throw std::invalid_argument("Macaulay expansion needs c >= 0, got " + c.get_str());
}

// Largest e >= -1 with binom(d + e, d) <= c.
mpz_class largest_epsilon(const mpz_class& c, long d) {
    if (c == 0) return -1;
    // binom(d + e, d) >= e + 1, so e <= c - 1.
    mpz_class lo = 0, hi = c - 1;
    if (d == 1) return hi;
    while (lo < hi) {
        mpz_class mid = (lo + hi + 1) / 2;
        if (binom(mid + d, d) <= c)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

template <class Term>
mpz_class sum_terms(const mpz_class& c, long d, long first, Term term) {
    const Expansion e = expand(c, d);
    mpz_class total = 0;
    for (long i = first; i <= d; ++i) total += term(i, e.epsilon(i));
    return total;
}

// binom(t + a, b) as a polynomial in t, for integer a and b >= 0.
RationalPolynomial binomial_in_t(const mpz_class& a, long b) {
    RationalPolynomial p;
    p.coefficients = {mpq_class(1)};
    for (long j = 0; j < b; ++j) {
        // multiply by (t + a - j) / (j + 1)
        const mpq_class shift = mpq_class(a - j) / (j + 1);
        const mpq_class scale = mpq_class(1, static_cast<unsigned long>(j + 1));
        std::vector<mpq_class> next(p.coefficients.size() + 1, mpq_class(0));
        for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
            next[i] += p.coefficients[i] * shift;
            next[i + 1] += p.coefficients[i] * scale;
        }
        p.coefficients = std::move(next);
    }
    return p;
}

void add_into(RationalPolynomial& acc, const RationalPolynomial& p) {
    if (acc.coefficients.size() < p.coefficients.size()) acc.coefficients.resize(p.coefficients.size(), mpq_class(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) acc.coefficients[i] += p.coefficients[i];
}

void trim(RationalPolynomial& p) {
    while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
}

}  // namespace

Expansion::Expansion(long base, mpz_class value, std::vector<mpz_class> eps_low_to_high)
    : base_(base), value_(std::move(value)), eps_(std::move(eps_low_to_high)) {}

mpz_class binom(const mpz_class& a, long b) {
    if (b < 0 || a < b) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
    return r;
}

Expansion expand(const mpz_class& c, long d) {
    require_base(d, 1);
    require_nonnegative(c);
    std::vector<mpz_class> eps(static_cast<std::size_t>(d), mpz_class(-1));
    mpz_class rest = c;
    for (long i = d; i >= 1 && rest > 0; --i) {
        mpz_class e = largest_epsilon(rest, i);
        rest -= binom(e + i, i);
        eps[static_cast<std::size_t>(i - 1)] = std::move(e);
    }
    return Expansion(d, c, std::move(eps));
}

mpz_class growth_up(const mpz_class& c, long d) {
    return sum_terms(c, d, 1, [](long i, const mpz_class& e) { return binom(e + i + 1, i + 1); });
}

mpz_class shrink(const mpz_class& c, long d) {
    return sum_terms(c, d, 1, [](long i, const mpz_class& e) { return binom(e + i - 1, i); });
}

mpz_class down(const mpz_class& c, long d) {
    require_base(d, 2);
    return sum_terms(c, d, 2, [](long i, const mpz_class& e) { return binom(e + i - 1, i - 1); });
}

mpz_class low_degree_bound(const mpz_class& c, long d, long k) {
    require_base(d, 1);
    require_nonnegative(c);
    if (k < 0 || k > d)
        throw std::invalid_argument("degree k=" + std::to_string(k) + " outside [0, " + std::to_string(d) + "]");
    if (c > 2 * d + 1)
        throw OutsideLowDegreeRange("low degree bound needs c <= 2d+1, got c=" + c.get_str() +
                                    ", d=" + std::to_string(d));
    const mpz_class kk = k;
    if (c <= d) return c < kk + 1 ? c : kk + 1;
    if (c <= 2 * d) {
        const mpz_class a = kk + (c - d), b = 2 * kk + 1;
        return a < b ? a : b;
    }
    return 2 * kk + 1;
}

long RationalPolynomial::degree() const noexcept {
    long deg = -1;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        if (coefficients[i] != 0) deg = static_cast<long>(i);
    return deg;
}

mpq_class RationalPolynomial::operator()(const mpq_class& t) const {
    mpq_class v = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * t + *it;
    return v;
}

HilbertPrediction gotzmann_predicted(const Expansion& e) {
    HilbertPrediction out;
    for (long i = 1; i <= e.base(); ++i) {
        const mpz_class& eps = e.epsilon(i);
        if (eps < 0) continue;
        // binom(t + eps, t) = binom(t + eps, eps)
        add_into(out.polynomial, binomial_in_t(eps, eps.get_si()));
    }
    trim(out.polynomial);
    out.dimension = e.epsilon(e.base());
    return out;
}

HilbertPrediction gotzmann_persistence(const Expansion& e) {
    HilbertPrediction out;
    for (long i = 1; i <= e.base(); ++i) {
        const mpz_class& eps = e.epsilon(i);
        if (eps < 0) continue;
        add_into(out.polynomial, binomial_in_t(eps + i - e.base(), eps.get_si()));
    }
    trim(out.polynomial);
    out.dimension = e.epsilon(e.base());
    return out;
}

bool check_macaulay_growth(const HilbertTable& h, long d) {
    const std::int64_t now = h.at(static_cast<int>(d));
    const std::int64_t next = h.at(static_cast<int>(d + 1));
    return mpz_class(static_cast<long>(next)) <= growth_up(mpz_class(static_cast<long>(now)), d);
}

}  // namespace nodal::macaulay
