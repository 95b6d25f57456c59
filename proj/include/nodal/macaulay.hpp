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

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "nodal/hilbert_table.hpp"

namespace nodal::macaulay {

/// c = sum_{i=1}^{d} binom(i + eps_i, i), eps_d >= ... >= eps_1 >= -1.
class Expansion {
   public:
    Expansion(long base, mpz_class value, std::vector<mpz_class> eps_low_to_high);

    long base() const noexcept { return base_; }
    const mpz_class& value() const noexcept { return value_; }
    /// eps_i for 1 <= i <= base.
    const mpz_class& epsilon(long i) const { return eps_.at(static_cast<std::size_t>(i - 1)); }
    /// (eps_d, ..., eps_1), highest index first.
    std::vector<mpz_class> epsilons_descending() const { return {eps_.rbegin(), eps_.rend()}; }

    friend bool operator==(const Expansion&, const Expansion&) = default;

   private:
    long base_;
    mpz_class value_;
    std::vector<mpz_class> eps_;  // eps_[i-1] = eps_i
};

/// Binomial coefficient with binom(a, b) = 0 whenever b < 0 or a < b.
mpz_class binom(const mpz_class& a, long b);

/// Greedy expansion of c in base d. Throws std::invalid_argument for d <= 0 or c < 0.
Expansion expand(const mpz_class& c, long d);

/// c^<d>: bound on the codimension of V * S_1 given codim V = c in degree d.
mpz_class growth_up(const mpz_class& c, long d);
/// c_<d>.
mpz_class shrink(const mpz_class& c, long d);
/// c_{*d}: lower bound for h(d-1) given h(d) = c. Requires d >= 2.
mpz_class down(const mpz_class& c, long d);

class OutsideLowDegreeRange : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// Lower bound for h(k), 0 <= k <= d, when h(d) = c <= 2d + 1.
/// Throws OutsideLowDegreeRange when c > 2d + 1.
mpz_class low_degree_bound(const mpz_class& c, long d, long k);

/// Univariate polynomial in t with exact rational coefficients, constant term first.
struct RationalPolynomial {
    std::vector<mpq_class> coefficients;

    long degree() const noexcept;
    mpq_class operator()(const mpq_class& t) const;
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
};

struct HilbertPrediction {
    RationalPolynomial polynomial;
    mpz_class dimension;  // eps_d; -1 means the empty scheme
};

/// sum_i binom(t + eps_i, t), exactly as displayed with Gotzmann's theorem.
HilbertPrediction gotzmann_predicted(const Expansion& e);
/// sum_i binom(t - d + i + eps_i, eps_i): the values obtained by iterating c -> c^<k>
/// from degree d. Agrees with gotzmann_predicted whenever every eps_i < 1 for i < d.
HilbertPrediction gotzmann_persistence(const Expansion& e);

/// True iff h(d+1) <= growth_up(h(d), d). Throws MissingDegree if either value is absent.
bool check_macaulay_growth(const HilbertTable& h, long d);

}  // namespace nodal::macaulay
