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

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nodal/field.hpp"
#include "nodal/linalg.hpp"
#include "nodal/random.hpp"

namespace nodal {

using Exponent = std::vector<int>;

/// Ambient data for X = V(f_1, ..., f_c) in P(w_0, ..., w_{n+c}).
struct CIConfig {
    int n = 3;
    int c = 0;
    std::vector<int> weights;
    std::vector<int> degrees;  // ascending

    /// Standard weights (all 1) in P^{n+c}.
    static CIConfig standard(int n, std::vector<int> degrees);

    int num_vars() const noexcept { return static_cast<int>(weights.size()); }
    int D() const noexcept;
    int w() const noexcept;
    int m() const noexcept { return (n + 1) / 2; }
    int d(int i) const { return degrees.at(static_cast<std::size_t>(i - 1)); }  // 1-based
    int d_c() const { return degrees.back(); }
    bool standard_weights() const noexcept;

    /// Throws std::invalid_argument when an invariant fails.
    void validate() const;

    friend bool operator==(const CIConfig&, const CIConfig&) = default;
};

/// Weighted degree of an exponent vector.
int weighted_degree(std::span<const int> weights, std::span<const int> e);

/// Graded lexicographic comparison with x_0 > x_1 > ...: true when a comes before b.
bool grlex_before(std::span<const int> weights, const Exponent& a, const Exponent& b);

/// All exponent vectors of weighted degree `degree` supported on the selected
/// variables (others stay zero), in graded lexicographic order. An empty selector
/// selects every variable.
std::vector<Exponent> monomial_basis(std::span<const int> weights, int degree, const std::vector<bool>& selector = {});
std::vector<Exponent> monomial_basis(const CIConfig& config, int degree);

struct BigradedMonomial {
    Exponent x;
    Exponent y;
    friend bool operator==(const BigradedMonomial&, const BigradedMonomial&) = default;
};

/// Monomials x^a y^b with |b| = y_degree and wdeg(a) - sum b_j d_j = x_degree,
/// ordered by y exponent (y_1 first) and then by a.
std::vector<BigradedMonomial> bigraded_basis(const CIConfig& config, int x_degree, int y_degree);

struct Term {
    mpq_class coeff;
    Exponent exp;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with rational coefficients. Terms are kept sorted by
/// lexicographic exponent order (descending) with no zero coefficients.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(int num_vars) : nvars_(num_vars) {}
    Polynomial(int num_vars, std::vector<Term> terms);

    static Polynomial constant(int num_vars, const mpq_class& v);
    static Polynomial variable(int num_vars, int index);
    static Polynomial monomial(const mpq_class& coeff, Exponent exp);

    int num_vars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    mpq_class coefficient(const Exponent& e) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const mpq_class& s) const;
    Polynomial pow(unsigned e) const;

    Polynomial derivative(int var) const;
    /// Substitutes x_i -> images[i]; all images share one variable count.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Removes variable `var`, keeping only the terms where it does not occur.
    Polynomial drop_variable(int var) const;

    bool is_homogeneous(std::span<const int> weights) const;
    /// Weighted degree of the first term; -1 for the zero polynomial.
    int leading_weighted_degree(std::span<const int> weights) const;

    /// Least common multiple of coefficient denominators.
    mpz_class denominator_lcm() const;

    template <Field F>
    typename F::Elem evaluate(const F& f, std::span<const typename F::Elem> point) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void normalize();

    int nvars_ = 0;
    std::vector<Term> terms_;
};

class DegreeMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Homogeneous polynomial for the weights of P(w).
class GradedPolynomial {
   public:
    GradedPolynomial() = default;
    /// Throws DegreeMismatch if some term does not have weighted degree `degree`.
    GradedPolynomial(std::vector<int> weights, int degree, Polynomial poly);

    const Polynomial& poly() const noexcept { return poly_; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    int degree() const noexcept { return degree_; }
    int num_vars() const noexcept { return poly_.num_vars(); }

    GradedPolynomial operator+(const GradedPolynomial& o) const;
    GradedPolynomial operator*(const GradedPolynomial& o) const;
    GradedPolynomial derivative(int var) const;

    template <Field F>
    typename F::Elem evaluate(const F& f, std::span<const typename F::Elem> point) const {
        if (point.size() != static_cast<std::size_t>(num_vars()))
            throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) + " coordinates, need " +
                                        std::to_string(num_vars()));
        return poly_.evaluate(f, point);
    }

    friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

   private:
    std::vector<int> weights_;
    int degree_ = 0;
    Polynomial poly_;
};

/// Polynomial in x_0..x_N, y_1..y_c with deg x_i = (w_i, 0), deg y_j = (-d_j, 1).
/// Variables are stored x first, then y.
class BigradedPolynomial {
   public:
    BigradedPolynomial() = default;
    BigradedPolynomial(std::vector<int> x_weights, std::vector<int> y_degrees, std::pair<int, int> bidegree,
                       Polynomial poly);

    const Polynomial& poly() const noexcept { return poly_; }
    std::pair<int, int> bidegree() const noexcept { return bidegree_; }
    int num_x() const noexcept { return static_cast<int>(x_weights_.size()); }
    int num_y() const noexcept { return static_cast<int>(y_degrees_.size()); }

    /// Bidegree of a combined (x, y) exponent vector.
    std::pair<int, int> bidegree_of(std::span<const int> e) const;
    /// Coefficient polynomial of y_j (1-based) as a polynomial in x.
    Polynomial y_coefficient(int j) const;

    friend bool operator==(const BigradedPolynomial&, const BigradedPolynomial&) = default;

   private:
    std::vector<int> x_weights_;
    std::vector<int> y_degrees_;
    std::pair<int, int> bidegree_{0, 0};
    Polynomial poly_;
};

/// Result of moving a hyperplane to a coordinate hyperplane and restricting.
struct HyperplaneRestriction {
    int pivot = 0;                   // coordinate replaced by the linear form
    Matrix<RationalField> change;    // x' = change * x
    Polynomial restricted;           // in the remaining variables, original order
};

/// Restricts f to {sum a_i x_i = 0}. The last index with a_i != 0 becomes the pivot:
/// x'_pivot = l(x), x'_j = x_j otherwise; f is rewritten in x' and x'_pivot set to 0.
/// Requires standard weights.
HyperplaneRestriction restrict_hyperplane(const Polynomial& f, const std::vector<mpq_class>& linear_form);

struct CoefficientRange {
    std::int64_t lo = -9;
    std::int64_t hi = 9;
};

/// Dense homogeneous polynomial with integer coefficients drawn uniformly from
/// `range`. Degree 0 yields a nonzero constant.
GradedPolynomial random_polynomial(std::span<const int> weights, int degree, Rng& rng, CoefficientRange range = {});
GradedPolynomial random_polynomial(const CIConfig& config, int degree, std::uint64_t seed,
                                   CoefficientRange range = {});

/// Uniform element of a finite field, or a small nonzero-biased integer in Q.
inline FiniteField::Elem random_scalar(const FiniteField& f, Rng& rng) {
    return static_cast<FiniteField::Elem>(rng.below(f.order()));
}
inline RationalField::Elem random_scalar(const RationalField&, Rng& rng) {
    return mpq_class(static_cast<long>(rng.uniform(-9, 9)));
}

/// Scales a projective point so its first nonzero coordinate is 1. Throws on the zero vector.
template <Field F>
void normalize_point(const F& f, std::span<typename F::Elem> point) {
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (f.is_zero(point[i])) continue;
        const auto s = f.inv(point[i]);
        for (std::size_t j = i; j < point.size(); ++j) point[j] = f.mul(point[j], s);
        return;
    }
    throw std::invalid_argument("the zero vector is not a projective point");
}

/// Polynomial with coefficients mapped into F, evaluated with cached powers.
template <Field F>
class CompiledPolynomial {
   public:
    using Elem = typename F::Elem;

    CompiledPolynomial(const F& f, const Polynomial& p) : field_(f), nvars_(p.num_vars()) {
        max_exp_.assign(static_cast<std::size_t>(nvars_), 0);
        for (const auto& t : p.terms()) {
            coeffs_.push_back(f.from_rational(t.coeff));
            exps_.push_back(t.exp);
            for (int i = 0; i < nvars_; ++i) max_exp_[i] = std::max(max_exp_[i], t.exp[i]);
        }
    }

    Elem operator()(std::span<const Elem> point) const {
        std::vector<std::vector<Elem>> powers(static_cast<std::size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) {
            auto& row = powers[i];
            row.resize(static_cast<std::size_t>(max_exp_[i]) + 1);
            row[0] = field_.one();
            for (int e = 1; e <= max_exp_[i]; ++e) row[e] = field_.mul(row[e - 1], point[i]);
        }
        Elem total = field_.zero();
        for (std::size_t t = 0; t < coeffs_.size(); ++t) {
            Elem v = coeffs_[t];
            for (int i = 0; i < nvars_ && !field_.is_zero(v); ++i)
                if (exps_[t][i]) v = field_.mul(v, powers[i][exps_[t][i]]);
            total = field_.add(total, v);
        }
        return total;
    }

   private:
    F field_;
    int nvars_;
    std::vector<int> max_exp_;
    std::vector<Elem> coeffs_;
    std::vector<Exponent> exps_;
};

/// x^e at a point.
template <Field F>
typename F::Elem monomial_value(const F& f, std::span<const int> e, std::span<const typename F::Elem> point) {
    auto v = f.one();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) v = f.mul(v, f.pow(point[i], static_cast<std::uint64_t>(e[i])));
    return v;
}

template <Field F>
typename F::Elem Polynomial::evaluate(const F& f, std::span<const typename F::Elem> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) + " coordinates, need " +
                                    std::to_string(nvars_));
    auto total = f.zero();
    for (const auto& t : terms_) total = f.add(total, f.mul(f.from_rational(t.coeff), monomial_value(f, t.exp, point)));
    return total;
}

}  // namespace nodal
