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

#include "nodal/polyring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nodal {

CIConfig CIConfig::standard(int n, std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end());
    CIConfig cfg;
    cfg.n = n;
    cfg.c = static_cast<int>(degrees.size());
    cfg.weights.assign(static_cast<std::size_t>(n + cfg.c + 1), 1);
    cfg.degrees = std::move(degrees);
    return cfg;
}

int CIConfig::D() const noexcept { return std::accumulate(degrees.begin(), degrees.end(), 0); }
int CIConfig::w() const noexcept { return std::accumulate(weights.begin(), weights.end(), 0); }

bool CIConfig::standard_weights() const noexcept {
    return std::all_of(weights.begin(), weights.end(), [](int x) { return x == 1; });
}

void CIConfig::validate() const {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("dimension n must be odd and positive, got " + std::to_string(n));
    if (c < 1 || static_cast<int>(degrees.size()) != c)
        throw std::invalid_argument("codimension c must equal the number of degrees");
    if (num_vars() != n + c + 1)
        throw std::invalid_argument("expected " + std::to_string(n + c + 1) + " weights, got " +
                                    std::to_string(num_vars()));
    for (int x : weights)
        if (x <= 0) throw std::invalid_argument("weights must be positive");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] <= 0) throw std::invalid_argument("degrees must be positive");
        if (i && degrees[i] < degrees[i - 1]) throw std::invalid_argument("degrees must be sorted ascending");
    }
}

int weighted_degree(std::span<const int> weights, std::span<const int> e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
    return d;
}

bool grlex_before(std::span<const int> weights, const Exponent& a, const Exponent& b) {
    const int da = weighted_degree(weights, a), db = weighted_degree(weights, b);
    if (da != db) return da < db;
    return a > b;
}

std::vector<Exponent> monomial_basis(std::span<const int> weights, int degree, const std::vector<bool>& selector) {
    std::vector<Exponent> out;
    if (degree < 0) return out;
    const std::size_t nv = weights.size();
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < nv; ++i)
        if (selector.empty() || selector[i]) vars.push_back(i);
    Exponent e(nv, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (idx == vars.size()) {
            if (left == 0) out.push_back(e);
            return;
        }
        const std::size_t v = vars[idx];
        for (int k = left / weights[v]; k >= 0; --k) {
            e[v] = k;
            rec(idx + 1, left - k * weights[v]);
        }
        e[v] = 0;
    };
    rec(0, degree);
    return out;
}

std::vector<Exponent> monomial_basis(const CIConfig& config, int degree) {
    return monomial_basis(config.weights, degree);
}

std::vector<BigradedMonomial> bigraded_basis(const CIConfig& config, int x_degree, int y_degree) {
    std::vector<BigradedMonomial> out;
    if (y_degree < 0) return out;
    const std::vector<int> unit(static_cast<std::size_t>(config.c), 1);
    for (auto& y : monomial_basis(unit, y_degree)) {
        const int need = x_degree + weighted_degree(config.degrees, y);
        for (auto& x : monomial_basis(config.weights, need)) out.push_back({std::move(x), y});
    }
    return out;
}

Polynomial::Polynomial(int num_vars, std::vector<Term> terms) : nvars_(num_vars), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (static_cast<int>(t.exp.size()) != nvars_) throw std::invalid_argument("term has wrong exponent length");
    normalize();
}

Polynomial Polynomial::constant(int num_vars, const mpq_class& v) {
    return Polynomial(num_vars, {Term{v, Exponent(static_cast<std::size_t>(num_vars), 0)}});
}

Polynomial Polynomial::variable(int num_vars, int index) {
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return Polynomial(num_vars, {Term{1, std::move(e)}});
}

Polynomial Polynomial::monomial(const mpq_class& coeff, Exponent exp) {
    const int nv = static_cast<int>(exp.size());
    return Polynomial(nv, {Term{coeff, std::move(exp)}});
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp > b.exp; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
    for (auto& t : merged) t.coeff.canonicalize();
    terms_ = std::move(merged);
}

mpq_class Polynomial::coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponent& x) { return t.exp > x; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (o.nvars_ != nvars_ && !o.is_zero() && !is_zero()) throw std::invalid_argument("variable count mismatch");
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(std::max(nvars_, o.nvars_), std::move(all));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Exponent e(a.exp);
            for (int i = 0; i < nvars_; ++i) e[i] += b.exp[i];
            all.push_back({a.coeff * b.coeff, std::move(e)});
        }
    return Polynomial(nvars_, std::move(all));
}

Polynomial Polynomial::scaled(const mpq_class& s) const {
    std::vector<Term> all = terms_;
    for (auto& t : all) t.coeff *= s;
    return Polynomial(nvars_, std::move(all));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, 1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("derivative: no variable " + std::to_string(var));
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exp[var] == 0) continue;
        Term d{t.coeff * t.exp[var], t.exp};
        --d.exp[var];
        out.push_back(std::move(d));
    }
    return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: need one image per variable");
    const int target = images.empty() ? 0 : images.front().num_vars();
    std::vector<std::vector<Polynomial>> powers(images.size());
    Polynomial total(target);
    for (const auto& t : terms_) {
        Polynomial v = constant(target, t.coeff);
        for (int i = 0; i < nvars_; ++i) {
            const int e = t.exp[i];
            if (!e) continue;
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target, 1));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
            v = v * cache[e];
        }
        total = total + v;
    }
    return total;
}

Polynomial Polynomial::drop_variable(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exp[var] != 0) continue;
        Term r{t.coeff, {}};
        for (int i = 0; i < nvars_; ++i)
            if (i != var) r.exp.push_back(t.exp[i]);
        out.push_back(std::move(r));
    }
    return Polynomial(nvars_ - 1, std::move(out));
}

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
    if (terms_.empty()) return true;
    const int d = weighted_degree(weights, terms_.front().exp);
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return weighted_degree(weights, t.exp) == d; });
}

int Polynomial::leading_weighted_degree(std::span<const int> weights) const {
    return terms_.empty() ? -1 : weighted_degree(weights, terms_.front().exp);
}

mpz_class Polynomial::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
}

GradedPolynomial::GradedPolynomial(std::vector<int> weights, int degree, Polynomial poly)
    : weights_(std::move(weights)), degree_(degree), poly_(std::move(poly)) {
    if (static_cast<int>(weights_.size()) != poly_.num_vars() && !poly_.is_zero())
        throw std::invalid_argument("weights do not match the variable count");
    if (poly_.num_vars() == 0) poly_ = Polynomial(static_cast<int>(weights_.size()));
    for (const auto& t : poly_.terms())
        if (weighted_degree(weights_, t.exp) != degree_)
            throw DegreeMismatch("term of weighted degree " + std::to_string(weighted_degree(weights_, t.exp)) +
                                 " in a polynomial of degree " + std::to_string(degree_));
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& o) const {
    if (o.degree_ != degree_) throw DegreeMismatch("sum of polynomials of different degrees");
    return {weights_, degree_, poly_ + o.poly_};
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& o) const {
    return {weights_, degree_ + o.degree_, poly_ * o.poly_};
}

GradedPolynomial GradedPolynomial::derivative(int var) const {
    return {weights_, degree_ - weights_.at(static_cast<std::size_t>(var)), poly_.derivative(var)};
}

BigradedPolynomial::BigradedPolynomial(std::vector<int> x_weights, std::vector<int> y_degrees,
                                       std::pair<int, int> bidegree, Polynomial poly)
    : x_weights_(std::move(x_weights)), y_degrees_(std::move(y_degrees)), bidegree_(bidegree), poly_(std::move(poly)) {
    if (poly_.num_vars() != num_x() + num_y()) throw std::invalid_argument("bigraded polynomial: variable count mismatch");
    for (const auto& t : poly_.terms())
        if (bidegree_of(t.exp) != bidegree_)
            throw DegreeMismatch("term bidegree differs from (" + std::to_string(bidegree_.first) + "," +
                                 std::to_string(bidegree_.second) + ")");
}

std::pair<int, int> BigradedPolynomial::bidegree_of(std::span<const int> e) const {
    int a = 0, b = 0;
    for (int i = 0; i < num_x(); ++i) a += x_weights_[i] * e[i];
    for (int j = 0; j < num_y(); ++j) {
        a -= y_degrees_[j] * e[num_x() + j];
        b += e[num_x() + j];
    }
    return {a, b};
}

Polynomial BigradedPolynomial::y_coefficient(int j) const {
    std::vector<Term> out;
    for (const auto& t : poly_.terms()) {
        bool match = true;
        for (int k = 0; k < num_y(); ++k)
            if (t.exp[num_x() + k] != (k == j - 1 ? 1 : 0)) match = false;
        if (!match) continue;
        out.push_back({t.coeff, Exponent(t.exp.begin(), t.exp.begin() + num_x())});
    }
    return Polynomial(num_x(), std::move(out));
}

HyperplaneRestriction restrict_hyperplane(const Polynomial& f, const std::vector<mpq_class>& linear_form) {
    const int nv = f.num_vars();
    if (static_cast<int>(linear_form.size()) != nv) throw std::invalid_argument("linear form has wrong length");
    int pivot = -1;
    for (int i = nv - 1; i >= 0; --i)
        if (sgn(linear_form[i]) != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw std::invalid_argument("the zero form does not define a hyperplane");
    RationalField q;
    HyperplaneRestriction out;
    out.pivot = pivot;
    out.change = identity(q, static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j) out.change(pivot, j) = linear_form[j];

    // On x'_pivot = 0: x_pivot = -sum_{j != pivot} (a_j / a_pivot) x'_j.
    std::vector<Polynomial> images;
    const int target = nv - 1;
    for (int i = 0; i < nv; ++i) {
        if (i != pivot) {
            images.push_back(Polynomial::variable(target, i < pivot ? i : i - 1));
            continue;
        }
        Polynomial img(target);
        for (int j = 0; j < nv; ++j) {
            if (j == pivot || sgn(linear_form[j]) == 0) continue;
            img = img + Polynomial::variable(target, j < pivot ? j : j - 1).scaled(-linear_form[j] / linear_form[pivot]);
        }
        images.push_back(std::move(img));
    }
    out.restricted = f.substitute(images);
    return out;
}

GradedPolynomial random_polynomial(std::span<const int> weights, int degree, Rng& rng, CoefficientRange range) {
    if (range.lo > range.hi) throw std::invalid_argument("empty coefficient range");
    const int nv = static_cast<int>(weights.size());
    std::vector<Term> terms;
    for (auto& e : monomial_basis(weights, degree)) {
        std::int64_t v = rng.uniform(range.lo, range.hi);
        if (degree == 0) {
            if (range.lo == 0 && range.hi == 0) throw std::invalid_argument("cannot draw a nonzero constant from {0}");
            while (v == 0) v = rng.uniform(range.lo, range.hi);
        }
        terms.push_back({mpq_class(static_cast<long>(v)), std::move(e)});
    }
    return {std::vector<int>(weights.begin(), weights.end()), degree, Polynomial(nv, std::move(terms))};
}

GradedPolynomial random_polynomial(const CIConfig& config, int degree, std::uint64_t seed, CoefficientRange range) {
    Rng rng = Rng::stream(seed, "random_polynomial");
    return random_polynomial(config.weights, degree, rng, range);
}

}  // namespace nodal
