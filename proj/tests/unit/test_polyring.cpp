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


#include <doctest.h>

#include <set>

#include "nodal/macaulay.hpp"
#include "nodal/polyring.hpp"

using namespace nodal;

namespace {

Polynomial x(int nv, int i) { return Polynomial::variable(nv, i); }

Polynomial random_dense(int nv, int degree, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, "polyring-test");
    const std::vector<int> w(static_cast<std::size_t>(nv), 1);
    return random_polynomial(w, degree, rng, {-4, 4}).poly();
}

}  // namespace

TEST_CASE("CIConfig derived quantities") {
    const auto cfg = CIConfig::standard(3, {2, 3});
    CHECK(cfg.num_vars() == 6);
    CHECK(cfg.D() == 5);
    CHECK(cfg.w() == 6);
    CHECK(cfg.m() == 2);
    CHECK(cfg.d(1) == 2);
    CHECK(cfg.d_c() == 3);
    CHECK(cfg.standard_weights());
    CIConfig bad = cfg;
    bad.degrees = {3, 2};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.n = 2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.weights[0] = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("monomial bases") {
    const std::vector<int> w3{1, 1, 1};
    const auto lin = monomial_basis(w3, 1);
    CHECK(lin == std::vector<Exponent>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (int v = 1; v <= 6; ++v)
        for (int k = 0; k <= 5; ++k) {
            const std::vector<int> w(static_cast<std::size_t>(v), 1);
            CHECK(mpz_class(monomial_basis(w, k).size()) == macaulay::binom(v - 1 + k, k));
        }
    const std::vector<int> w112{1, 1, 2};
    CHECK(monomial_basis(w112, 2) == std::vector<Exponent>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}});
    CHECK(monomial_basis(w3, -1).empty());
    const std::vector<int> w2{2, 2};
    CHECK(monomial_basis(w2, 3).empty());
    const std::vector<bool> sel{true, false, true};
    CHECK(monomial_basis(w3, 2, sel) == std::vector<Exponent>{{2, 0, 0}, {1, 0, 1}, {0, 0, 2}});
}

TEST_CASE("monomial bases match exhaustive enumeration for weighted spaces") {
    const std::vector<int> w{1, 2, 3, 1};
    for (int k = 0; k <= 8; ++k) {
        std::vector<Exponent> brute;
        for (int a = k; a >= 0; --a)
            for (int b = k; b >= 0; --b)
                for (int c = k; c >= 0; --c)
                    for (int d = k; d >= 0; --d)
                        if (a + 2 * b + 3 * c + d == k) brute.push_back({a, b, c, d});
        auto basis = monomial_basis(w, k);
        CHECK(basis.size() == brute.size());
        CHECK(std::set<Exponent>(basis.begin(), basis.end()) == std::set<Exponent>(brute.begin(), brute.end()));
        for (std::size_t i = 1; i < basis.size(); ++i) CHECK(grlex_before(w, basis[i - 1], basis[i]));
    }
}

TEST_CASE("bigraded bases") {
    const auto c22 = CIConfig::standard(3, {2, 2});
    const auto b01 = bigraded_basis(c22, 0, 1);
    CHECK(b01.size() == 42);
    CHECK(b01.front().y == Exponent{1, 0});
    CHECK(b01.back().y == Exponent{0, 1});
    const auto c23 = CIConfig::standard(3, {2, 3});
    const auto neg = bigraded_basis(c23, -2, 1);
    CHECK(neg.size() == 7);
    const auto b0 = bigraded_basis(c23, 3, 0);
    CHECK(b0.size() == monomial_basis(c23, 3).size());
    for (const auto& m : b0) CHECK(m.y == Exponent{0, 0});
    const auto b12 = bigraded_basis(c22, 1, 2);
    std::size_t expected = 0;
    for (int j = 0; j < 3; ++j) expected += monomial_basis(c22, 5).size();
    CHECK(b12.size() == expected);
}

TEST_CASE("documented polynomial operations") {
    const int nv = 4;
    const Polynomial f = x(nv, 0).pow(2) * x(nv, 1);
    CHECK(f.derivative(0) == (x(nv, 0) * x(nv, 1)).scaled(2));
    const Polynomial g = x(3, 0) * x(3, 1) + x(3, 2).pow(2);
    const std::vector<mpq_class> pt{1, 2, 3};
    CHECK(g.evaluate(RationalField{}, std::span<const mpq_class>(pt)) == 11);
    const std::vector<mpq_class> short_pt{1, 2};
    CHECK_THROWS_AS(g.evaluate(RationalField{}, std::span<const mpq_class>(short_pt)), std::invalid_argument);
    const Polynomial h = x(nv, 0).pow(2) + x(nv, 3) * x(nv, 1);
    const auto r = restrict_hyperplane(h, {0, 0, 0, 1});
    CHECK(r.pivot == 3);
    CHECK(r.restricted == x(3, 0).pow(2));
}

TEST_CASE("ring axioms and normal form") {
    const int nv = 4;
    const auto a = random_dense(nv, 2, 1), b = random_dense(nv, 3, 2), c = random_dense(nv, 1, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
    CHECK(a.pow(3) == a * a * a);
    for (std::size_t i = 1; i < a.terms().size(); ++i) CHECK(a.terms()[i - 1].exp > a.terms()[i].exp);
    const std::vector<int> w(static_cast<std::size_t>(nv), 1);
    CHECK((a * b).is_homogeneous(w));
    CHECK((a * b).leading_weighted_degree(w) == 5);
    CHECK_FALSE((a + b).is_homogeneous(w));
}

TEST_CASE("product rule and Euler relation") {
    const std::vector<int> w{1, 2, 1, 3};
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Rng rng = Rng::stream(seed, "euler");
        const auto f = random_polynomial(w, 6, rng, {-3, 3}).poly();
        const auto g = random_polynomial(w, 4, rng, {-3, 3}).poly();
        for (int v = 0; v < 4; ++v) CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
        Polynomial euler(4);
        for (int v = 0; v < 4; ++v) euler = euler + (x(4, v) * f.derivative(v)).scaled(w[v]);
        CHECK(euler == f.scaled(6));
    }
}

TEST_CASE("substitution and evaluation commute") {
    const int nv = 3;
    const auto f = random_dense(nv, 3, 11);
    const std::vector<Polynomial> images{x(nv, 0) + x(nv, 1), x(nv, 1).scaled(2), x(nv, 2) - x(nv, 0)};
    const auto g = f.substitute(images);
    const RationalField q;
    const std::vector<mpq_class> p{2, -1, 5}, image{1, -2, 3};
    CHECK(g.evaluate(q, std::span<const mpq_class>(p)) == f.evaluate(q, std::span<const mpq_class>(image)));
}

TEST_CASE("restriction commutes with evaluation at points of the hyperplane") {
    const int nv = 5;
    const RationalField q;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto f = random_dense(nv, 3, seed);
        Rng rng = Rng::stream(seed, "hyperplane");
        std::vector<mpq_class> l(nv);
        for (auto& v : l) v = static_cast<long>(rng.uniform(-3, 3));
        l[nv - 1] = static_cast<long>(rng.nonzero(-3, 3));
        const auto r = restrict_hyperplane(f, l);
        // Points of H: choose the other coordinates freely and solve for the pivot.
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<mpq_class> pt(nv), rest;
            mpq_class acc = 0;
            for (int i = 0; i < nv; ++i) {
                if (i == r.pivot) continue;
                pt[i] = static_cast<long>(rng.uniform(-5, 5));
                acc += l[i] * pt[i];
                rest.push_back(pt[i]);
            }
            pt[r.pivot] = -acc / l[r.pivot];
            CHECK(r.restricted.evaluate(q, std::span<const mpq_class>(rest)) ==
                  f.evaluate(q, std::span<const mpq_class>(pt)));
        }
    }
}

TEST_CASE("graded and bigraded wrappers check degrees") {
    const std::vector<int> w{1, 1, 1};
    const Polynomial f = x(3, 0) * x(3, 1);
    CHECK_NOTHROW(GradedPolynomial(w, 2, f));
    CHECK_THROWS_AS(GradedPolynomial(w, 3, f), DegreeMismatch);
    CHECK_THROWS_AS(GradedPolynomial(w, 2, f + x(3, 2)), DegreeMismatch);
    // F = y_1 * x0^2 + y_2 * x1^3 in k[x0, x1, y1, y2] has bidegree (0, 1) for d = (2, 3).
    const Polynomial F = x(4, 2) * x(4, 0).pow(2) + x(4, 3) * x(4, 1).pow(3);
    const BigradedPolynomial bf({1, 1}, {2, 3}, {0, 1}, F);
    CHECK(bf.y_coefficient(1) == x(2, 0).pow(2));
    CHECK(bf.y_coefficient(2) == x(2, 1).pow(3));
    CHECK_THROWS_AS(BigradedPolynomial({1, 1}, {2, 3}, {1, 1}, F), DegreeMismatch);
}

TEST_CASE("random polynomials are deterministic") {
    const auto cfg = CIConfig::standard(3, {2, 2});
    CHECK(random_polynomial(cfg, 2, 7) == random_polynomial(cfg, 2, 7));
    CHECK_FALSE(random_polynomial(cfg, 2, 7) == random_polynomial(cfg, 2, 8));
    const auto c0 = random_polynomial(cfg, 0, 3);
    CHECK(c0.poly().terms().size() == 1);
    const std::vector<int> w3{1, 1, 1};
    Rng r1 = Rng::stream(42, "f5"), r2 = Rng::stream(42, "f5");
    const auto p1 = random_polynomial(w3, 2, r1), p2 = random_polynomial(w3, 2, r2);
    const auto f5 = FiniteField::prime(5);
    std::vector<FiniteField::Elem> a, b;
    for (const auto& e : monomial_basis(w3, 2)) {
        a.push_back(f5.from_rational(p1.poly().coefficient(e)));
        b.push_back(f5.from_rational(p2.poly().coefficient(e)));
    }
    CHECK(a.size() == 6);
    CHECK(a == b);
    for (auto v : a) CHECK(v < 5);
}

TEST_CASE("projective normalization") {
    const auto f = FiniteField::prime(7);
    std::vector<FiniteField::Elem> p{0, 3, 5};
    normalize_point(f, std::span<FiniteField::Elem>(p));
    CHECK(p == std::vector<FiniteField::Elem>{0, 1, f.div(5, 3)});
    std::vector<FiniteField::Elem> z{0, 0};
    CHECK_THROWS_AS(normalize_point(f, std::span<FiniteField::Elem>(z)), std::invalid_argument);
    const Polynomial g = x(3, 0).pow(2) + x(3, 1) * x(3, 2).scaled(mpq_class(1, 3));
    const CompiledPolynomial<FiniteField> cg(f, g);
    const std::vector<FiniteField::Elem> pt{2, 4, 6};
    CHECK(cg(std::span<const FiniteField::Elem>(pt)) == g.evaluate(f, std::span<const FiniteField::Elem>(pt)));
}
