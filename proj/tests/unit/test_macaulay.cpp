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

#include <algorithm>
#include <functional>
#include <map>

#include "monomial_ideals.hpp"
#include "nodal/macaulay.hpp"

using namespace nodal;
using namespace nodal::macaulay;
using nodal::testing::enumerate_monomial_ideals;
using nodal::testing::MonomialIdeal;

namespace {

std::vector<long> eps_of(const Expansion& e) {
    std::vector<long> out;
    for (const auto& v : e.epsilons_descending()) out.push_back(v.get_si());
    return out;
}

// All weakly decreasing (eps_d, ..., eps_1) with eps_1 >= -1 summing to c.
std::vector<std::vector<long>> all_expansions(long c, long d) {
    std::vector<std::vector<long>> found;
    std::vector<long> eps(static_cast<std::size_t>(d));
    std::function<void(long, long, mpz_class)> rec = [&](long i, long upper, mpz_class rest) {
        if (i == 0) {
            if (rest == 0) found.push_back(eps);
            return;
        }
        for (long e = -1; e <= upper; ++e) {
            const mpz_class term = binom(mpz_class(i + e), i);
            if (term > rest) break;
            eps[static_cast<std::size_t>(d - i)] = e;
            rec(i - 1, e, rest - term);
        }
    };
    rec(d, c, mpz_class(c));
    return found;
}

// Monomials in `nvars` variables of degree k.
std::vector<std::vector<int>> monomials(int nvars, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars - 1) {
            e[static_cast<std::size_t>(v)] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[static_cast<std::size_t>(v)] = a;
            rec(v + 1, left - a);
        }
    };
    rec(0, k);
    return out;  // lex-descending
}

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Codimension of (generators) * S_1 in S_{d+1}.
long codim_next(const std::vector<std::vector<int>>& gens, int nvars, int d) {
    long c = 0;
    for (const auto& m : monomials(nvars, d + 1))
        if (std::none_of(gens.begin(), gens.end(), [&](const auto& g) { return divides(g, m); })) ++c;
    return c;
}

}  // namespace

TEST_CASE("documented expansions") {
    CHECK(eps_of(expand(5, 3)) == std::vector<long>{1, 0, -1});
    CHECK(eps_of(expand(0, 4)) == std::vector<long>{-1, -1, -1, -1});
    CHECK(eps_of(expand(13, 6)) == std::vector<long>{1, 1, -1, -1, -1, -1});
    // binom(4,3) + binom(3,2) + binom(0,1) = 7.
    CHECK(eps_of(expand(7, 3)) == std::vector<long>{1, 1, -1});
    CHECK_THROWS_AS(expand(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(expand(-1, 3), std::invalid_argument);
}

TEST_CASE("greedy expansion is the unique expansion found by exhaustive search") {
    for (long d = 1; d <= 6; ++d)
        for (long c = 0; c <= 60; ++c) {
            const auto all = all_expansions(c, d);
            REQUIRE(all.size() == 1);
            CHECK(eps_of(expand(c, d)) == all.front());
        }
}

TEST_CASE("expansions re-sum to c and are weakly decreasing") {
    for (long d = 1; d <= 30; ++d)
        for (long c = 0; c <= 10000; c += (d <= 5 ? 1 : 7)) {
            const auto e = expand(c, d);
            mpz_class sum = 0;
            for (long i = 1; i <= d; ++i) {
                sum += binom(e.epsilon(i) + i, i);
                CHECK(e.epsilon(i) >= -1);
                if (i > 1) CHECK(e.epsilon(i) >= e.epsilon(i - 1));
            }
            CHECK(sum == c);
            CHECK(expand(c, d) == e);
        }
}

TEST_CASE("documented values of growth, shrink and down") {
    CHECK(growth_up(4, 7) == 4);
    CHECK(growth_up(5, 3) == 6);
    CHECK(growth_up(13, 6) == 15);
    CHECK(shrink(0, 5) == 0);
    CHECK(shrink(5, 3) == 1);
    // 7 = binom(4,3) + binom(3,2): eps = (1, 1, -1).
    CHECK(shrink(7, 3) == 2);
    CHECK(down(0, 3) == 0);
    CHECK(down(5, 3) == 4);
    CHECK(down(9, 4) == 7);
    CHECK_THROWS_AS(down(3, 1), std::invalid_argument);
}

TEST_CASE("growth, shrink and down are nondecreasing in c") {
    for (long d = 2; d <= 12; ++d) {
        mpz_class g = growth_up(0, d), s = shrink(0, d), w = down(0, d);
        for (long c = 1; c <= 2000; ++c) {
            const auto g2 = growth_up(c, d), s2 = shrink(c, d), w2 = down(c, d);
            CHECK(g2 >= g);
            CHECK(s2 >= s);
            CHECK(w2 >= w);
            g = g2;
            s = s2;
            w = w2;
        }
    }
}

TEST_CASE("growth closed forms in the three small regimes") {
    for (long d = 1; d <= 30; ++d) {
        for (long c = 0; c <= d; ++c) CHECK(growth_up(c, d) == c);
        for (long c = d + 1; c <= 2 * d; ++c) CHECK(growth_up(c, d) == c + 1);
        // eps_d = eps_{d-1} = 1 needs d >= 2; at d = 1, 3 = binom(3, 1) grows to 6.
        if (d >= 2) CHECK(growth_up(2 * d + 1, d) == 2 * d + 3);
    }
    CHECK(growth_up(3, 1) == 6);
}

TEST_CASE("low degree bound") {
    CHECK(low_degree_bound(5, 7, 2) == 3);
    CHECK(low_degree_bound(10, 7, 4) == 7);
    CHECK(low_degree_bound(15, 7, 3) == 7);
    CHECK_THROWS_AS(low_degree_bound(16, 7, 3), OutsideLowDegreeRange);
    CHECK_THROWS_AS(low_degree_bound(5, 7, 8), std::invalid_argument);
}

TEST_CASE("lex segments attain the growth bound") {
    for (int nvars : {2, 3, 4})
        for (int d = 1; d <= 6; ++d) {
            const auto mons = monomials(nvars, d);
            for (std::size_t n = 0; n <= mons.size(); ++n) {
                const std::vector<std::vector<int>> gens(mons.begin(), mons.begin() + static_cast<long>(n));
                const long c = static_cast<long>(mons.size() - n);
                CHECK(codim_next(gens, nvars, d) == growth_up(c, d));
            }
        }
}

TEST_CASE("monomial ideals in three variables obey growth, down and low degree bounds") {
    const auto en = enumerate_monomial_ideals(4, 10000);
    CHECK(en.ideals.size() == 10000);
    long strict_cases = 0;
    for (const auto& ideal : en.ideals) {
        const auto h = ideal.hilbert_values(8);
        for (long d = 1; d + 1 <= 8; ++d) CHECK(h[d + 1] <= growth_up(h[d], d));
        for (long d = 2; d <= 8; ++d) {
            const auto bound = down(h[d], d);
            CHECK(h[d - 1] >= bound);
            if (h[d] > 0 && expand(h[d], d).epsilon(1) >= 0) {
                CHECK(h[d - 1] > bound);
                ++strict_cases;
            }
            if (h[d] <= 2 * d + 1)
                for (long k = 0; k <= d; ++k) CHECK(h[k] >= low_degree_bound(h[d], d, k));
        }
    }
    CHECK(strict_cases > 0);
}

TEST_CASE("Artinian monomial ideals with small h(d) decrease strictly until zero") {
    const auto en = enumerate_monomial_ideals(4, 10000);
    long tested = 0;
    for (const auto& ideal : en.ideals) {
        const auto h = ideal.hilbert_values(10);
        for (int d = 1; d <= 4; ++d) {
            // I_{d+1} is base point free iff a pure power of every variable of degree <= d+1 lies in I.
            bool bpf = true;
            for (int v = 0; v < 3; ++v) {
                nodal::testing::Mono3 m{0, 0, 0};
                m[static_cast<std::size_t>(v)] = d + 1;
                bpf = bpf && ideal.contains(m);
            }
            if (!bpf || h[d] > d) continue;
            ++tested;
            for (int k = d; k + 1 <= 10; ++k) CHECK((h[k + 1] < h[k] || h[k] == 0));
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("growth check on tables") {
    CHECK(check_macaulay_growth(HilbertTable("h", 3, {0, 0}), 3));
    CHECK_FALSE(check_macaulay_growth(HilbertTable("h", 3, {5, 7}), 3));
    CHECK(check_macaulay_growth(HilbertTable("h", 1, {3, 3}), 1));
    CHECK_THROWS_AS(check_macaulay_growth(HilbertTable("h", 3, {5}), 3), MissingDegree);
}

TEST_CASE("Gotzmann prediction, displayed form") {
    const auto one = gotzmann_predicted(expand(1, 4));
    CHECK(one.polynomial.coefficients == std::vector<mpq_class>{1});
    CHECK(one.dimension == 0);
    const auto flat = gotzmann_predicted(expand(5, 5));
    CHECK(flat.polynomial.coefficients == std::vector<mpq_class>{5});
    CHECK(flat.dimension == 0);
    const auto line = gotzmann_predicted(expand(7, 5));
    CHECK(line.dimension == 1);
    CHECK(line.polynomial.degree() == 1);
    CHECK(line.polynomial.coefficients.back() == 1);
}

TEST_CASE("persistence polynomial matches brute-force Hilbert polynomials of Gotzmann monomial ideals") {
    // Ideals generated in a single degree d whose growth from d to d+1 is maximal.
    const auto en = enumerate_monomial_ideals(3, 10000);
    long checked = 0, agree_with_display = 0;
    for (const auto& ideal : en.ideals) {
        if (ideal.generators.empty()) continue;
        const int d = ideal.generators.front()[0] + ideal.generators.front()[1] + ideal.generators.front()[2];
        if (std::any_of(ideal.generators.begin(), ideal.generators.end(),
                        [&](const auto& g) { return g[0] + g[1] + g[2] != d; }))
            continue;
        const auto h = ideal.hilbert_values(d + 8);
        if (growth_up(h[d], d) != h[d + 1]) continue;
        const auto e = expand(h[d], d);
        const auto pers = gotzmann_persistence(e);
        for (int t = d; t <= d + 8; ++t) CHECK(pers.polynomial(t) == h[t]);
        const auto disp = gotzmann_predicted(e);
        bool same = true;
        for (int t = d; t <= d + 8; ++t) same = same && disp.polynomial(t) == h[t];
        agree_with_display += same;
        ++checked;
    }
    CHECK(checked > 100);
    MESSAGE("displayed Gotzmann polynomial matched ", agree_with_display, " of ", checked, " Gotzmann ideals");
}

TEST_CASE("displayed Gotzmann polynomial differs from persistence on (x0, x1^2)") {
    // S/(x0, x1^2) in four variables: h(t) = 2t + 1, so h(2) = 5 = binom(3,2) + binom(2,1).
    const auto e = expand(5, 2);
    CHECK(eps_of(e) == std::vector<long>{1, 1});
    const auto pers = gotzmann_persistence(e);
    const auto disp = gotzmann_predicted(e);
    for (int t = 2; t <= 10; ++t) CHECK(pers.polynomial(t) == 2 * t + 1);
    CHECK(disp.polynomial(2) == 6);
    CHECK(pers.dimension == 1);
    CHECK(disp.dimension == 1);
    MESSAGE("displayed form gives 2t+2, persistence gives 2t+1");
}
