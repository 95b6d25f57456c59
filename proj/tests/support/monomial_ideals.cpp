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


#include "monomial_ideals.hpp"

#include <algorithm>
#include <functional>

namespace nodal::testing {

std::vector<Mono3> monomials_up_to(int lo, int hi) {
    std::vector<Mono3> out;
    for (int d = lo; d <= hi; ++d)
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

bool divides(const Mono3& a, const Mono3& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

bool MonomialIdeal::contains(const Mono3& m) const {
    return std::any_of(generators.begin(), generators.end(), [&](const Mono3& g) { return divides(g, m); });
}

std::int64_t MonomialIdeal::hilbert(int k) const {
    std::int64_t h = 0;
    for (const auto& m : monomials_up_to(k, k))
        if (!contains(m)) ++h;
    return h;
}

std::vector<std::int64_t> MonomialIdeal::hilbert_values(int last) const {
    std::vector<std::int64_t> out;
    for (int k = 0; k <= last; ++k) out.push_back(hilbert(k));
    return out;
}

IdealEnumeration enumerate_monomial_ideals(int max_degree, std::size_t budget) {
    const auto mons = monomials_up_to(1, max_degree);
    IdealEnumeration out;
    std::vector<Mono3> chosen;
    bool stopped = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (out.ideals.size() >= budget) {
            stopped = true;
            return;
        }
        out.ideals.push_back({chosen});
        for (std::size_t i = start; i < mons.size() && !stopped; ++i) {
            const auto& m = mons[i];
            // Candidates come in degree-major order, so only earlier generators can divide m.
            if (std::any_of(chosen.begin(), chosen.end(), [&](const Mono3& g) { return divides(g, m); })) continue;
            chosen.push_back(m);
            dfs(i + 1);
            chosen.pop_back();
        }
    };
    dfs(0);
    out.exhausted = !stopped;
    return out;
}

}  // namespace nodal::testing
