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

#include <array>
#include <cstdint>
#include <vector>

namespace nodal::testing {

using Mono3 = std::array<int, 3>;

/// Monomials of S = k[x0, x1, x2] with total degree in [lo, hi], degree-major then lex.
std::vector<Mono3> monomials_up_to(int lo, int hi);

bool divides(const Mono3& a, const Mono3& b);

/// Minimal generating set of a monomial ideal.
struct MonomialIdeal {
    std::vector<Mono3> generators;

    bool contains(const Mono3& m) const;
    /// dim (S/I)_k.
    std::int64_t hilbert(int k) const;
    std::vector<std::int64_t> hilbert_values(int last) const;
};

struct IdealEnumeration {
    std::vector<MonomialIdeal> ideals;
    bool exhausted = false;  // false when the budget stopped the search
};

/// Monomial ideals generated in degrees 1..max_degree (the zero ideal included),
/// by depth-first search over antichains of the divisibility order. Stops after `budget` ideals.
IdealEnumeration enumerate_monomial_ideals(int max_degree, std::size_t budget);

}  // namespace nodal::testing
