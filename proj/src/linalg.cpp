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

#include "nodal/linalg.hpp"

namespace nodal {

// Bareiss fraction-free elimination after clearing row denominators.
template <>
std::size_t rank<RationalField>(const RationalField&, Matrix<RationalField> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class den = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (den / m(i, j).get_den());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && sgn(a[sel][c]) == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace nodal
