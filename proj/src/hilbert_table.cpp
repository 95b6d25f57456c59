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

#include "nodal/hilbert_table.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace nodal {

HilbertTable::HilbertTable(std::string label, int first_degree, std::vector<std::int64_t> values)
    : label_(std::move(label)), first_(first_degree), values_(std::move(values)) {}

std::int64_t HilbertTable::at(int k) const {
    if (!contains(k)) throw MissingDegree(k);
    return values_[k - first_];
}

std::int64_t HilbertTable::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

std::string HilbertTable::to_csv() const {
    std::ostringstream out;
    out << "degree," << (label_.empty() ? "h" : label_) << '\n';
    for (std::size_t i = 0; i < values_.size(); ++i) out << first_ + static_cast<int>(i) << ',' << values_[i] << '\n';
    return out.str();
}

}  // namespace nodal
