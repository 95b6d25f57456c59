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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodal {

class MissingDegree : public std::out_of_range {
   public:
    explicit MissingDegree(int degree)
        : std::out_of_range("Hilbert table has no value at degree " + std::to_string(degree)), degree_(degree) {}
    int degree() const noexcept { return degree_; }

   private:
    int degree_;
};

/// Values h(k) over a contiguous degree range, labelled with the slice it describes.
class HilbertTable {
   public:
    HilbertTable() = default;
    HilbertTable(std::string label, int first_degree, std::vector<std::int64_t> values);

    const std::string& label() const noexcept { return label_; }
    int first_degree() const noexcept { return first_; }
    int last_degree() const noexcept { return first_ + static_cast<int>(values_.size()) - 1; }
    bool empty() const noexcept { return values_.empty(); }
    std::size_t size() const noexcept { return values_.size(); }
    bool contains(int k) const noexcept { return k >= first_ && k <= last_degree(); }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    /// Throws MissingDegree outside the stored range.
    std::int64_t at(int k) const;
    /// Zero outside the stored range.
    std::int64_t value_or_zero(int k) const noexcept { return contains(k) ? values_[k - first_] : 0; }
    void push_back(std::int64_t v) { values_.push_back(v); }

    std::int64_t sum() const noexcept;
    std::string to_csv() const;

    friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

   private:
    std::string label_;
    int first_ = 0;
    std::vector<std::int64_t> values_;
};

}  // namespace nodal
