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
#include <random>
#include <string_view>

namespace nodal {

/// Deterministic generator: std::mt19937_64 raw output with rejection sampling
/// for ranges, so streams agree across standard libraries. Named sub-streams
/// are seeded by splitmix64(seed ^ fnv1a(tag)).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t splitmix64(std::uint64_t x) noexcept {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t hash_tag(std::string_view tag) noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : tag) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    static Rng stream(std::uint64_t seed, std::string_view tag) { return Rng(splitmix64(seed ^ hash_tag(tag))); }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(below(span));
    }

    /// Uniform in [lo, hi] \ {0}; requires lo < 0 < hi or the range to exclude 0.
    std::int64_t nonzero(std::int64_t lo, std::int64_t hi) {
        std::int64_t v;
        do v = uniform(lo, hi);
        while (v == 0);
        return v;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace nodal
