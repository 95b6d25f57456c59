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
#include <string>
#include <vector>

#include "nodal/defect.hpp"
#include "nodal/generators.hpp"

namespace nodal {

struct PipelineOptions {
    std::vector<std::uint32_t> rank_primes{10007, 10009};
    bool exact_rational = false;  // also compute every rank over Q
    std::uint64_t seed = 1;       // hyperplane and functional draws
};

/// Defect reports of one generated example over every requested field, with the
/// expectations its provenance states checked against them.
struct ExampleVerification {
    GeneratedExample example;
    std::vector<DefectReport> reports;  // rank primes first, then Q when requested
    std::vector<NamedCheck> expectations;

    bool passed() const noexcept;
    /// Names of failed expectations and failed report checks.
    std::vector<std::string> failures() const;
};

ExampleVerification verify_example(GeneratedExample example, const PipelineOptions& options = {});

/// Generates and verifies a family member: "plane", "induced", "smooth".
ExampleVerification verify_family(const std::string& family, const std::vector<int>& degrees, std::uint64_t seed,
                                  const PipelineOptions& options = {}, const GeneratorOptions& generator = {});

}  // namespace nodal
