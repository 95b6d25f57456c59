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
#include <optional>
#include <string>
#include <vector>

#include "nodal/cayley.hpp"
#include "nodal/field.hpp"
#include "nodal/polyring.hpp"

namespace nodal {

/// One exhaustive scan performed while certifying an example.
struct ScanRecord {
    std::string field;
    std::string domain;  // "plane", "line", "ambient", "ambient_off_locus", "first_equation"
    std::uint64_t points_examined = 0;
    std::uint64_t singular_points = 0;
    bool matches_expectation = false;
    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ExampleProvenance {
    std::string family;  // plane-containing | induced-defect | quadric-pair | smooth-random
    std::string variant;
    std::uint64_t seed = 0;
    std::uint64_t effective_seed = 0;
    int retries = 0;
    std::vector<int> degrees;
    std::string node_locus;                          // where every node lies
    std::vector<std::vector<mpq_class>> locus_basis;  // spans the linear space containing the nodes
    std::string expected_node_formula;
    std::int64_t expected_node_count = 0;
    std::optional<std::int64_t> expected_defect;
    bool hyperplane_section_contains_line = false;
    bool induced_defect = false;
    bool first_equations_smooth = false;  // V(f_1, ..., f_{c-1}) smooth
    std::string first_equations_evidence;
    std::vector<ScanRecord> scans;
    friend bool operator==(const ExampleProvenance&, const ExampleProvenance&) = default;
};

struct GeneratedExample {
    CompleteIntersection ci;
    std::vector<NodeRecord<RationalField>> nodes;  // certified over Q
    ExampleProvenance provenance;
};

struct GeneratorOptions {
    std::vector<std::uint32_t> scan_primes{101, 103};  // locus scans, nodes must reduce bijectively
    std::uint32_t off_locus_prime = 7;                 // ambient scan for stray singular points
    int max_retries = 64;
    ScanOptions scan;
};

class GenerationFailed : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// c = 2 in P^5: f_i = x_3 a_i + x_4 b_i + x_5 c_i, so X contains the plane
/// x_3 = x_4 = x_5 = 0 and its nodes are the points of that plane where the
/// 2 x 3 matrix (a_i, b_i, c_i) drops rank. The matrix restricted to the plane is
/// the Hilbert-Burch matrix of a random set of sum_{i<=j}(d_i-1)(d_j-1) rational
/// points, so every node is rational.
GeneratedExample plane_containing_ci(const std::vector<int>& degrees, std::uint64_t seed,
                                     const GeneratorOptions& options = {});

/// c = 2 in P^5: f_1 = x_0^2 + x_1^2 + x_2^2 + x_3^2 singular along the line
/// x_0 = ... = x_3 = 0, and g = prod_k (a_k x_4 - b_k x_5) + (terms in x_0..x_3).
/// The nodes are the d_2 points of the line where g vanishes, all with lift (1 : 0).
GeneratedExample induced_defect_example(int d2, std::uint64_t seed, const GeneratorOptions& options = {});

/// (a) a plane-containing (2,2) example with three nodes and distinct lifts;
/// (b) an induced (2,2) example with two nodes sharing the lift (1 : 0).
std::vector<GeneratedExample> quadric_pair_cases(std::uint64_t seed, const GeneratorOptions& options = {});

/// Random integer equations in P^{3+c}, redrawn until exhaustive scans over F_5
/// and F_7 find no singular point.
GeneratedExample smooth_random_ci(const std::vector<int>& degrees, std::uint64_t seed,
                                  const GeneratorOptions& options = {});

/// Reduces rational nodes into F and sorts them like a scan result.
std::vector<std::vector<FiniteField::Elem>> reduce_node_points(const FiniteField& f,
                                                               const std::vector<NodeRecord<RationalField>>& nodes);

}  // namespace nodal
