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

#include "nodal/pipeline.hpp"

#include <algorithm>

namespace nodal {

bool ExampleVerification::passed() const noexcept { return failures().empty(); }

std::vector<std::string> ExampleVerification::failures() const {
    std::vector<std::string> out;
    for (const auto& c : expectations)
        if (!c.passed) out.push_back(c.name);
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            if (!c.passed) out.push_back(r.field + ":" + c.name);
    return out;
}

namespace {

void expect(std::vector<NamedCheck>& out, std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
}

std::string pair_detail(const std::string& a, std::int64_t x, const std::string& b, std::int64_t y) {
    return a + "=" + std::to_string(x) + ", " + b + "=" + std::to_string(y);
}

}  // namespace

ExampleVerification verify_example(GeneratedExample example, const PipelineOptions& options) {
    ExampleVerification out;
    out.example = std::move(example);
    const auto& x = out.example.ci;
    const auto& prov = out.example.provenance;
    const auto& nodes = out.example.nodes;

    for (auto p : options.rank_primes) {
        const FiniteField f = FiniteField::prime(p);
        out.reports.push_back(full_defect_report(f, x, reduce_nodes(f, nodes), options.seed));
    }
    if (options.exact_rational) out.reports.push_back(full_defect_report(RationalField{}, x, nodes, options.seed));
    if (out.reports.empty()) throw std::invalid_argument("no field requested for the defect computation");
    const DefectReport& r = out.reports.front();
    auto& e = out.expectations;
    const auto node_count = static_cast<std::int64_t>(nodes.size());

    bool scans_ok = std::all_of(prov.scans.begin(), prov.scans.end(), [](const ScanRecord& s) { return s.matches_expectation; });
    expect(e, "certification_scans", scans_ok, std::to_string(prov.scans.size()) + " scans");
    expect(e, "expected_node_count", node_count == prov.expected_node_count,
           pair_detail("nodes", node_count, "expected", prov.expected_node_count));
    if (prov.expected_defect)
        expect(e, "expected_defect", r.core.delta == *prov.expected_defect,
               pair_detail("delta", r.core.delta, "expected", *prov.expected_defect));

    bool agree = true;
    for (const auto& other : out.reports) agree = agree && other.same_values(r);
    expect(e, "field_agreement", agree, std::to_string(out.reports.size()) + " fields");

    if (prov.first_equations_smooth)
        expect(e, "cynk_upper_bound", r.core.delta <= r.cynk_bound,
               pair_detail("delta", r.core.delta, "bound", r.cynk_bound));

    const bool has_defect = r.core.delta > 0;
    if (prov.family == "plane-containing" || (prov.family == "quadric-pair" && !prov.induced_defect)) {
        expect(e, "node_bound_equality", node_count == r.node_bound,
               pair_detail("nodes", node_count, "bound", r.node_bound));
    }
    if (has_defect && !prov.induced_defect) {
        for (const auto& c : r.inequalities) expect(e, c.name, c.passed, c.detail);
        if (!r.v) expect(e, "v_family_built", false, r.v_family_error);
    }
    if (prov.hyperplane_section_contains_line && r.v) {
        const auto closed = vl_hilbert_table(x.config);
        expect(e, "hv_matches_line_closed_form", r.v->h_v.values() == closed.values());
        expect(e, "hv_sum_equals_node_bound", r.v->h_v.sum() == r.node_bound,
               pair_detail("sum", r.v->h_v.sum(), "bound", r.node_bound));
    }
    if (prov.induced_defect && prov.expected_defect && *prov.expected_defect > 0)
        expect(e, "defect_below_node_bound", has_defect && node_count < r.node_bound,
               pair_detail("nodes", node_count, "bound", r.node_bound));
    if (prov.family == "smooth-random") expect(e, "no_defect", r.core.delta == 0 && node_count == 0);
    return out;
}

ExampleVerification verify_family(const std::string& family, const std::vector<int>& degrees, std::uint64_t seed,
                                  const PipelineOptions& options, const GeneratorOptions& generator) {
    if (family == "plane") return verify_example(plane_containing_ci(degrees, seed, generator), options);
    if (family == "induced") {
        if (degrees.size() != 2 || degrees[0] != 2)
            throw std::invalid_argument("induced family takes degrees 2,d");
        return verify_example(induced_defect_example(degrees[1], seed, generator), options);
    }
    if (family == "smooth") return verify_example(smooth_random_ci(degrees, seed, generator), options);
    throw std::invalid_argument("unknown family '" + family + "' (plane, induced, smooth)");
}

}  // namespace nodal
