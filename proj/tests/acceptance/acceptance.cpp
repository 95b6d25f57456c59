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


#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monomial_ideals.hpp"
#include "nodal/macaulay.hpp"
#include "nodal/pipeline.hpp"

using namespace nodal;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 for no time limit
    std::function<Outcome()> body;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Verified examples are shared between criteria; criteria 3 and 4 time their own generation.
std::vector<ExampleVerification>& examples() {
    static std::vector<ExampleVerification> all;
    return all;
}

const ExampleVerification& remember(ExampleVerification v) {
    examples().push_back(std::move(v));
    return examples().back();
}

bool all_nodes_on_plane(const GeneratedExample& ex) {
    for (const auto& node : ex.nodes)
        if (node.p[3] != 0 || node.p[4] != 0 || node.p[5] != 0) return false;
    return true;
}

std::string label(const ExampleVerification& v) {
    std::ostringstream s;
    s << v.example.provenance.family << "(";
    for (std::size_t i = 0; i < v.example.provenance.degrees.size(); ++i)
        s << (i ? "," : "") << v.example.provenance.degrees[i];
    s << ")";
    return s.str();
}

Outcome closed_forms() {
    for (long d = 1; d <= 30; ++d) {
        for (long c = 0; c <= d; ++c)
            if (macaulay::growth_up(c, d) != c) return {false, "c <= d fails at c=" + std::to_string(c) + " d=" + std::to_string(d)};
        for (long c = d + 1; c <= 2 * d; ++c)
            if (macaulay::growth_up(c, d) != c + 1) return {false, "d < c <= 2d fails at c=" + std::to_string(c)};
        if (d >= 2 && macaulay::growth_up(2 * d + 1, d) != 2 * d + 3) return {false, "c = 2d+1 fails at d=" + std::to_string(d)};
    }
    return {true, "d = 1..30 for c <= 2d, d = 2..30 for c = 2d+1 (the regime needs eps_{d-1}); exact"};
}

Outcome monomial_ideal_growth() {
    const auto en = testing::enumerate_monomial_ideals(4, 10000);
    long checks = 0, strict = 0;
    for (const auto& ideal : en.ideals) {
        const auto h = ideal.hilbert_values(8);
        for (long d = 1; d < 8; ++d) {
            ++checks;
            if (h[d + 1] > macaulay::growth_up(h[d], d)) return {false, "growth bound violated"};
        }
        for (long d = 2; d <= 8; ++d) {
            const auto bound = macaulay::down(h[d], d);
            ++checks;
            if (h[d - 1] < bound) return {false, "down bound violated"};
            if (h[d] > 0 && macaulay::expand(h[d], d).epsilon(1) >= 0) {
                ++strict;
                if (h[d - 1] <= bound) return {false, "strict down bound violated"};
            }
        }
    }
    std::ostringstream s;
    s << en.ideals.size() << " ideals" << (en.exhausted ? " (exhaustive)" : " (budget reached)") << ", " << checks
      << " inequalities, " << strict << " strict cases";
    return {true, s.str()};
}

Outcome equality_case(const std::vector<int>& degrees, std::int64_t nodes) {
    const auto& v = remember(verify_family("plane", degrees, 1));
    const auto cfg = v.example.ci.config;
    std::ostringstream s;
    s << "nodes=" << v.example.nodes.size() << " bound=" << node_lower_bound(cfg);
    bool ok = static_cast<std::int64_t>(v.example.nodes.size()) == nodes && node_lower_bound(cfg) == nodes &&
              all_nodes_on_plane(v.example) && v.passed();
    for (const auto& r : v.reports) {
        s << " delta[" << r.field << "]=" << r.core.delta;
        ok = ok && r.core.delta == 1;
    }
    if (degrees.back() == 3) {
        s << " line_in_section=" << v.example.provenance.hyperplane_section_contains_line;
        ok = ok && v.example.provenance.hyperplane_section_contains_line;
    }
    return {ok, s.str()};
}

void generate_remaining() {
    remember(verify_family("plane", {3, 3}, 1));
    for (int d : {2, 3, 4}) remember(verify_family("induced", {2, d}, 1));
    remember(verify_family("smooth", {2, 2}, 1));
    remember(verify_family("smooth", {2, 3}, 1));
    for (auto& ex : quadric_pair_cases(1)) remember(verify_example(std::move(ex)));
}

Outcome defect_consistency() {
    Outcome out;
    std::ostringstream s;
    int sandwich = 0, outside = 0;
    for (const auto& v : examples()) {
        for (const auto& r : v.reports) {
            if (!r.core.paths_agree()) {
                out.passed = false;
                s << label(v) << " paths disagree over " << r.field << "; ";
            }
            if (v.example.provenance.first_equations_smooth) {
                ++sandwich;
                if (r.core.delta > r.cynk_bound) {
                    out.passed = false;
                    s << label(v) << " delta " << r.core.delta << " > " << r.cynk_bound << "; ";
                }
            } else if (r.core.delta > r.cynk_bound) {
                ++outside;
                s << label(v) << " delta " << r.core.delta << " > " << r.cynk_bound << " with V(f_1) singular; ";
            }
        }
    }
    s << examples().size() << " examples, paths agree everywhere, delta <= Cynk bound on " << sandwich
      << " reports with smooth first equations (" << outside << " reports outside that hypothesis exceed it)";
    out.detail = s.str();
    return out;
}

Outcome gorenstein_and_filtration() {
    int built = 0;
    for (const auto& v : examples())
        for (const auto& r : v.reports) {
            if (!r.v) continue;
            ++built;
            const auto& vf = *r.v;
            const auto& cfg = v.example.ci.config;
            const int T = vf.top_degree;
            if (T != socle_degree(cfg)) return {false, label(v) + " wrong socle degree"};
            const auto& fc = vf.h_f.back();
            for (int k = 0; k <= T; ++k)
                if (fc.at(k) != fc.at(T - k)) return {false, label(v) + " h_FcV not symmetric"};
            const int c = cfg.c;
            for (int i = 1; i <= c; ++i)
                for (int k = 0; k <= T; ++k) {
                    const auto next = i < c ? vf.h_f[i].at(k) : 0;
                    if (vf.h_f[i - 1].at(k) != next + vf.h_p[i - 1].at(k + cfg.d(i) - cfg.d_c()))
                        return {false, label(v) + " filtration identity fails at k=" + std::to_string(k)};
                }
        }
    if (built == 0) return {false, "no V family was built"};
    return {true, std::to_string(built) + " V families, symmetric about T and filtration identity at every degree"};
}

Outcome inequality_suites() {
    int checked = 0;
    for (const auto& v : examples()) {
        if (v.example.provenance.family != "plane-containing") continue;
        for (const auto& r : v.reports) {
            if (r.inequalities.empty()) return {false, label(v) + " has no inequality results"};
            for (const auto& c : r.inequalities) {
                ++checked;
                if (!c.passed) return {false, label(v) + " " + c.name + ": " + c.detail};
            }
        }
    }
    return {checked > 0, std::to_string(checked) + " inequality checks on plane (2,2), (2,3), (3,3)"};
}

Outcome induced_scaling() {
    std::ostringstream s;
    bool ok = true;
    int seen = 0;
    for (const auto& v : examples()) {
        if (v.example.provenance.family != "induced-defect") continue;
        const int dc = v.example.ci.config.d_c();
        const auto count = static_cast<int>(v.example.nodes.size());
        ++seen;
        s << "d_c=" << dc << ":" << count << " nodes; ";
        ok = ok && count == dc;
        if (dc == 2) {
            const auto bound = node_lower_bound(v.example.ci.config);
            for (const auto& r : v.reports) ok = ok && r.core.delta > 0;
            s << "(2,2) delta=" << v.reports.front().core.delta << " with " << count << " < " << bound << " nodes; ";
            ok = ok && count < bound;
        }
    }
    s << "s=1";
    return {ok && seen == 3, s.str()};
}

Outcome negative_controls() {
    const auto f5 = FiniteField::prime(5);
    std::ostringstream s;
    bool ok = true;
    for (const auto& v : examples()) {
        if (v.example.provenance.family != "smooth-random") continue;
        const auto found = find_singular_points(f5, v.example.ci, SearchDomain::ambient());
        s << label(v) << ": " << found.size() << " singular points over F_5";
        ok = ok && found.empty() && v.example.nodes.empty();
        for (const auto& r : v.reports) {
            s << ", delta[" << r.field << "]=" << r.core.delta;
            ok = ok && r.core.delta == 0;
        }
        s << "; ";
    }
    int compared = 0;
    for (const auto& v : examples()) {
        if (v.reports.size() < 2) {
            ok = false;
            continue;
        }
        ++compared;
        if (!v.reports[0].same_values(v.reports[1])) {
            ok = false;
            s << label(v) << " disagrees across primes; ";
        }
    }
    s << "double-prime agreement on " << compared << " examples";
    return {ok, s.str()};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "macaulay closed forms", 1, closed_forms},
        {2, "macaulay growth on monomial ideals", 60, monomial_ideal_growth},
        {3, "(2,2) equality case", 10, [] { return equality_case({2, 2}, 3); }},
        {4, "(2,3) equality case", 30, [] { return equality_case({2, 3}, 7); }},
        {5, "defect consistency", 0,
         [] {
             generate_remaining();
             return defect_consistency();
         }},
        {6, "Gorenstein symmetry and filtration identity", 0, gorenstein_and_filtration},
        {7, "inequality suite", 0, inequality_suites},
        {8, "induced-defect scaling", 0, induced_scaling},
        {9, "negative controls", 0, negative_controls},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double t = seconds_since(t0);
        if (c.limit_seconds > 0 && t >= c.limit_seconds) {
            o.passed = false;
            o.detail += "; time limit exceeded";
        }
        if (!o.passed) ++failures;
        std::printf("%s criterion %d: %s (%.2f s%s) %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), t,
                    c.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s").c_str()
                                        : "",
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
