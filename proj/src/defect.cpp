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

#include "nodal/defect.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nodal/random.hpp"

namespace nodal {

TupleSpace w_tuple_space(const CIConfig& config, std::vector<int> weights, int k) {
    std::vector<int> shifts;
    for (int d : config.degrees) shifts.push_back(d - config.d_c());
    return {std::move(weights), std::move(shifts), k};
}

template <Field F>
Matrix<F> node_evaluation_matrix(const F& f, const TupleSpace& space, const std::vector<NodeRecord<F>>& nodes) {
    Matrix<F> m(nodes.size(), space.size());
    for (std::size_t r = 0; r < nodes.size(); ++r) {
        std::span<const typename F::Elem> p(nodes[r].p);
        for (std::size_t c = 0; c < space.size(); ++c) {
            const auto& col = space.columns()[c];
            const auto& qj = nodes[r].q.at(static_cast<std::size_t>(col.component));
            if (f.is_zero(qj)) continue;
            m(r, c) = f.mul(monomial_value(f, col.exp, p), qj);
        }
    }
    return m;
}

namespace {

template <Field F>
void require_certified(const CIConfig& config, const std::vector<NodeRecord<F>>& nodes) {
    const int full = config.n + 2 * config.c - 1;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].hessian_rank != full)
            throw UncertifiedNode("node " + std::to_string(i) + " is not certified (Hessian rank " +
                                  std::to_string(nodes[i].hessian_rank) + ", need " + std::to_string(full) + ")");
}

template <Field F>
std::int64_t rank_of(const F& f, Matrix<F> m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<std::int64_t>(rank(f, std::move(m)));
}

std::vector<int> unit_weights(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

}  // namespace

template <Field F>
WModuleSlice w_slice(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes, int k) {
    require_certified(config, nodes);
    const TupleSpace space = w_tuple_space(config, config.weights, k);
    WModuleSlice s;
    s.degree = k;
    s.ambient_dimension = static_cast<std::int64_t>(space.size());
    s.node_count = static_cast<std::int64_t>(nodes.size());
    s.h_w = rank_of(f, node_evaluation_matrix(f, space, nodes));
    return s;
}

int defect_degree(const CIConfig& config) { return config.D() + config.d_c() - 4 - config.c; }

int socle_degree(const CIConfig& config) { return config.D() + config.d_c() - config.c - 3; }

template <Field F>
DefectCore defect_of_ci(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes) {
    config.validate();
    if (config.n != 3) throw UnsupportedDimension("the defect formula is implemented for threefolds only");
    if (!config.standard_weights()) throw UnsupportedDimension("the defect formula needs standard weights");
    require_certified(config, nodes);

    DefectCore core;
    core.node_count = static_cast<std::int64_t>(nodes.size());
    core.bidegree_x = config.D() - config.w();
    core.bidegree_y = config.m() - 1;
    const auto basis = bigraded_basis(config, core.bidegree_x, core.bidegree_y);
    core.bigraded_dimension = static_cast<std::int64_t>(basis.size());
    Matrix<F> m(nodes.size(), basis.size());
    for (std::size_t r = 0; r < nodes.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            m(r, c) = f.mul(monomial_value(f, basis[c].x, std::span<const typename F::Elem>(nodes[r].p)),
                            monomial_value(f, basis[c].y, std::span<const typename F::Elem>(nodes[r].q)));
    core.evaluation_rank = rank_of(f, std::move(m));
    core.delta = core.node_count - core.evaluation_rank;

    core.w_degree = defect_degree(config);
    core.h_w = w_slice(f, config, nodes, core.w_degree).h_w;
    core.delta_tuple = core.node_count - core.h_w;
    return core;
}

template <Field F>
std::int64_t defect_upper_bound_cynk(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes) {
    std::vector<std::vector<typename F::Elem>> pts;
    for (const auto& n : nodes) pts.push_back(n.p);
    const PointSet<F> set(f, config.num_vars(), std::move(pts));
    return linear_system_defect(f, set, config.weights, config.d_c() + config.D() - config.w());
}

std::int64_t vl_hilbert(const CIConfig& config, int k) {
    const int dc = config.d_c(), D = config.D(), c = config.c;
    if (k < 0) return 0;
    if (k <= dc - 2) {
        std::int64_t s = 0;
        for (int d : config.degrees) s += std::max(0, k + 1 - dc + d);
        return s;
    }
    if (k <= D + dc - c - 2) return D + dc - c - 2 - k;
    return 0;
}

HilbertTable vl_hilbert_table(const CIConfig& config) {
    std::vector<std::int64_t> v;
    for (int k = 0; k <= socle_degree(config); ++k) v.push_back(vl_hilbert(config, k));
    return {"h_vl", 0, std::move(v)};
}

std::int64_t node_lower_bound(const CIConfig& config) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < config.degrees.size(); ++i)
        for (std::size_t j = i; j < config.degrees.size(); ++j)
            s += static_cast<std::int64_t>(config.degrees[i] - 1) * (config.degrees[j] - 1);
    return s;
}

template <Field F>
WRestriction<F> restrict_W(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes,
                           std::uint64_t seed) {
    using Elem = typename F::Elem;
    require_certified(config, nodes);
    if (!config.standard_weights()) throw UnsupportedDimension("hyperplane restriction needs standard weights");
    const int nv = config.num_vars(), last = nv - 1;
    const int T = socle_degree(config);
    const auto count = static_cast<std::int64_t>(nodes.size());

    WRestriction<F> out;
    Rng rng = Rng::stream(seed, "hyperplane");
    std::vector<std::vector<Elem>> moved;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 1000) throw std::runtime_error("no admissible hyperplane after 1000 draws");
        std::vector<std::vector<long>> a(static_cast<std::size_t>(nv), std::vector<long>(static_cast<std::size_t>(nv), 0));
        for (int j = 0; j < last; ++j) {
            a[j][j] = 1;
            a[j][last] = rng.uniform(-9, 9);
        }
        for (int j = 0; j < last; ++j) a[last][j] = rng.uniform(-9, 9);
        a[last][last] = 1;
        out.redraws = attempt;

        Matrix<F> am(static_cast<std::size_t>(nv), static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) am(i, j) = f.from_integer(static_cast<long long>(a[i][j]));
        if (static_cast<int>(rank(f, am)) != nv) continue;

        moved.clear();
        bool ok = true;
        std::vector<std::vector<Elem>> projections;
        for (const auto& n : nodes) {
            std::vector<Elem> p2(static_cast<std::size_t>(nv), f.zero());
            for (int i = 0; i < nv; ++i)
                for (int j = 0; j < nv; ++j) p2[i] = f.add(p2[i], f.mul(am(i, j), n.p[j]));
            if (f.is_zero(p2[last])) {
                ok = false;
                break;
            }
            std::vector<Elem> proj(p2.begin(), p2.end() - 1);
            if (std::all_of(proj.begin(), proj.end(), [&](const Elem& v) { return f.is_zero(v); })) {
                ok = false;
                break;
            }
            normalize_point(f, std::span(proj));
            for (const auto& other : projections) {
                bool same = true;
                for (std::size_t i = 0; i < proj.size() && same; ++i) same = f.equal(other[i], proj[i]);
                if (same) ok = false;
            }
            if (!ok) break;
            projections.push_back(std::move(proj));
            moved.push_back(std::move(p2));
        }
        if (!ok) continue;
        out.hyperplane = a[last];
        out.change = a;
        break;
    }

    std::vector<NodeRecord<F>> moved_nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        NodeRecord<F> r = nodes[i];
        r.p = moved[i];
        moved_nodes.push_back(std::move(r));
    }

    // h_W over the original coordinates, until it reaches the node count past T.
    std::vector<std::int64_t> hw;
    const int floor_degree = std::max(T, defect_degree(config)) + 1;
    for (int k = 0;; ++k) {
        hw.push_back(w_slice(f, config, nodes, k).h_w);
        if (k >= floor_degree && (hw.back() == count || k > floor_degree + count + config.d_c())) break;
    }
    out.h_w = HilbertTable("h_W", 0, std::move(hw));

    std::vector<std::int64_t> hwp;
    for (int k = 0; k <= T; ++k) {
        const TupleSpace space = w_tuple_space(config, unit_weights(nv), k);
        const TupleSpace restricted = w_tuple_space(config, unit_weights(nv - 1), k);
        const auto e = node_evaluation_matrix(f, space, moved_nodes);
        std::vector<std::size_t> keep, lift;
        for (std::size_t c = 0; c < space.size(); ++c)
            (space.columns()[c].exp[last] == 0 ? keep : lift).push_back(c);
        if (keep.size() != restricted.size()) throw std::logic_error("restricted tuple space size mismatch");

        const auto w_basis = kernel(f, e);
        const auto projected = w_basis.select_columns(keep);
        const std::int64_t dim_w_prime = rank_of(f, projected);
        hwp.push_back(static_cast<std::int64_t>(keep.size()) - dim_w_prime);

        if (k == T) {
            out.top.emplace(restricted);
            out.w_prime_top = projected.rows() ? row_reduce(f, projected).reduced : Matrix<F>(0, keep.size());
            const auto lambda = left_kernel(f, e.select_columns(lift));
            const auto functionals = multiply(f, lambda, e.select_columns(keep));
            out.annihilator_top =
                functionals.rows() ? row_reduce(f, functionals).reduced : Matrix<F>(0, keep.size());
            if (static_cast<std::int64_t>(out.annihilator_top.rows()) != hwp.back())
                throw std::logic_error("annihilator of W'_T has unexpected dimension");
        }
    }
    out.h_w_prime = HilbertTable("h_W'", 0, std::move(hwp));

    out.chain_holds = true;
    std::int64_t partial = 0;
    for (int k = 0; k <= T; ++k) {
        partial += out.h_w_prime.at(k);
        const std::int64_t v = out.h_w.value_or_zero(k);
        if (!(count >= v && v >= partial)) out.chain_holds = false;
    }
    return out;
}

template <Field F>
VFamilyTables build_v_family(const F& f, const CIConfig& config, const WRestriction<F>& w, std::uint64_t seed,
                             int generator_samples) {
    using Elem = typename F::Elem;
    if (!w.top) throw std::invalid_argument("restriction has no top-degree data");
    const TupleSpace& top = *w.top;
    const int T = top.degree(), c = config.c, dc = config.d_c();
    const auto& ann = w.annihilator_top;
    if (ann.rows() == 0) throw NoDefectDirection("W'_T fills the tuple space: no defect direction at degree T");

    Rng rng = Rng::stream(seed, "v_functional");
    Matrix<F> phi(1, top.size());
    for (int attempt = 0;; ++attempt) {
        if (attempt > 100) throw std::runtime_error("could not draw a nonzero functional");
        std::vector<Elem> lambda;
        for (std::size_t i = 0; i < ann.rows(); ++i) lambda.push_back(random_scalar(f, rng));
        bool nonzero = false;
        for (std::size_t col = 0; col < top.size(); ++col) {
            Elem v = f.zero();
            for (std::size_t i = 0; i < ann.rows(); ++i) v = f.add(v, f.mul(lambda[i], ann(i, col)));
            phi(0, col) = v;
            nonzero = nonzero || !f.is_zero(v);
        }
        if (nonzero) break;
    }

    VFamilyTables out;
    out.top_degree = T;
    std::vector<std::int64_t> hv, hv_colon;
    std::vector<std::vector<std::int64_t>> hf(static_cast<std::size_t>(c)), hp(static_cast<std::size_t>(c));
    for (int k = 0; k <= T; ++k) {
        const TupleSpace low = top.at_degree(k);
        const auto psi = colon_constraint_matrix(f, top, phi, k);
        hv.push_back(rank_of(f, psi));
        hv_colon.push_back(static_cast<std::int64_t>(colon_of_constraints(f, top, phi, k).codimension()));
        for (int i = 1; i <= c; ++i) {
            const std::size_t start = low.component_range(i - 1).first;
            std::vector<std::size_t> cols(low.size() - start);
            std::iota(cols.begin(), cols.end(), start);
            const auto restricted = psi.select_columns(cols);
            hf[i - 1].push_back(rank_of(f, restricted));

            const auto [lo, hi] = low.component_range(i - 1);
            const std::size_t width = hi - lo;
            std::int64_t projected_rank = 0;
            if (width > 0) {
                const auto fi = kernel(f, restricted);
                std::vector<std::size_t> first(width);
                std::iota(first.begin(), first.end(), 0);
                projected_rank = rank_of(f, fi.select_columns(first));
            }
            hp[i - 1].push_back(static_cast<std::int64_t>(width) - projected_rank);
        }
    }
    out.h_v = HilbertTable("h_V", 0, std::move(hv));
    out.h_v_colon = HilbertTable("h_V_colon", 0, std::move(hv_colon));
    for (int i = 1; i <= c; ++i) {
        out.h_f.emplace_back("h_F" + std::to_string(i) + "V", 0, std::move(hf[i - 1]));
        out.h_p.emplace_back("h_P" + std::to_string(i) + "V", config.d(i) - dc, std::move(hp[i - 1]));
    }

    out.filtration_identity = true;
    out.conservation = true;
    for (int k = 0; k <= T; ++k) {
        std::int64_t total = 0;
        for (int i = 1; i <= c; ++i) {
            const std::int64_t next = i < c ? out.h_f[i].at(k) : 0;
            const std::int64_t p = out.h_p[i - 1].at(k + config.d(i) - dc);
            if (out.h_f[i - 1].at(k) != next + p) out.filtration_identity = false;
            total += p;
        }
        if (total != out.h_v.at(k) || out.h_f[0].at(k) != out.h_v.at(k)) out.conservation = false;
    }

    const auto& fc = out.h_f.back();
    out.gorenstein_symmetric = true;
    for (int k = 0; k <= T; ++k)
        if (fc.at(k) != fc.at(T - k)) out.gorenstein_symmetric = false;

    out.contains_w_prime = true;
    for (std::size_t r = 0; r < w.w_prime_top.rows(); ++r) {
        Elem v = f.zero();
        for (std::size_t col = 0; col < top.size(); ++col) v = f.add(v, f.mul(w.w_prime_top(r, col), phi(0, col)));
        if (!f.is_zero(v)) out.contains_w_prime = false;
    }

    // Generator changes act on 0 + ... + 0 + S_T through the constant block of
    // generators of top degree d_c: the image is sum_i u_i e_i S_T, u != 0.
    std::vector<int> top_block;
    for (int i = 1; i <= c; ++i)
        if (config.d(i) == dc) top_block.push_back(i);
    const auto [clo, chi] = top.component_range(c - 1);
    const std::size_t width = chi - clo;
    Matrix<F> restricted_phis(top_block.size(), width);
    for (std::size_t b = 0; b < top_block.size(); ++b) {
        const std::size_t start = top.component_range(top_block[b] - 1).first;
        for (std::size_t j = 0; j < width; ++j) restricted_phis(b, j) = phi(0, start + j);
    }
    out.top_component_nonzero = false;
    for (std::size_t j = 0; j < width; ++j)
        if (!f.is_zero(phi(0, clo + j))) out.top_component_nonzero = true;
    out.all_generator_choices = rank_of(f, restricted_phis) == static_cast<std::int64_t>(top_block.size());

    Rng sampler = Rng::stream(seed, "generator_changes");
    for (int s = 0; s < generator_samples; ++s) {
        std::vector<Elem> u;
        bool nonzero = false;
        while (!nonzero) {
            u.clear();
            for (std::size_t b = 0; b < top_block.size(); ++b) {
                u.push_back(random_scalar(f, sampler));
                nonzero = nonzero || !f.is_zero(u.back());
            }
        }
        bool outside = false;
        for (std::size_t j = 0; j < width && !outside; ++j) {
            Elem v = f.zero();
            for (std::size_t b = 0; b < top_block.size(); ++b) v = f.add(v, f.mul(u[b], restricted_phis(b, j)));
            outside = !f.is_zero(v);
        }
        ++out.generator_changes_sampled;
        if (outside) ++out.generator_changes_passed;
    }
    return out;
}

namespace {

NamedCheck range_check(const std::string& name, int lo, int hi, const std::function<std::pair<std::int64_t, std::int64_t>(int)>& values) {
    NamedCheck chk{name, true, ""};
    if (lo > hi) {
        chk.detail = "empty range";
        return chk;
    }
    std::string detail = "k in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    for (int k = lo; k <= hi; ++k) {
        const auto [have, need] = values(k);
        if (have < need) {
            chk.passed = false;
            detail += "; fails at k=" + std::to_string(k) + " (" + std::to_string(have) + " < " + std::to_string(need) + ")";
        }
    }
    chk.detail = detail;
    return chk;
}

}  // namespace

std::vector<NamedCheck> inequality_suite(const CIConfig& config, const VFamilyTables& v, std::int64_t node_count) {
    const int D = config.D(), dc = config.d_c(), c = config.c, T = v.top_degree;
    if (v.h_f.empty()) throw std::invalid_argument("V family has no filtration tables");
    const auto& fc = v.h_f.back();
    auto hv_at = [&](int k) { return k <= T ? v.h_v.at(k) : std::int64_t{0}; };
    std::vector<NamedCheck> out;
    out.push_back(range_check("high_degree_hv_bound", dc, D + dc - c - 2, [&](int k) {
        return std::pair<std::int64_t, std::int64_t>{hv_at(k), D + dc - c - 2 - k};
    }));
    out.push_back(range_check("high_degree_socle_bound", std::max(0, D - c - 1), T, [&](int k) {
        return std::pair<std::int64_t, std::int64_t>{fc.at(k), D + dc - 2 - c - k};
    }));
    out.push_back(range_check("low_degree_socle_bound", 0, std::min(dc - 2, T), [&](int k) {
        return std::pair<std::int64_t, std::int64_t>{fc.at(k), k + 1};
    }));
    const std::int64_t sum = v.h_v.sum(), bound = node_lower_bound(config);
    out.push_back({"node_count_covers_hv_sum", node_count >= sum,
                   "nodes=" + std::to_string(node_count) + ", sum h_V=" + std::to_string(sum)});
    out.push_back({"hv_sum_reaches_node_bound", sum >= bound,
                   "sum h_V=" + std::to_string(sum) + ", bound=" + std::to_string(bound)});
    return out;
}

bool DefectReport::checks_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

bool DefectReport::same_values(const DefectReport& o) const {
    return core == o.core && cynk_bound == o.cynk_bound && node_bound == o.node_bound && h_w == o.h_w &&
           h_w_prime == o.h_w_prime && chain_holds == o.chain_holds && v == o.v && v_family_error == o.v_family_error &&
           checks == o.checks && inequalities == o.inequalities;
}

template <Field F>
DefectReport full_defect_report(const F& f, const CompleteIntersection& x, const std::vector<NodeRecord<F>>& nodes,
                                std::uint64_t seed) {
    x.validate();
    const auto& cfg = x.config;
    DefectReport r;
    r.field = f.name();
    r.core = defect_of_ci(f, cfg, nodes);
    r.cynk_bound = defect_upper_bound_cynk(f, cfg, nodes);
    r.node_bound = node_lower_bound(cfg);
    const auto w = restrict_W(f, cfg, nodes, seed);
    r.h_w = w.h_w;
    r.h_w_prime = w.h_w_prime;
    r.chain_holds = w.chain_holds;
    r.hyperplane_redraws = w.redraws;

    const std::int64_t n = r.core.node_count;
    r.checks.push_back({"defect_paths_agree", r.core.paths_agree(),
                        "bidegree rank " + std::to_string(r.core.evaluation_rank) + ", h_W " + std::to_string(r.core.h_w)});
    r.checks.push_back({"defect_within_node_count", r.core.delta >= 0 && r.core.delta <= n,
                        "delta=" + std::to_string(r.core.delta) + ", nodes=" + std::to_string(n)});
    r.checks.push_back({"defect_detection_threshold",
                        (r.core.delta > 0) == (r.h_w.value_or_zero(r.core.w_degree) < n), ""});
    bool monotone = true;
    for (int k = 1; k <= r.h_w.last_degree(); ++k) monotone = monotone && r.h_w.at(k) >= r.h_w.at(k - 1);
    r.checks.push_back({"w_stabilizes", monotone && !r.h_w.empty() && r.h_w.values().back() == n,
                        "h_W reaches " + std::to_string(r.h_w.empty() ? 0 : r.h_w.values().back())});
    r.checks.push_back({"w_restriction_chain", r.chain_holds, ""});

    try {
        r.v = build_v_family(f, cfg, w, seed);
        r.checks.push_back({"v_contains_w_prime", r.v->contains_w_prime, ""});
        r.checks.push_back({"v_colon_matches_rank", r.v->h_v == HilbertTable("h_V", 0, r.v->h_v_colon.values()), ""});
        r.checks.push_back({"filtration_identity", r.v->filtration_identity, ""});
        r.checks.push_back({"filtration_conservation", r.v->conservation, ""});
        r.checks.push_back({"gorenstein_symmetry", r.v->gorenstein_symmetric, ""});
        r.inequalities = inequality_suite(cfg, *r.v, n);
        r.inequalities.push_back({"top_component_outside_v", r.v->top_component_nonzero, ""});
        r.inequalities.push_back({"top_component_outside_v_all_generators", r.v->all_generator_choices,
                                  std::to_string(r.v->generator_changes_passed) + "/" +
                                      std::to_string(r.v->generator_changes_sampled) + " sampled changes passed"});
    } catch (const NoDefectDirection& e) {
        r.v_family_error = e.what();
    }
    return r;
}

#define NODAL_INSTANTIATE_DEFECT(F)                                                                              \
    template Matrix<F> node_evaluation_matrix(const F&, const TupleSpace&, const std::vector<NodeRecord<F>>&);   \
    template WModuleSlice w_slice(const F&, const CIConfig&, const std::vector<NodeRecord<F>>&, int);           \
    template DefectCore defect_of_ci(const F&, const CIConfig&, const std::vector<NodeRecord<F>>&);             \
    template std::int64_t defect_upper_bound_cynk(const F&, const CIConfig&, const std::vector<NodeRecord<F>>&); \
    template WRestriction<F> restrict_W(const F&, const CIConfig&, const std::vector<NodeRecord<F>>&,           \
                                        std::uint64_t);                                                         \
    template VFamilyTables build_v_family(const F&, const CIConfig&, const WRestriction<F>&, std::uint64_t, int); \
    template DefectReport full_defect_report(const F&, const CompleteIntersection&,                              \
                                             const std::vector<NodeRecord<F>>&, std::uint64_t);

NODAL_INSTANTIATE_DEFECT(FiniteField)
NODAL_INSTANTIATE_DEFECT(RationalField)

#undef NODAL_INSTANTIATE_DEFECT

}  // namespace nodal
