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
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/cayley.hpp"
#include "nodal/field.hpp"
#include "nodal/hilbert.hpp"
#include "nodal/hilbert_table.hpp"
#include "nodal/linalg.hpp"
#include "nodal/polyring.hpp"

namespace nodal {

class UnsupportedDimension : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class UncertifiedNode : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class NoDefectDirection : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Tuples (h_1, ..., h_c) in sum_j S_{k - d_c + d_j} modulo those with sum_j h_j(p) q_j = 0 at every node.
struct WModuleSlice {
    int degree = 0;
    std::int64_t ambient_dimension = 0;
    std::int64_t node_count = 0;
    std::int64_t h_w = 0;  // codimension of W_k
    friend bool operator==(const WModuleSlice&, const WModuleSlice&) = default;
};

/// Tuple space sum_j S_{k + d_j - d_c} over the given variable weights.
TupleSpace w_tuple_space(const CIConfig& config, std::vector<int> weights, int k);

/// Rows are nodes, columns the tuple basis; entry = monomial(p) * q_component.
template <Field F>
Matrix<F> node_evaluation_matrix(const F& f, const TupleSpace& space, const std::vector<NodeRecord<F>>& nodes);

/// Throws UncertifiedNode unless every node has full chart Hessian rank.
template <Field F>
WModuleSlice w_slice(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes, int k);

/// Degree k = D + d_c - 4 - c at which the defect is read off.
int defect_degree(const CIConfig& config);

/// Defect from the bidegree (D - w, m - 1) evaluation at the nodes, and again as
/// node count minus h_W(D + d_c - 4 - c) through the tuple basis.
struct DefectCore {
    std::int64_t node_count = 0;
    int bidegree_x = 0;                   // D - w
    int bidegree_y = 0;                   // m - 1
    std::int64_t bigraded_dimension = 0;  // number of bidegree monomials
    std::int64_t evaluation_rank = 0;
    int w_degree = 0;  // D + d_c - 4 - c
    std::int64_t h_w = 0;
    std::int64_t delta = 0;        // node_count - evaluation_rank
    std::int64_t delta_tuple = 0;  // node_count - h_w
    bool paths_agree() const noexcept { return delta == delta_tuple && evaluation_rank == h_w; }
    friend bool operator==(const DefectCore&, const DefectCore&) = default;
};

/// Requires n = 3 and standard weights; the node list must be complete (caller contract).
template <Field F>
DefectCore defect_of_ci(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes);

/// Defect of the linear system of degree d_c + D - w through the node projections.
template <Field F>
std::int64_t defect_upper_bound_cynk(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes);

/// h_V(k) of the closed form for a hyperplane section containing a line.
std::int64_t vl_hilbert(const CIConfig& config, int k);
HilbertTable vl_hilbert_table(const CIConfig& config);

/// sum_{i <= j} (d_i - 1)(d_j - 1).
std::int64_t node_lower_bound(const CIConfig& config);

/// Socle degree T = D + d_c - c - 3.
int socle_degree(const CIConfig& config);

/// W restricted to a seeded general hyperplane H = {l = 0}.
template <Field F>
struct WRestriction {
    std::vector<long> hyperplane;             // integer coefficients of l in the original coordinates
    std::vector<std::vector<long>> change;    // x' = change * x; last row is l
    int redraws = 0;
    HilbertTable h_w;                         // degrees 0..last computed
    HilbertTable h_w_prime;                   // degrees 0..T
    bool chain_holds = false;                 // #nodes >= h_W(k) >= sum_{j<=k} h_W'(j) for 0 <= k <= T
    std::optional<TupleSpace> top;            // sum_j S'_{T - d_c + d_j} on H
    Matrix<F> w_prime_top;                    // spans W'_T
    Matrix<F> annihilator_top;                // functionals on top vanishing on W'_T
};

/// The hyperplane is redrawn while it passes through a node, the change of
/// coordinates is singular, or two node projections from the center coincide.
template <Field F>
WRestriction<F> restrict_W(const F& f, const CIConfig& config, const std::vector<NodeRecord<F>>& nodes,
                           std::uint64_t seed);

/// V and its filtration, as Hilbert tables over degrees 0..T.
struct VFamilyTables {
    int top_degree = 0;
    HilbertTable h_v;
    std::vector<HilbertTable> h_f;  // F^iV, i = 1..c
    std::vector<HilbertTable> h_p;  // P^iV, i = 1..c, indexed by k + d_i - d_c
    HilbertTable h_v_colon;         // codimension of V_k computed by the colon construction
    bool contains_w_prime = false;
    bool top_component_nonzero = false;   // 0 + ... + 0 + S_T not inside V_T, for the given generators
    bool all_generator_choices = false;   // same for every choice of generators
    int generator_changes_sampled = 0;
    int generator_changes_passed = 0;
    bool filtration_identity = false;
    bool conservation = false;
    bool gorenstein_symmetric = false;
    friend bool operator==(const VFamilyTables&, const VFamilyTables&) = default;
};

/// V_T = kernel of a seeded random functional vanishing on W'_T. Throws
/// NoDefectDirection when W'_T is the whole tuple space.
template <Field F>
VFamilyTables build_v_family(const F& f, const CIConfig& config, const WRestriction<F>& w, std::uint64_t seed,
                             int generator_samples = 16);

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

/// Lower bounds on h_V and h_{F^cV} over their degree ranges, plus node-count comparisons.
std::vector<NamedCheck> inequality_suite(const CIConfig& config, const VFamilyTables& v, std::int64_t node_count);

/// Everything computed over one field.
struct DefectReport {
    std::string field;
    DefectCore core;
    std::int64_t cynk_bound = 0;
    std::int64_t node_bound = 0;
    HilbertTable h_w;
    HilbertTable h_w_prime;
    bool chain_holds = false;
    int hyperplane_redraws = 0;
    std::optional<VFamilyTables> v;
    std::string v_family_error;
    std::vector<NamedCheck> checks;        // consistency identities, expected to hold always
    std::vector<NamedCheck> inequalities;  // meaningful for examples with defect and no induced defect

    bool checks_pass() const noexcept;
    /// Field-independent content, for comparing the same example over two fields.
    bool same_values(const DefectReport& o) const;
};

template <Field F>
DefectReport full_defect_report(const F& f, const CompleteIntersection& x, const std::vector<NodeRecord<F>>& nodes,
                                std::uint64_t seed);

}  // namespace nodal
