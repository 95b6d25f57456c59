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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/field.hpp"
#include "nodal/linalg.hpp"
#include "nodal/polyring.hpp"

namespace nodal {

/// X = V(f_1, ..., f_c) with deg f_i = d_i.
struct CompleteIntersection {
    CIConfig config;
    std::vector<GradedPolynomial> equations;

    /// Throws DegreeMismatch or std::invalid_argument.
    void validate() const;
    int num_vars() const noexcept { return config.num_vars(); }

    friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;
};

/// A singular point p of X with its lift q, a left kernel vector of M(p).
template <Field F>
struct NodeRecord {
    using Elem = typename F::Elem;
    std::vector<Elem> p;
    std::vector<Elem> q;
    int jacobian_rank = -1;
    int hessian_rank = -1;
};

/// Raised when ker M(p) is not one-dimensional; carries c - rank M(p) - 1.
class LiftError : public std::runtime_error {
   public:
    LiftError(int fiber_dimension, int jacobian_rank)
        : std::runtime_error("not an isolated hypersurface-singularity lift: fiber dimension " +
                             std::to_string(fiber_dimension)),
          fiber_dimension_(fiber_dimension),
          jacobian_rank_(jacobian_rank) {}
    int fiber_dimension() const noexcept { return fiber_dimension_; }
    int jacobian_rank() const noexcept { return jacobian_rank_; }

   private:
    int fiber_dimension_;
    int jacobian_rank_;
};

/// Raised when an operation receives a point outside its domain (not on X, or smooth).
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("scan needs " + std::to_string(required) + " points, budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

   private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// F = sum_i y_i f_i, of bidegree (0, 1).
BigradedPolynomial cayley_equation(const CompleteIntersection& x);

/// M(p) = (df_i/dx_j (p)), c x (n+c+1).
template <Field F>
Matrix<F> jacobian_at(const F& f, const CompleteIntersection& x, std::span<const typename F::Elem> p);

/// Requires f_i(p) = 0 and rank M(p) = c - 1. The returned p and q are normalized.
template <Field F>
NodeRecord<F> lift_node(const F& f, const CompleteIntersection& x, std::span<const typename F::Elem> p);

/// Hessian of the affine equation of Y at (p, q) in the chart where the first
/// nonzero coordinates of p and q are set to 1.
template <Field F>
Matrix<F> chart_hessian(const F& f, const CompleteIntersection& x, const NodeRecord<F>& record);

/// True iff chart_hessian has rank n + 2c - 1. Stores the rank in record.hessian_rank.
template <Field F>
bool certify_node(const F& f, const CompleteIntersection& x, NodeRecord<F>& record);

/// Maps rational node records into F. Throws FieldError if a denominator vanishes.
template <Field F>
std::vector<NodeRecord<F>> reduce_nodes(const F& f, const std::vector<NodeRecord<RationalField>>& nodes) {
    std::vector<NodeRecord<F>> out;
    for (const auto& n : nodes) {
        NodeRecord<F> r;
        for (const auto& v : n.p) r.p.push_back(f.from_rational(v));
        for (const auto& v : n.q) r.q.push_back(f.from_rational(v));
        normalize_point(f, std::span(r.p));
        normalize_point(f, std::span(r.q));
        r.jacobian_rank = n.jacobian_rank;
        r.hessian_rank = n.hessian_rank;
        out.push_back(std::move(r));
    }
    return out;
}

/// Where a scan looks for singular points.
struct SearchDomain {
    enum class Kind { ambient, subspace };
    Kind kind = Kind::ambient;
    std::vector<std::vector<mpq_class>> basis;  // rows spanning the subspace

    static SearchDomain ambient() { return {}; }
    static SearchDomain subspace(std::vector<std::vector<mpq_class>> rows) {
        return {Kind::subspace, std::move(rows)};
    }
    /// Projective dimension + 1 of the searched space.
    int affine_dimension(int num_vars) const {
        return kind == Kind::ambient ? num_vars : static_cast<int>(basis.size());
    }
};

struct ScanOptions {
    std::uint64_t budget = 20'000'000;
    unsigned jobs = 1;
};

/// Number of points of P^{r-1}(F_q).
std::uint64_t projective_point_count(std::uint64_t q, int r);

/// The F-rational points p of the domain with f_i(p) = 0 and rank M(p) < c,
/// normalized and sorted. Throws BudgetExceeded before scanning if the domain is too large.
std::vector<std::vector<FiniteField::Elem>> find_singular_points(const FiniteField& f, const CompleteIntersection& x,
                                                                 const SearchDomain& domain,
                                                                 const ScanOptions& options = {});

/// Same scan for an arbitrary homogeneous system: points where every equation
/// vanishes and the Jacobian has rank below the number of equations.
std::vector<std::vector<FiniteField::Elem>> find_singular_points(const FiniteField& f,
                                                                 const std::vector<Polynomial>& equations,
                                                                 const SearchDomain& domain,
                                                                 const ScanOptions& options = {});

/// Singular points (p, q) of Y = V(F) found by scanning P(w) x P^{c-1} directly:
/// F = 0 and every partial derivative of F vanishes. Sorted by (p, q).
std::vector<std::pair<std::vector<FiniteField::Elem>, std::vector<FiniteField::Elem>>> find_cayley_singular_points(
    const FiniteField& f, const CompleteIntersection& x, const SearchDomain& domain, const ScanOptions& options = {});

/// Scan over F_{p^k} for one k: all rational singular points, and those whose
/// field of definition is exactly F_{p^k}, grouped into Frobenius orbits.
struct ExtensionScan {
    int degree = 1;
    std::uint64_t points_examined = 0;
    std::uint64_t rational_points = 0;
    std::uint64_t new_points = 0;  // field of definition exactly F_{p^k}
    std::uint64_t orbits = 0;      // new_points / k
    std::vector<std::vector<FiniteField::Elem>> points;
};

/// Field of definition degree of a normalized point: lcm of its coordinates' minimal degrees.
int point_field_degree(const FiniteField& f, std::span<const FiniteField::Elem> point);

/// Runs find_singular_points over F_{p^k} for k = 1..max_degree.
std::vector<ExtensionScan> scan_extensions(std::uint32_t p, int max_degree, const CompleteIntersection& x,
                                           const SearchDomain& domain, const ScanOptions& options = {});

}  // namespace nodal
