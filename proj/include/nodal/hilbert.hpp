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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nodal/field.hpp"
#include "nodal/hilbert_table.hpp"
#include "nodal/linalg.hpp"
#include "nodal/polyring.hpp"

namespace nodal {

/// Reduced finite set of projective points, stored normalized.
template <Field F>
class PointSet {
   public:
    using Elem = typename F::Elem;
    using Point = std::vector<Elem>;

    PointSet(const F& f, int num_vars) : field_(f), nvars_(num_vars) {}
    /// Normalizes the points; throws std::invalid_argument on duplicates or wrong length.
    PointSet(const F& f, int num_vars, std::vector<Point> points);

    int num_vars() const noexcept { return nvars_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const F& field() const noexcept { return field_; }

   private:
    F field_;
    int nvars_;
    std::vector<Point> points_;
};

/// Rows indexed by points, columns by monomials; entry = monomial at the point.
template <Field F>
Matrix<F> evaluation_matrix(const F& f, const std::vector<Exponent>& basis, const PointSet<F>& points);

/// h_{I(points)}(k): rank of the degree-k evaluation matrix.
template <Field F>
std::int64_t hilbert_of_points(const F& f, const PointSet<F>& points, std::span<const int> weights, int k);

template <Field F>
HilbertTable hilbert_table_of_points(const F& f, const PointSet<F>& points, std::span<const int> weights, int first,
                                     int last);

/// |points| - h_{I(points)}(k).
template <Field F>
std::int64_t linear_system_defect(const F& f, const PointSet<F>& points, std::span<const int> weights, int k);

/// Graded piece of the tuple module S(shift_1) + ... + S(shift_c) at `degree`:
/// component j has monomials of degree degree + shift_j. Columns are ordered by
/// component, then graded lexicographically.
class TupleSpace {
   public:
    TupleSpace(std::vector<int> weights, std::vector<int> shifts, int degree);

    int degree() const noexcept { return degree_; }
    int components() const noexcept { return static_cast<int>(shifts_.size()); }
    const std::vector<int>& weights() const noexcept { return weights_; }
    const std::vector<int>& shifts() const noexcept { return shifts_; }
    std::size_t size() const noexcept { return columns_.size(); }
    /// Degree of component j (0-based).
    int component_degree(int j) const { return degree_ + shifts_.at(static_cast<std::size_t>(j)); }

    struct Column {
        int component;
        Exponent exp;
    };
    const std::vector<Column>& columns() const noexcept { return columns_; }
    /// First column of component j and one past its last.
    std::pair<std::size_t, std::size_t> component_range(int j) const;
    /// Column index of (j, exp); -1 when absent.
    long index_of(int j, const Exponent& exp) const;

    /// Same shifts and weights, another degree.
    TupleSpace at_degree(int degree) const { return {weights_, shifts_, degree}; }

   private:
    std::vector<int> weights_;
    std::vector<int> shifts_;
    int degree_;
    std::vector<Column> columns_;
    std::vector<std::size_t> starts_;
    std::vector<std::map<Exponent, std::size_t>> lookup_;
};

/// Subspace of a TupleSpace, spanned by the rows of a reduced echelon matrix.
template <Field F>
struct LinearSubspace {
    TupleSpace ambient;
    Matrix<F> basis;

    static LinearSubspace span(const F& f, TupleSpace ambient, Matrix<F> generators);
    static LinearSubspace full(const F& f, TupleSpace ambient);
    static LinearSubspace zero(TupleSpace ambient);

    std::size_t dimension() const noexcept { return basis.rows(); }
    std::size_t codimension() const noexcept { return ambient.size() - basis.rows(); }
    /// Rows span the linear functionals vanishing on the subspace.
    Matrix<F> annihilator(const F& f) const;
    bool contains(const F& f, std::span<const typename F::Elem> v) const;
};

/// V_k = {h in ambient_k : m h in V_top for every monomial m of degree T - k}.
template <Field F>
LinearSubspace<F> colon_subspace(const F& f, const LinearSubspace<F>& v_top, int k);

/// Same, for V_top = {v : constraints v = 0}; rows of `constraints` are functionals on top.
template <Field F>
LinearSubspace<F> colon_of_constraints(const F& f, const TupleSpace& top, const Matrix<F>& constraints, int k);

/// The matrix whose kernel is the colon subspace: rows (functional, monomial m),
/// columns of ambient_k, entry = functional(m * column).
template <Field F>
Matrix<F> colon_constraint_matrix(const F& f, const TupleSpace& top, const Matrix<F>& constraints, int k);

/// h_V(k) = dim ambient_k - dim V_k over the given family, in degree order.
template <Field F>
HilbertTable subspace_dimension_table(const std::string& label, const std::vector<LinearSubspace<F>>& family);

}  // namespace nodal
