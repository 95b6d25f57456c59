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

#include "nodal/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nodal {

template <Field F>
PointSet<F>::PointSet(const F& f, int num_vars, std::vector<Point> points) : field_(f), nvars_(num_vars) {
    for (auto& p : points) {
        if (static_cast<int>(p.size()) != nvars_)
            throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, need " +
                                        std::to_string(nvars_));
        normalize_point(f, std::span(p));
        for (const auto& other : points_) {
            bool same = true;
            for (int i = 0; i < nvars_ && same; ++i) same = f.equal(other[i], p[i]);
            if (same) throw std::invalid_argument("point set contains a repeated point");
        }
        points_.push_back(std::move(p));
    }
}

template <Field F>
Matrix<F> evaluation_matrix(const F& f, const std::vector<Exponent>& basis, const PointSet<F>& points) {
    Matrix<F> m(points.size(), basis.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        std::span<const typename F::Elem> p(points[r]);
        for (std::size_t c = 0; c < basis.size(); ++c) m(r, c) = monomial_value(f, basis[c], p);
    }
    return m;
}

template <Field F>
std::int64_t hilbert_of_points(const F& f, const PointSet<F>& points, std::span<const int> weights, int k) {
    if (points.size() == 0 || k < 0) return 0;
    return static_cast<std::int64_t>(rank(f, evaluation_matrix(f, monomial_basis(weights, k), points)));
}

template <Field F>
HilbertTable hilbert_table_of_points(const F& f, const PointSet<F>& points, std::span<const int> weights, int first,
                                     int last) {
    std::vector<std::int64_t> values;
    for (int k = first; k <= last; ++k) values.push_back(hilbert_of_points(f, points, weights, k));
    return {"h_points", first, std::move(values)};
}

template <Field F>
std::int64_t linear_system_defect(const F& f, const PointSet<F>& points, std::span<const int> weights, int k) {
    return static_cast<std::int64_t>(points.size()) - hilbert_of_points(f, points, weights, k);
}

TupleSpace::TupleSpace(std::vector<int> weights, std::vector<int> shifts, int degree)
    : weights_(std::move(weights)), shifts_(std::move(shifts)), degree_(degree) {
    lookup_.resize(shifts_.size());
    for (std::size_t j = 0; j < shifts_.size(); ++j) {
        starts_.push_back(columns_.size());
        for (auto& e : monomial_basis(weights_, degree_ + shifts_[j])) {
            lookup_[j].emplace(e, columns_.size());
            columns_.push_back({static_cast<int>(j), std::move(e)});
        }
    }
    starts_.push_back(columns_.size());
}

std::pair<std::size_t, std::size_t> TupleSpace::component_range(int j) const {
    return {starts_.at(static_cast<std::size_t>(j)), starts_.at(static_cast<std::size_t>(j) + 1)};
}

long TupleSpace::index_of(int j, const Exponent& exp) const {
    const auto& table = lookup_.at(static_cast<std::size_t>(j));
    auto it = table.find(exp);
    return it == table.end() ? -1 : static_cast<long>(it->second);
}

template <Field F>
LinearSubspace<F> LinearSubspace<F>::span(const F& f, TupleSpace ambient, Matrix<F> generators) {
    if (generators.rows() == 0) return zero(std::move(ambient));
    if (generators.cols() != ambient.size()) throw std::invalid_argument("generators do not match the ambient space");
    auto ech = row_reduce(f, std::move(generators));
    return {std::move(ambient), std::move(ech.reduced)};
}

template <Field F>
LinearSubspace<F> LinearSubspace<F>::full(const F& f, TupleSpace ambient) {
    const std::size_t n = ambient.size();
    return {std::move(ambient), identity(f, n)};
}

template <Field F>
LinearSubspace<F> LinearSubspace<F>::zero(TupleSpace ambient) {
    const std::size_t n = ambient.size();
    return {std::move(ambient), Matrix<F>(0, n)};
}

template <Field F>
Matrix<F> LinearSubspace<F>::annihilator(const F& f) const {
    if (basis.rows() == 0) return identity(f, ambient.size());
    return kernel(f, basis);
}

template <Field F>
bool LinearSubspace<F>::contains(const F& f, std::span<const typename F::Elem> v) const {
    Matrix<F> m = basis;
    if (m.rows() == 0) m = Matrix<F>(0, ambient.size());
    const std::size_t before = rank(f, m);
    m.append_row(v);
    return rank(f, m) == before;
}

template <Field F>
Matrix<F> colon_constraint_matrix(const F&, const TupleSpace& top, const Matrix<F>& constraints, int k) {
    const TupleSpace low = top.at_degree(k);
    const auto multipliers = monomial_basis(top.weights(), top.degree() - k);
    Matrix<F> out(constraints.rows() * multipliers.size(), low.size());
    std::vector<long> target(low.size());
    std::size_t row = 0;
    for (const auto& m : multipliers) {
        for (std::size_t c = 0; c < low.size(); ++c) {
            const auto& col = low.columns()[c];
            Exponent e(col.exp);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
            target[c] = top.index_of(col.component, e);
        }
        for (std::size_t phi = 0; phi < constraints.rows(); ++phi, ++row)
            for (std::size_t c = 0; c < low.size(); ++c)
                if (target[c] >= 0) out(row, c) = constraints(phi, static_cast<std::size_t>(target[c]));
    }
    return out;
}

template <Field F>
LinearSubspace<F> colon_of_constraints(const F& f, const TupleSpace& top, const Matrix<F>& constraints, int k) {
    TupleSpace low = top.at_degree(k);
    if (k > top.degree()) throw std::invalid_argument("colon degree exceeds the top degree");
    if (constraints.rows() == 0) return LinearSubspace<F>::full(f, std::move(low));
    const auto psi = colon_constraint_matrix(f, top, constraints, k);
    if (psi.rows() == 0) return LinearSubspace<F>::full(f, std::move(low));
    auto ker = kernel(f, psi);
    if (ker.rows() == 0) return LinearSubspace<F>::zero(std::move(low));
    return {std::move(low), std::move(ker)};
}

template <Field F>
LinearSubspace<F> colon_subspace(const F& f, const LinearSubspace<F>& v_top, int k) {
    return colon_of_constraints(f, v_top.ambient, v_top.annihilator(f), k);
}

template <Field F>
HilbertTable subspace_dimension_table(const std::string& label, const std::vector<LinearSubspace<F>>& family) {
    if (family.empty()) return {label, 0, {}};
    const int first = family.front().ambient.degree();
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].ambient.degree() != first + static_cast<int>(i))
            throw std::invalid_argument("subspace family degrees are not consecutive");
        values.push_back(static_cast<std::int64_t>(family[i].codimension()));
    }
    return {label, first, std::move(values)};
}

#define NODAL_INSTANTIATE_HILBERT(F)                                                                          \
    template class PointSet<F>;                                                                              \
    template Matrix<F> evaluation_matrix(const F&, const std::vector<Exponent>&, const PointSet<F>&);        \
    template std::int64_t hilbert_of_points(const F&, const PointSet<F>&, std::span<const int>, int);        \
    template HilbertTable hilbert_table_of_points(const F&, const PointSet<F>&, std::span<const int>, int,   \
                                                  int);                                                      \
    template std::int64_t linear_system_defect(const F&, const PointSet<F>&, std::span<const int>, int);     \
    template struct LinearSubspace<F>;                                                                       \
    template Matrix<F> colon_constraint_matrix(const F&, const TupleSpace&, const Matrix<F>&, int);          \
    template LinearSubspace<F> colon_of_constraints(const F&, const TupleSpace&, const Matrix<F>&, int);     \
    template LinearSubspace<F> colon_subspace(const F&, const LinearSubspace<F>&, int);                      \
    template HilbertTable subspace_dimension_table(const std::string&, const std::vector<LinearSubspace<F>>&);

NODAL_INSTANTIATE_HILBERT(FiniteField)
NODAL_INSTANTIATE_HILBERT(RationalField)

#undef NODAL_INSTANTIATE_HILBERT

}  // namespace nodal
