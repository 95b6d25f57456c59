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

#include "nodal/cayley.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <thread>

namespace nodal {

void CompleteIntersection::validate() const {
    config.validate();
    if (static_cast<int>(equations.size()) != config.c)
        throw std::invalid_argument("expected " + std::to_string(config.c) + " equations, got " +
                                    std::to_string(equations.size()));
    for (int i = 0; i < config.c; ++i) {
        const auto& e = equations[i];
        if (e.num_vars() != config.num_vars() || e.weights() != config.weights)
            throw std::invalid_argument("equation " + std::to_string(i + 1) + " lives in a different ring");
        if (e.degree() != config.degrees[i])
            throw DegreeMismatch("equation " + std::to_string(i + 1) + " has degree " + std::to_string(e.degree()) +
                                 ", expected " + std::to_string(config.degrees[i]));
    }
}

BigradedPolynomial cayley_equation(const CompleteIntersection& x) {
    x.validate();
    const int nx = x.num_vars(), c = x.config.c;
    std::vector<Term> terms;
    for (int i = 0; i < c; ++i)
        for (const auto& t : x.equations[i].poly().terms()) {
            Exponent e(t.exp);
            e.resize(static_cast<std::size_t>(nx + c), 0);
            e[nx + i] = 1;
            terms.push_back({t.coeff, std::move(e)});
        }
    return {x.config.weights, x.config.degrees, {0, 1}, Polynomial(nx + c, std::move(terms))};
}

template <Field F>
Matrix<F> jacobian_at(const F& f, const CompleteIntersection& x, std::span<const typename F::Elem> p) {
    const int c = x.config.c, nv = x.num_vars();
    if (static_cast<int>(p.size()) != nv)
        throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, need " + std::to_string(nv));
    Matrix<F> m(static_cast<std::size_t>(c), static_cast<std::size_t>(nv));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < nv; ++j) m(i, j) = x.equations[i].poly().derivative(j).evaluate(f, p);
    return m;
}

namespace {

template <Field F>
void require_on_x(const F& f, const CompleteIntersection& x, std::span<const typename F::Elem> p) {
    for (int i = 0; i < x.config.c; ++i)
        if (!f.is_zero(x.equations[i].evaluate(f, p)))
            throw PreconditionError("point does not lie on X (f_" + std::to_string(i + 1) + " != 0)");
}

template <Field F>
std::size_t first_nonzero(const F& f, std::span<const typename F::Elem> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!f.is_zero(v[i])) return i;
    throw PreconditionError("zero vector has no affine chart");
}

}  // namespace

template <Field F>
NodeRecord<F> lift_node(const F& f, const CompleteIntersection& x, std::span<const typename F::Elem> p_in) {
    NodeRecord<F> rec;
    rec.p.assign(p_in.begin(), p_in.end());
    normalize_point(f, std::span(rec.p));
    require_on_x(f, x, std::span<const typename F::Elem>(rec.p));
    const auto m = jacobian_at(f, x, std::span<const typename F::Elem>(rec.p));
    const int c = x.config.c;
    const int r = static_cast<int>(rank(f, m));
    if (r == c) throw PreconditionError("X is smooth at the point (Jacobian rank " + std::to_string(r) + ")");
    if (c - r - 1 != 0) throw LiftError(c - r - 1, r);
    const auto ker = left_kernel(f, m);
    rec.q.assign(ker.row(0).begin(), ker.row(0).end());
    normalize_point(f, std::span(rec.q));
    rec.jacobian_rank = r;
    return rec;
}

template <Field F>
Matrix<F> chart_hessian(const F& f, const CompleteIntersection& x, const NodeRecord<F>& rec) {
    using Elem = typename F::Elem;
    if (!x.config.standard_weights()) throw PreconditionError("node certification requires standard weights");
    const int c = x.config.c, nv = x.num_vars();
    std::span<const Elem> p(rec.p), q(rec.q);
    if (static_cast<int>(q.size()) != c) throw PreconditionError("lift has the wrong number of coordinates");
    require_on_x(f, x, p);
    const auto m = jacobian_at(f, x, p);
    if (static_cast<int>(rank(f, m)) == c) throw PreconditionError("X is smooth at the point");
    for (int j = 0; j < nv; ++j) {
        Elem s = f.zero();
        for (int i = 0; i < c; ++i) s = f.add(s, f.mul(q[i], m(i, j)));
        if (!f.is_zero(s)) throw PreconditionError("q is not in the left kernel of M(p)");
    }
    const std::size_t a = first_nonzero(f, p), b = first_nonzero(f, q);

    const int total = nv + c;
    Matrix<F> full(static_cast<std::size_t>(total), static_cast<std::size_t>(total));
    for (int k = 0; k < c; ++k) {
        if (f.is_zero(q[k])) continue;
        for (int i = 0; i < nv; ++i) {
            const auto di = x.equations[k].poly().derivative(i);
            for (int j = i; j < nv; ++j) {
                const auto v = f.mul(q[k], di.derivative(j).evaluate(f, p));
                full(i, j) = f.add(full(i, j), v);
            }
        }
    }
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < i; ++j) full(i, j) = full(j, i);
    for (int k = 0; k < c; ++k)
        for (int i = 0; i < nv; ++i) full(i, nv + k) = full(nv + k, i) = m(k, i);

    std::vector<std::size_t> keep;
    for (int i = 0; i < total; ++i)
        if (static_cast<std::size_t>(i) != a && static_cast<std::size_t>(i) != nv + b) keep.push_back(i);
    Matrix<F> h(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) h(i, j) = full(keep[i], keep[j]);
    return h;
}

template <Field F>
bool certify_node(const F& f, const CompleteIntersection& x, NodeRecord<F>& rec) {
    const auto h = chart_hessian(f, x, rec);
    rec.hessian_rank = static_cast<int>(rank(f, h));
    return rec.hessian_rank == x.config.n + 2 * x.config.c - 1;
}

template Matrix<FiniteField> jacobian_at(const FiniteField&, const CompleteIntersection&,
                                         std::span<const FiniteField::Elem>);
template Matrix<RationalField> jacobian_at(const RationalField&, const CompleteIntersection&,
                                           std::span<const RationalField::Elem>);
template NodeRecord<FiniteField> lift_node(const FiniteField&, const CompleteIntersection&,
                                           std::span<const FiniteField::Elem>);
template NodeRecord<RationalField> lift_node(const RationalField&, const CompleteIntersection&,
                                             std::span<const RationalField::Elem>);
template Matrix<FiniteField> chart_hessian(const FiniteField&, const CompleteIntersection&,
                                           const NodeRecord<FiniteField>&);
template Matrix<RationalField> chart_hessian(const RationalField&, const CompleteIntersection&,
                                             const NodeRecord<RationalField>&);
template bool certify_node(const FiniteField&, const CompleteIntersection&, NodeRecord<FiniteField>&);
template bool certify_node(const RationalField&, const CompleteIntersection&, NodeRecord<RationalField>&);

std::uint64_t projective_point_count(std::uint64_t q, int r) {
    std::uint64_t total = 0, block = 1;
    for (int i = 0; i < r; ++i) {
        total += block;
        if (i + 1 < r && block > UINT64_MAX / q) return UINT64_MAX;
        block *= q;
    }
    return total;
}

namespace {

using Elem = FiniteField::Elem;
using PointVec = std::vector<Elem>;

// Normalized point of P^{r-1}(F_q) with the given rank in the enumeration order:
// leading 1 at position i, zeros before, base-q digits after.
void unrank_point(std::uint64_t q, int r, std::uint64_t idx, PointVec& out) {
    out.assign(static_cast<std::size_t>(r), 0);
    int lead = 0;
    std::uint64_t block = 1;
    for (int i = 0; i < r - 1; ++i) block *= q;
    while (idx >= block) {
        idx -= block;
        block /= q;
        ++lead;
    }
    out[lead] = 1;
    for (int j = r - 1; j > lead; --j) {
        out[j] = static_cast<Elem>(idx % q);
        idx /= q;
    }
}

class DomainMap {
   public:
    DomainMap(const FiniteField& f, const SearchDomain& d, int nv) : f_(f), nv_(nv), ambient_(d.kind == SearchDomain::Kind::ambient) {
        if (ambient_) return;
        for (const auto& row : d.basis) {
            if (static_cast<int>(row.size()) != nv) throw std::invalid_argument("subspace basis row has wrong length");
            PointVec r;
            for (const auto& v : row) r.push_back(f.from_rational(v));
            rows_.push_back(std::move(r));
        }
        Matrix<FiniteField> m;
        for (const auto& r : rows_) m.append_row(r);
        if (rank(f, m) != rows_.size())
            throw std::invalid_argument("subspace basis is dependent over " + f.name());
    }

    int dimension() const { return ambient_ ? nv_ : static_cast<int>(rows_.size()); }

    void map(const PointVec& lambda, PointVec& out) const {
        if (ambient_) {
            out = lambda;
            return;
        }
        out.assign(static_cast<std::size_t>(nv_), 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (lambda[i] == 0) continue;
            for (int j = 0; j < nv_; ++j) out[j] = f_.add(out[j], f_.mul(lambda[i], rows_[i][j]));
        }
        normalize_point(f_, std::span(out));
    }

   private:
    const FiniteField& f_;
    int nv_;
    bool ambient_;
    std::vector<PointVec> rows_;
};

struct CompiledSystem {
    std::vector<CompiledPolynomial<FiniteField>> eqs;
    std::vector<std::vector<CompiledPolynomial<FiniteField>>> partials;

    CompiledSystem(const FiniteField& f, const std::vector<Polynomial>& equations, int nv) {
        for (const auto& e : equations) {
            eqs.emplace_back(f, e);
            std::vector<CompiledPolynomial<FiniteField>> row;
            for (int j = 0; j < nv; ++j) row.emplace_back(f, e.derivative(j));
            partials.push_back(std::move(row));
        }
    }
};

// Runs body(index) over [0, count) split into contiguous chunks, one per worker.
template <class Body>
void parallel_ranges(std::uint64_t count, unsigned jobs, Body body) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2 * jobs) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        const std::uint64_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<PointVec> find_singular_points(const FiniteField& f, const CompleteIntersection& x,
                                           const SearchDomain& domain, const ScanOptions& options) {
    x.validate();
    std::vector<Polynomial> eqs;
    for (const auto& e : x.equations) eqs.push_back(e.poly());
    return find_singular_points(f, eqs, domain, options);
}

std::vector<PointVec> find_singular_points(const FiniteField& f, const std::vector<Polynomial>& equations,
                                           const SearchDomain& domain, const ScanOptions& options) {
    if (equations.empty()) throw std::invalid_argument("scan needs at least one equation");
    const int nv = equations.front().num_vars(), c = static_cast<int>(equations.size());
    DomainMap dmap(f, domain, nv);
    const int r = dmap.dimension();
    const std::uint64_t count = projective_point_count(f.order(), r);
    if (count > options.budget) throw BudgetExceeded(count, options.budget);
    const CompiledSystem sys(f, equations, nv);

    std::vector<PointVec> found;
    std::mutex lock;
    parallel_ranges(count, options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<PointVec> local;
        PointVec lambda, pt;
        Matrix<FiniteField> m(static_cast<std::size_t>(c), static_cast<std::size_t>(nv));
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            unrank_point(f.order(), r, idx, lambda);
            dmap.map(lambda, pt);
            bool on = true;
            for (const auto& e : sys.eqs)
                if (e(pt) != 0) {
                    on = false;
                    break;
                }
            if (!on) continue;
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < nv; ++j) m(i, j) = sys.partials[i][j](pt);
            if (static_cast<int>(rank(f, m)) < c) local.push_back(pt);
        }
        std::lock_guard<std::mutex> g(lock);
        found.insert(found.end(), local.begin(), local.end());
    });
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<std::pair<PointVec, PointVec>> find_cayley_singular_points(const FiniteField& f,
                                                                       const CompleteIntersection& x,
                                                                       const SearchDomain& domain,
                                                                       const ScanOptions& options) {
    const auto big = cayley_equation(x);
    const int nv = x.num_vars(), c = x.config.c;
    DomainMap dmap(f, domain, nv);
    const int r = dmap.dimension();
    const std::uint64_t count = projective_point_count(f.order(), r);
    const std::uint64_t fiber = projective_point_count(f.order(), c);
    if (count > options.budget || fiber > options.budget / std::max<std::uint64_t>(count, 1))
        throw BudgetExceeded(count * fiber, options.budget);

    const CompiledPolynomial<FiniteField> whole(f, big.poly());
    std::vector<CompiledPolynomial<FiniteField>> grad;
    for (int v = 0; v < nv + c; ++v) grad.emplace_back(f, big.poly().derivative(v));

    std::vector<std::pair<PointVec, PointVec>> found;
    std::mutex lock;
    parallel_ranges(count, options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::pair<PointVec, PointVec>> local;
        PointVec lambda, pt, qv, z;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            unrank_point(f.order(), r, idx, lambda);
            dmap.map(lambda, pt);
            z = pt;
            z.resize(static_cast<std::size_t>(nv + c), 0);
            z[nv] = 1;
            // dF/dy_j does not involve y, so test those first.
            bool candidate = true;
            for (int j = 0; j < c && candidate; ++j) candidate = grad[nv + j](z) == 0;
            if (!candidate) continue;
            for (std::uint64_t t = 0; t < fiber; ++t) {
                unrank_point(f.order(), c, t, qv);
                std::copy(qv.begin(), qv.end(), z.begin() + nv);
                bool sing = whole(z) == 0;
                for (int v = 0; v < nv && sing; ++v) sing = grad[v](z) == 0;
                if (sing) local.emplace_back(pt, qv);
            }
        }
        std::lock_guard<std::mutex> g(lock);
        found.insert(found.end(), local.begin(), local.end());
    });
    std::sort(found.begin(), found.end());
    return found;
}

int point_field_degree(const FiniteField& f, std::span<const Elem> point) {
    int d = 1;
    for (auto v : point) d = std::lcm(d, f.minimal_degree(v));
    return d;
}

std::vector<ExtensionScan> scan_extensions(std::uint32_t p, int max_degree, const CompleteIntersection& x,
                                           const SearchDomain& domain, const ScanOptions& options) {
    std::vector<ExtensionScan> out;
    for (int k = 1; k <= max_degree; ++k) {
        const FiniteField f = k == 1 ? FiniteField::prime(p) : FiniteField::extension(p, k);
        ExtensionScan s;
        s.degree = k;
        s.points_examined = projective_point_count(f.order(), domain.affine_dimension(x.num_vars()));
        s.points = find_singular_points(f, x, domain, options);
        s.rational_points = s.points.size();
        for (const auto& pt : s.points)
            if (point_field_degree(f, pt) == k) ++s.new_points;
        s.orbits = s.new_points / static_cast<std::uint64_t>(k);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace nodal
