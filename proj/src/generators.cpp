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

#include "nodal/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nodal/hilbert.hpp"
#include "nodal/random.hpp"

namespace nodal {

namespace {

constexpr int kAmbient = 6;  // P^5 for c = 2

using RationalPoint = std::vector<mpq_class>;

Polynomial random_form(int nv, int degree, Rng& rng, std::int64_t bound,
                       const std::function<bool(const Exponent&)>& allowed) {
    std::vector<Term> terms;
    for (auto& e : monomial_basis(std::vector<int>(static_cast<std::size_t>(nv), 1), degree)) {
        if (!allowed(e)) continue;
        const std::int64_t v = rng.uniform(-bound, bound);
        if (v) terms.push_back({mpq_class(static_cast<long>(v)), std::move(e)});
    }
    return Polynomial(nv, std::move(terms));
}

Polynomial var(int i) { return Polynomial::variable(kAmbient, i); }

// Random point of P^{r-1} with small integer coordinates, normalized over Q.
RationalPoint random_point(int r, Rng& rng, std::int64_t bound) {
    for (;;) {
        RationalPoint p;
        bool nonzero = false;
        for (int i = 0; i < r; ++i) {
            p.emplace_back(static_cast<long>(rng.uniform(-bound, bound)));
            nonzero = nonzero || sgn(p.back()) != 0;
        }
        if (!nonzero) continue;
        normalize_point(RationalField{}, std::span(p));
        return p;
    }
}

ScanRecord scan_record(const FiniteField& f, const std::string& domain, std::uint64_t examined, std::uint64_t found,
                       bool ok) {
    return {f.name(), domain, examined, found, ok};
}

// Lifts and certifies the candidate nodes over Q; nullopt if one fails.
std::optional<std::vector<NodeRecord<RationalField>>> certify_all(const CompleteIntersection& x,
                                                                  const std::vector<RationalPoint>& points) {
    const RationalField q;
    std::vector<NodeRecord<RationalField>> out;
    for (const auto& p : points) {
        try {
            auto rec = lift_node(q, x, std::span<const mpq_class>(p));
            if (!certify_node(q, x, rec)) return std::nullopt;
            out.push_back(std::move(rec));
        } catch (const LiftError&) {
            return std::nullopt;
        } catch (const PreconditionError&) {
            return std::nullopt;
        }
    }
    return out;
}

// Scans the locus at every configured prime and requires the singular points there
// to be exactly the reductions of the certified nodes.
bool locus_scans_match(const CompleteIntersection& x, const std::vector<NodeRecord<RationalField>>& nodes,
                       const SearchDomain& locus, const std::string& label, const GeneratorOptions& opt,
                       std::vector<ScanRecord>& scans) {
    for (auto p : opt.scan_primes) {
        const FiniteField f = FiniteField::prime(p);
        std::vector<std::vector<FiniteField::Elem>> expected;
        try {
            expected = reduce_node_points(f, nodes);
        } catch (const FieldError&) {
            return false;
        }
        const bool distinct = std::adjacent_find(expected.begin(), expected.end()) == expected.end();
        const auto found = find_singular_points(f, x, locus, opt.scan);
        const bool ok = distinct && found == expected;
        scans.push_back(scan_record(f, label, projective_point_count(f.order(), locus.affine_dimension(x.num_vars())),
                                    found.size(), ok));
        if (!ok) return false;
    }
    return true;
}

// Ambient scan at a small prime; every singular point must satisfy on_locus.
bool off_locus_scan(const CompleteIntersection& x, const std::function<bool(const std::vector<FiniteField::Elem>&)>& on_locus,
                    const GeneratorOptions& opt, std::vector<ScanRecord>& scans) {
    const FiniteField f = FiniteField::prime(opt.off_locus_prime);
    const auto found = find_singular_points(f, x, SearchDomain::ambient(), opt.scan);
    const auto stray = std::count_if(found.begin(), found.end(), [&](const auto& p) { return !on_locus(p); });
    scans.push_back(scan_record(f, "ambient_off_locus", projective_point_count(f.order(), x.num_vars()),
                                static_cast<std::uint64_t>(stray), stray == 0));
    return stray == 0;
}

using PointFilter = std::function<bool(const std::vector<FiniteField::Elem>&)>;

// Smoothness of V(f_1, ..., f_{c-1}): exact for one quadric. Otherwise the reductions at 7, 11 and 13
// are scanned in turn and the first one without singular points is taken as evidence of smoothness.
// Points accepted by `settled` were already decided exactly by the caller and are skipped.
void first_equations_smoothness(const CompleteIntersection& x, const GeneratorOptions& opt, ExampleProvenance& prov,
                                const PointFilter& settled = {}, std::string evidence = {}) {
    const int c = x.config.c;
    if (c == 1) {
        prov.first_equations_smooth = true;
        prov.first_equations_evidence = "no earlier equations";
        return;
    }
    if (c == 2 && x.config.degrees[0] == 2) {
        const auto& f1 = x.equations[0].poly();
        const int nv = x.num_vars();
        const RationalField q;
        Matrix<RationalField> h(static_cast<std::size_t>(nv), static_cast<std::size_t>(nv));
        const std::vector<mpq_class> origin(static_cast<std::size_t>(nv), mpq_class(0));
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) h(i, j) = f1.derivative(i).derivative(j).evaluate(q, std::span<const mpq_class>(origin));
        const auto r = rank(q, h);
        prov.first_equations_smooth = static_cast<int>(r) == nv;
        prov.first_equations_evidence = "quadric f_1 has rank " + std::to_string(r) + " over Q";
        return;
    }
    std::vector<Polynomial> eqs;
    for (int i = 0; i + 1 < c; ++i) eqs.push_back(x.equations[i].poly());
    bool clean = false;
    if (!evidence.empty()) evidence += "; ";
    evidence += "singular points of V(f_1..f_{c-1})";
    if (settled) evidence += " elsewhere";
    evidence += ":";
    for (std::uint32_t p : {7u, 11u, 13u}) {
        const FiniteField f = FiniteField::prime(p);
        auto found = find_singular_points(f, eqs, SearchDomain::ambient(), opt.scan);
        if (settled) std::erase_if(found, settled);
        prov.scans.push_back(scan_record(f, "first_equations", projective_point_count(f.order(), x.num_vars()),
                                         found.size(), true));
        evidence += " " + std::to_string(found.size()) + " over " + f.name();
        clean = found.empty();
        if (clean) break;
    }
    prov.first_equations_smooth = clean;
    prov.first_equations_evidence = evidence;
}

template <class Build>
GeneratedExample with_retries(std::uint64_t seed, const GeneratorOptions& opt, const std::string& what, Build build) {
    for (int retry = 0; retry <= opt.max_retries; ++retry) {
        auto ex = build(seed + static_cast<std::uint64_t>(retry));
        if (!ex) continue;
        ex->provenance.seed = seed;
        ex->provenance.effective_seed = seed + static_cast<std::uint64_t>(retry);
        ex->provenance.retries = retry;
        return std::move(*ex);
    }
    throw GenerationFailed(what + ": no generic example after " + std::to_string(opt.max_retries + 1) + " seeds");
}

std::vector<std::vector<mpq_class>> unit_rows(std::initializer_list<int> idx) {
    std::vector<std::vector<mpq_class>> rows;
    for (int i : idx) {
        std::vector<mpq_class> r(kAmbient, mpq_class(0));
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

// Coefficient vectors over `basis` of the products x^beta * g_k; rows indexed by degree s + e monomials.
Matrix<RationalField> syzygy_map(const Matrix<RationalField>& gens, const std::vector<Exponent>& mon_s,
                                 const std::vector<Exponent>& mon_e, const std::vector<Exponent>& mon_se) {
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < mon_se.size(); ++i) index.emplace(mon_se[i], i);
    Matrix<RationalField> m(mon_se.size(), gens.rows() * mon_e.size());
    for (std::size_t k = 0; k < gens.rows(); ++k)
        for (std::size_t b = 0; b < mon_e.size(); ++b)
            for (std::size_t a = 0; a < mon_s.size(); ++a) {
                if (sgn(gens(k, a)) == 0) continue;
                Exponent e = mon_s[a];
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += mon_e[b][v];
                m(index.at(e), k * mon_e.size() + b) += gens(k, a);
            }
    return m;
}

// Polynomial in x_0, x_1, x_2 (embedded in P^5) from a coefficient block.
Polynomial block_polynomial(const Matrix<RationalField>& m, std::size_t row, std::size_t offset,
                            const std::vector<Exponent>& mon) {
    std::vector<Term> terms;
    for (std::size_t b = 0; b < mon.size(); ++b) {
        if (sgn(m(row, offset + b)) == 0) continue;
        Exponent e(kAmbient, 0);
        for (int v = 0; v < 3; ++v) e[v] = mon[b][v];
        terms.push_back({m(row, offset + b), std::move(e)});
    }
    return Polynomial(kAmbient, std::move(terms));
}

std::optional<GeneratedExample> build_plane(int d1, int d2, std::uint64_t seed, const GeneratorOptions& opt) {
    const int e1 = d1 - 1, e2 = d2 - 1, s = e1 + e2;
    const std::size_t n_points = static_cast<std::size_t>(e1 * e1 + e1 * e2 + e2 * e2);
    const RationalField q;
    const std::vector<int> w3{1, 1, 1};
    Rng rng = Rng::stream(seed, "plane_points");

    std::vector<RationalPoint> z;
    while (z.size() < n_points) {
        auto p = random_point(3, rng, 6);
        if (std::find(z.begin(), z.end(), p) == z.end()) z.push_back(std::move(p));
    }
    const PointSet<RationalField> zs(q, 3, z);
    const auto mon_s = monomial_basis(w3, s);
    const auto gens = kernel(q, evaluation_matrix(q, mon_s, zs));
    if (gens.rows() != 3) return std::nullopt;

    // Rows of the Hilbert-Burch matrix: syzygies of degree e1 and e2 among the three generators.
    const auto mon_e1 = monomial_basis(w3, e1), mon_e2 = monomial_basis(w3, e2);
    const auto k1 = kernel(q, syzygy_map(gens, mon_s, mon_e1, monomial_basis(w3, s + e1)));
    std::vector<Polynomial> entries;
    auto take_row = [&](const Matrix<RationalField>& k, std::size_t r, const std::vector<Exponent>& mon) {
        for (std::size_t col = 0; col < 3; ++col) entries.push_back(block_polynomial(k, r, col * mon.size(), mon));
    };
    // A row vanishing at a point of Z makes its equation singular there.
    auto row_vanishes = [&](std::size_t row) {
        for (const auto& p : z) {
            RationalPoint full(kAmbient, mpq_class(0));
            std::copy(p.begin(), p.end(), full.begin());
            bool all_zero = true;
            for (std::size_t col = 0; col < 3 && all_zero; ++col)
                all_zero = entries[row * 3 + col].evaluate(q, full) == 0;
            if (all_zero) return true;
        }
        return false;
    };
    if (e1 == e2) {
        if (k1.rows() != 2) return std::nullopt;
        // Generic basis of the syzygy pencil.
        Rng mix_rng = Rng::stream(seed, "plane_syzygy_mix");
        for (int attempt = 0;; ++attempt) {
            if (attempt == 32) return std::nullopt;
            mpq_class a[2][2];
            do {
                for (auto& r : a)
                    for (auto& v : r) v = static_cast<long>(mix_rng.uniform(-3, 3));
            } while (a[0][0] * a[1][1] - a[0][1] * a[1][0] == 0);
            Matrix<RationalField> mixed(2, k1.cols());
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t col = 0; col < k1.cols(); ++col)
                    mixed(r, col) = a[r][0] * k1(0, col) + a[r][1] * k1(1, col);
            entries.clear();
            take_row(mixed, 0, mon_e1);
            take_row(mixed, 1, mon_e1);
            if (!row_vanishes(0) && !row_vanishes(1)) break;
        }
    } else {
        if (k1.rows() != 1) return std::nullopt;
        take_row(k1, 0, mon_e1);
        const auto k2 = kernel(q, syzygy_map(gens, mon_s, mon_e2, monomial_basis(w3, s + e2)));
        // Multiples of the first syzygy inside the degree-e2 syzygies.
        Matrix<RationalField> sub;
        std::map<Exponent, std::size_t> idx2;
        for (std::size_t i = 0; i < mon_e2.size(); ++i) idx2.emplace(mon_e2[i], i);
        for (const auto& g : monomial_basis(w3, e2 - e1)) {
            std::vector<mpq_class> v(3 * mon_e2.size(), mpq_class(0));
            for (std::size_t col = 0; col < 3; ++col)
                for (std::size_t b = 0; b < mon_e1.size(); ++b) {
                    Exponent e = mon_e1[b];
                    for (int t = 0; t < 3; ++t) e[t] += g[t];
                    v[col * mon_e2.size() + idx2.at(e)] = k1(0, col * mon_e1.size() + b);
                }
            sub.append_row(v);
        }
        const std::size_t base = rank(q, sub);
        if (k2.rows() != base + 1) return std::nullopt;
        bool found = false;
        for (std::size_t r = 0; r < k2.rows() && !found; ++r) {
            Matrix<RationalField> trial = sub;
            trial.append_row(k2.row(r));
            if (rank(q, trial) == base + 1) {
                take_row(k2, r, mon_e2);
                found = true;
            }
        }
        if (!found) return std::nullopt;
        if (row_vanishes(0)) return std::nullopt;
    }
    for (int row = 0; row < 2; ++row) {
        mpz_class l = 1;
        for (int col = 0; col < 3; ++col) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), entries[row * 3 + col].denominator_lcm().get_mpz_t());
        for (int col = 0; col < 3; ++col) entries[row * 3 + col] = entries[row * 3 + col].scaled(mpq_class(l));
    }
    // The maximal minors must cut out exactly the chosen points.
    const Polynomial minors[3] = {entries[1] * entries[5] - entries[2] * entries[4],
                                  entries[0] * entries[5] - entries[2] * entries[3],
                                  entries[0] * entries[4] - entries[1] * entries[3]};
    Matrix<RationalField> minor_coeffs(3, mon_s.size());
    for (int i = 0; i < 3; ++i)
        for (std::size_t a = 0; a < mon_s.size(); ++a) {
            Exponent e(kAmbient, 0);
            for (int v = 0; v < 3; ++v) e[v] = mon_s[a][v];
            minor_coeffs(i, a) = minors[i].coefficient(e);
        }
    if (rank(q, minor_coeffs) != 3) return std::nullopt;
    Matrix<RationalField> both = gens;
    for (int i = 0; i < 3; ++i) both.append_row(minor_coeffs.row(i));
    if (rank(q, both) != 3) return std::nullopt;

    Rng lift_rng = Rng::stream(seed, "plane_lift");
    auto off_plane = [](const Exponent& e) { return e[3] + e[4] + e[5] > 0; };
    CompleteIntersection x;
    x.config = CIConfig::standard(3, {d1, d2});
    const int es[2] = {e1, e2};
    for (int row = 0; row < 2; ++row) {
        Polynomial f(kAmbient);
        for (int col = 0; col < 3; ++col) {
            const Polynomial entry = entries[row * 3 + col] + random_form(kAmbient, es[row], lift_rng, 3, off_plane);
            f = f + var(3 + col) * entry;
        }
        x.equations.emplace_back(x.config.weights, es[row] + 1, std::move(f));
    }

    std::vector<RationalPoint> candidates;
    for (const auto& p : z) {
        RationalPoint full(kAmbient, mpq_class(0));
        std::copy(p.begin(), p.end(), full.begin());
        candidates.push_back(std::move(full));
    }
    auto nodes = certify_all(x, candidates);
    if (!nodes) return std::nullopt;

    GeneratedExample ex{x, std::move(*nodes), {}};
    auto& prov = ex.provenance;
    prov.family = "plane-containing";
    prov.degrees = {d1, d2};
    prov.node_locus = "plane x3=x4=x5=0";
    prov.locus_basis = unit_rows({0, 1, 2});
    prov.expected_node_formula = "sum_{i<=j} (d_i-1)(d_j-1)";
    prov.expected_node_count = static_cast<std::int64_t>(n_points);
    prov.expected_defect = 1;
    prov.hyperplane_section_contains_line = true;
    if (!locus_scans_match(x, ex.nodes, SearchDomain::subspace(prov.locus_basis), "plane", opt, prov.scans))
        return std::nullopt;
    auto on_plane = [](const std::vector<FiniteField::Elem>& p) { return p[3] == 0 && p[4] == 0 && p[5] == 0; };
    if (!off_locus_scan(x, on_plane, opt, prov.scans)) return std::nullopt;
    // On the plane, f_1 is singular exactly at the points of Z where the first row vanishes.
    std::size_t plane_singular = 0;
    for (const auto& p : candidates) {
        const std::span<const mpq_class> pt(p);
        bool all_zero = true;
        for (int col = 0; col < 3; ++col) all_zero = all_zero && sgn(entries[col].evaluate(q, pt)) == 0;
        plane_singular += all_zero;
    }
    if (plane_singular > 0 && x.config.degrees[0] != 2) {
        prov.first_equations_smooth = false;
        prov.first_equations_evidence = std::to_string(plane_singular) + " singular points of f_1 on the plane over Q";
    } else {
        first_equations_smoothness(x, opt, prov, on_plane, "f_1 smooth along the plane over Q");
    }
    return ex;
}

std::optional<GeneratedExample> build_induced(int d2, std::uint64_t seed, const GeneratorOptions& opt) {
    Rng rng = Rng::stream(seed, "induced");
    std::vector<RationalPoint> ratios;
    while (ratios.size() < static_cast<std::size_t>(d2)) {
        auto r = random_point(2, rng, 6);
        if (std::find(ratios.begin(), ratios.end(), r) == ratios.end()) ratios.push_back(std::move(r));
    }
    // Node (0:0:0:0:b:a) is the zero of a x4 - b x5.
    Polynomial product = Polynomial::constant(kAmbient, 1);
    std::vector<RationalPoint> candidates;
    for (const auto& r : ratios) {
        const mpq_class& b = r[0];
        const mpq_class& a = r[1];
        product = product * (var(4).scaled(a) - var(5).scaled(b));
        RationalPoint p(kAmbient, mpq_class(0));
        p[4] = b;
        p[5] = a;
        candidates.push_back(std::move(p));
    }
    auto touches_quadric_vars = [](const Exponent& e) { return e[0] + e[1] + e[2] + e[3] > 0; };
    const Polynomial g = product + random_form(kAmbient, d2, rng, 3, touches_quadric_vars);
    const Polynomial f1 = var(0).pow(2) + var(1).pow(2) + var(2).pow(2) + var(3).pow(2);

    CompleteIntersection x;
    x.config = CIConfig::standard(3, {2, d2});
    x.equations.emplace_back(x.config.weights, 2, f1);
    x.equations.emplace_back(x.config.weights, d2, g);

    auto nodes = certify_all(x, candidates);
    if (!nodes) return std::nullopt;

    GeneratedExample ex{x, std::move(*nodes), {}};
    auto& prov = ex.provenance;
    prov.family = "induced-defect";
    prov.degrees = {2, d2};
    prov.node_locus = "line x0=x1=x2=x3=0 (singular line of V(f_1))";
    prov.locus_basis = unit_rows({4, 5});
    prov.expected_node_formula = "s*d_2 with s=1";
    prov.expected_node_count = d2;
    if (d2 == 2) prov.expected_defect = 1;
    prov.induced_defect = true;
    prov.first_equations_smooth = false;
    prov.first_equations_evidence = "f_1 is singular along the line x0=x1=x2=x3=0";
    if (!locus_scans_match(x, ex.nodes, SearchDomain::subspace(prov.locus_basis), "line", opt, prov.scans))
        return std::nullopt;
    auto on_line = [](const std::vector<FiniteField::Elem>& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0 && p[3] == 0; };
    if (!off_locus_scan(x, on_line, opt, prov.scans)) return std::nullopt;
    return ex;
}

std::optional<GeneratedExample> build_smooth(const std::vector<int>& degrees, std::uint64_t seed,
                                             const GeneratorOptions& opt) {
    CompleteIntersection x;
    x.config = CIConfig::standard(3, degrees);
    Rng rng = Rng::stream(seed, "smooth_random");
    for (int d : x.config.degrees) x.equations.push_back(random_polynomial(x.config.weights, d, rng));
    GeneratedExample ex{x, {}, {}};
    auto& prov = ex.provenance;
    prov.family = "smooth-random";
    prov.degrees = x.config.degrees;
    prov.node_locus = "none";
    prov.expected_node_formula = "0";
    prov.expected_node_count = 0;
    prov.expected_defect = 0;
    for (std::uint32_t p : {5u, 7u}) {
        const FiniteField f = FiniteField::prime(p);
        const auto found = find_singular_points(f, x, SearchDomain::ambient(), opt.scan);
        prov.scans.push_back(scan_record(f, "ambient", projective_point_count(f.order(), x.num_vars()), found.size(),
                                         found.empty()));
        if (!found.empty()) return std::nullopt;
    }
    first_equations_smoothness(x, opt, prov);
    return ex;
}

}  // namespace

std::vector<std::vector<FiniteField::Elem>> reduce_node_points(const FiniteField& f,
                                                               const std::vector<NodeRecord<RationalField>>& nodes) {
    std::vector<std::vector<FiniteField::Elem>> out;
    for (const auto& n : nodes) {
        std::vector<FiniteField::Elem> p;
        for (const auto& v : n.p) p.push_back(f.from_rational(v));
        normalize_point(f, std::span(p));
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GeneratedExample plane_containing_ci(const std::vector<int>& degrees, std::uint64_t seed,
                                     const GeneratorOptions& options) {
    if (degrees.size() != 2) throw std::invalid_argument("plane-containing examples need exactly two degrees");
    auto d = degrees;
    std::sort(d.begin(), d.end());
    if (d[0] < 2) throw std::invalid_argument("plane-containing examples need degrees >= 2");
    return with_retries(seed, options, "plane-containing",
                        [&](std::uint64_t s) { return build_plane(d[0], d[1], s, options); });
}

GeneratedExample induced_defect_example(int d2, std::uint64_t seed, const GeneratorOptions& options) {
    if (d2 < 2) throw std::invalid_argument("induced-defect examples need d_2 >= 2");
    return with_retries(seed, options, "induced-defect", [&](std::uint64_t s) { return build_induced(d2, s, options); });
}

std::vector<GeneratedExample> quadric_pair_cases(std::uint64_t seed, const GeneratorOptions& options) {
    std::vector<GeneratedExample> out;
    for (std::uint64_t s = seed;; ++s) {
        auto a = plane_containing_ci({2, 2}, s, options);
        bool distinct = true;
        for (std::size_t i = 0; i < a.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < a.nodes.size(); ++j) distinct = distinct && a.nodes[i].q != a.nodes[j].q;
        if (!distinct) continue;
        a.provenance.family = "quadric-pair";
        a.provenance.variant = "three nodes with distinct lifts";
        a.provenance.seed = seed;
        a.provenance.retries = static_cast<int>(a.provenance.effective_seed - seed);
        out.push_back(std::move(a));
        break;
    }
    auto b = induced_defect_example(2, seed, options);
    b.provenance.family = "quadric-pair";
    b.provenance.variant = "two nodes with equal lifts";
    out.push_back(std::move(b));
    return out;
}

GeneratedExample smooth_random_ci(const std::vector<int>& degrees, std::uint64_t seed,
                                  const GeneratorOptions& options) {
    if (degrees.empty()) throw std::invalid_argument("need at least one degree");
    return with_retries(seed, options, "smooth-random",
                        [&](std::uint64_t s) { return build_smooth(degrees, s, options); });
}

}  // namespace nodal
