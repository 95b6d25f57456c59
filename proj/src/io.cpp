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

#include "nodal/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace nodal::io {

namespace {

template <class Fn>
auto guarded(const std::string& what, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Json::exception& e) {
        throw InputError("invalid " + what + ": " + e.what());
    } catch (const DegreeMismatch& e) {
        throw InputError("invalid " + what + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError("invalid " + what + ": " + e.what());
    }
}

Json node_json(const std::vector<Json>& p, const std::vector<Json>& q, int jr, int hr) {
    Json n;
    n["p"] = p;
    n["q"] = q;
    n["jacobian_rank"] = jr;
    n["hessian_rank"] = hr;
    return n;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON (" +
                         e.what() + ")");
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json integer_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        mpz_class v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: " + j.get<std::string>());
        return v;
    }
    throw InputError("expected an integer, got " + j.dump());
}

Json rational_to_json(const mpq_class& v) {
    return Json::array({integer_to_json(v.get_num()), integer_to_json(v.get_den())});
}

mpq_class rational_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw InputError("rational must be [numerator, denominator], got " + j.dump());
        const mpz_class num = integer_from_json(j[0]), den = integer_from_json(j[1]);
        if (den == 0) throw InputError("zero denominator in " + j.dump());
        mpq_class v(num, den);
        v.canonicalize();
        return v;
    }
    return mpq_class(integer_from_json(j));
}

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) terms.push_back(Json::array({rational_to_json(t.coeff), t.exp}));
    return terms;
}

Polynomial polynomial_from_json(const Json& j, int num_vars) {
    return guarded("polynomial", [&] {
        if (!j.is_array()) throw InputError("polynomial must be a list of terms");
        std::vector<Term> terms;
        for (const auto& t : j) {
            if (!t.is_array() || t.size() != 2) throw InputError("term must be [coefficient, exponents]: " + t.dump());
            Exponent e = t[1].get<Exponent>();
            if (static_cast<int>(e.size()) != num_vars)
                throw InputError("exponent vector " + t[1].dump() + " should have " + std::to_string(num_vars) +
                                 " entries");
            if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
                throw InputError("negative exponent in " + t[1].dump());
            terms.push_back({rational_from_json(t[0]), std::move(e)});
        }
        return Polynomial(num_vars, std::move(terms));
    });
}

Json ci_to_json(const CompleteIntersection& x) {
    Json j;
    j["n"] = x.config.n;
    j["c"] = x.config.c;
    j["weights"] = x.config.weights;
    j["degrees"] = x.config.degrees;
    Json eqs = Json::array();
    for (const auto& e : x.equations) eqs.push_back(polynomial_to_json(e.poly()));
    j["equations"] = eqs;
    return j;
}

CompleteIntersection ci_from_json(const Json& j) {
    return guarded("complete intersection", [&] {
        CompleteIntersection x;
        x.config.degrees = j.at("degrees").get<std::vector<int>>();
        x.config.c = j.contains("c") ? j.at("c").get<int>() : static_cast<int>(x.config.degrees.size());
        x.config.n = j.contains("n") ? j.at("n").get<int>() : 3;
        if (j.contains("weights"))
            x.config.weights = j.at("weights").get<std::vector<int>>();
        else
            x.config.weights.assign(static_cast<std::size_t>(x.config.n + x.config.c + 1), 1);
        x.config.validate();
        const auto& eqs = j.at("equations");
        if (!eqs.is_array() || static_cast<int>(eqs.size()) != x.config.c)
            throw InputError("expected " + std::to_string(x.config.c) + " equations");
        for (int i = 0; i < x.config.c; ++i)
            x.equations.emplace_back(x.config.weights, x.config.degrees[i],
                                     polynomial_from_json(eqs[i], x.config.num_vars()));
        x.validate();
        return x;
    });
}

Json nodes_to_json(const RationalField& f, const std::vector<NodeRecord<RationalField>>& nodes) {
    Json j;
    j["field"] = f.name();
    Json arr = Json::array();
    for (const auto& n : nodes) {
        std::vector<Json> p, q;
        for (const auto& v : n.p) p.push_back(rational_to_json(v));
        for (const auto& v : n.q) q.push_back(rational_to_json(v));
        arr.push_back(node_json(p, q, n.jacobian_rank, n.hessian_rank));
    }
    j["nodes"] = arr;
    return j;
}

Json nodes_to_json(const FiniteField& f, const std::vector<NodeRecord<FiniteField>>& nodes) {
    Json j;
    j["field"] = f.name();
    if (f.degree() > 1) j["modulus"] = f.modulus();
    Json arr = Json::array();
    for (const auto& n : nodes) {
        std::vector<Json> p(n.p.begin(), n.p.end()), q(n.q.begin(), n.q.end());
        arr.push_back(node_json(p, q, n.jacobian_rank, n.hessian_rank));
    }
    j["nodes"] = arr;
    return j;
}

std::string nodes_field(const Json& j) {
    return guarded("nodes document", [&] { return j.at("field").get<std::string>(); });
}

std::vector<NodeRecord<RationalField>> rational_nodes_from_json(const Json& j) {
    return guarded("nodes document", [&] {
        if (nodes_field(j) != "q") throw InputError("nodes are not rational (field " + nodes_field(j) + ")");
        std::vector<NodeRecord<RationalField>> out;
        for (const auto& n : j.at("nodes")) {
            NodeRecord<RationalField> r;
            for (const auto& v : n.at("p")) r.p.push_back(rational_from_json(v));
            for (const auto& v : n.at("q")) r.q.push_back(rational_from_json(v));
            r.jacobian_rank = n.value("jacobian_rank", -1);
            r.hessian_rank = n.value("hessian_rank", -1);
            out.push_back(std::move(r));
        }
        return out;
    });
}

std::vector<NodeRecord<FiniteField>> finite_nodes_from_json(const Json& j, const FiniteField& f) {
    if (nodes_field(j) == "q") return reduce_nodes(f, rational_nodes_from_json(j));
    return guarded("nodes document", [&] {
        if (nodes_field(j) != f.name())
            throw InputError("nodes are over " + nodes_field(j) + ", requested " + f.name());
        std::vector<NodeRecord<FiniteField>> out;
        for (const auto& n : j.at("nodes")) {
            NodeRecord<FiniteField> r;
            for (const auto& v : n.at("p")) r.p.push_back(v.get<FiniteField::Elem>());
            for (const auto& v : n.at("q")) r.q.push_back(v.get<FiniteField::Elem>());
            for (auto v : r.p)
                if (v >= f.order()) throw InputError("coordinate out of range for " + f.name());
            r.jacobian_rank = n.value("jacobian_rank", -1);
            r.hessian_rank = n.value("hessian_rank", -1);
            out.push_back(std::move(r));
        }
        return out;
    });
}

namespace {

std::vector<std::vector<mpq_class>> rational_rows(const Json& j, const char* key) {
    return guarded(std::string(key) + " document", [&] {
        std::vector<std::vector<mpq_class>> out;
        for (const auto& row : j.at(key)) {
            std::vector<mpq_class> r;
            for (const auto& v : row) r.push_back(rational_from_json(v));
            if (!out.empty() && r.size() != out.front().size()) throw InputError("rows have different lengths");
            out.push_back(std::move(r));
        }
        return out;
    });
}

}  // namespace

std::vector<std::vector<mpq_class>> points_from_json(const Json& j) { return rational_rows(j, "points"); }
std::vector<std::vector<mpq_class>> basis_from_json(const Json& j) { return rational_rows(j, "basis"); }

Json table_to_json(const HilbertTable& t) {
    Json j;
    j["label"] = t.label();
    j["first_degree"] = t.first_degree();
    j["values"] = t.values();
    return j;
}

Json expansion_to_json(const macaulay::Expansion& e) {
    Json eps = Json::array();
    for (const auto& v : e.epsilons_descending()) eps.push_back(integer_to_json(v));
    return eps;
}

Json provenance_to_json(const ExampleProvenance& p) {
    Json j;
    j["family"] = p.family;
    if (!p.variant.empty()) j["variant"] = p.variant;
    j["seed"] = p.seed;
    j["effective_seed"] = p.effective_seed;
    j["retries"] = p.retries;
    j["degrees"] = p.degrees;
    j["node_locus"] = p.node_locus;
    Json basis = Json::array();
    for (const auto& row : p.locus_basis) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(rational_to_json(v));
        basis.push_back(r);
    }
    j["locus_basis"] = basis;
    j["expected_node_formula"] = p.expected_node_formula;
    j["expected_node_count"] = p.expected_node_count;
    j["expected_defect"] = p.expected_defect ? Json(*p.expected_defect) : Json(nullptr);
    j["hyperplane_section_contains_line"] = p.hyperplane_section_contains_line;
    j["induced_defect"] = p.induced_defect;
    j["first_equations_smooth"] = p.first_equations_smooth;
    j["first_equations_evidence"] = p.first_equations_evidence;
    Json scans = Json::array();
    for (const auto& s : p.scans) {
        Json r;
        r["field"] = s.field;
        r["domain"] = s.domain;
        r["points_examined"] = s.points_examined;
        r["singular_points"] = s.singular_points;
        r["matches_expectation"] = s.matches_expectation;
        scans.push_back(r);
    }
    j["scans"] = scans;
    return j;
}

ExampleProvenance provenance_from_json(const Json& j) {
    return guarded("provenance", [&] {
        ExampleProvenance p;
        p.family = j.at("family").get<std::string>();
        p.variant = j.value("variant", std::string());
        p.seed = j.at("seed").get<std::uint64_t>();
        p.effective_seed = j.at("effective_seed").get<std::uint64_t>();
        p.retries = j.at("retries").get<int>();
        p.degrees = j.at("degrees").get<std::vector<int>>();
        p.node_locus = j.at("node_locus").get<std::string>();
        p.locus_basis = rational_rows(j, "locus_basis");
        p.expected_node_formula = j.at("expected_node_formula").get<std::string>();
        p.expected_node_count = j.at("expected_node_count").get<std::int64_t>();
        if (!j.at("expected_defect").is_null()) p.expected_defect = j.at("expected_defect").get<std::int64_t>();
        p.hyperplane_section_contains_line = j.at("hyperplane_section_contains_line").get<bool>();
        p.induced_defect = j.at("induced_defect").get<bool>();
        p.first_equations_smooth = j.at("first_equations_smooth").get<bool>();
        p.first_equations_evidence = j.at("first_equations_evidence").get<std::string>();
        for (const auto& s : j.at("scans"))
            p.scans.push_back({s.at("field").get<std::string>(), s.at("domain").get<std::string>(),
                               s.at("points_examined").get<std::uint64_t>(), s.at("singular_points").get<std::uint64_t>(),
                               s.at("matches_expectation").get<bool>()});
        return p;
    });
}

Json check_to_json(const NamedCheck& c) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json report_to_json(const DefectReport& r, bool full) {
    Json j;
    j["field"] = r.field;
    j["node_count"] = r.core.node_count;
    j["delta"] = r.core.delta;
    j["bidegree"] = {r.core.bidegree_x, r.core.bidegree_y};
    j["bigraded_dimension"] = r.core.bigraded_dimension;
    j["evaluation_rank"] = r.core.evaluation_rank;
    j["w_degree"] = r.core.w_degree;
    j["h_w_at_w_degree"] = r.core.h_w;
    j["delta_tuple_path"] = r.core.delta_tuple;
    j["cynk_bound"] = r.cynk_bound;
    j["node_lower_bound"] = r.node_bound;
    Json checks = Json::array(), ineq = Json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    for (const auto& c : r.inequalities) ineq.push_back(check_to_json(c));
    j["checks"] = checks;
    j["inequalities"] = ineq;
    if (!r.v_family_error.empty()) j["v_family_error"] = r.v_family_error;
    if (!full) return j;
    j["h_W"] = table_to_json(r.h_w);
    j["h_W_prime"] = table_to_json(r.h_w_prime);
    j["w_chain_holds"] = r.chain_holds;
    j["hyperplane_redraws"] = r.hyperplane_redraws;
    if (r.v) {
        const auto& v = *r.v;
        Json vj;
        vj["socle_degree"] = v.top_degree;
        vj["h_V"] = table_to_json(v.h_v);
        Json f = Json::array(), p = Json::array();
        for (const auto& t : v.h_f) f.push_back(table_to_json(t));
        for (const auto& t : v.h_p) p.push_back(table_to_json(t));
        vj["h_F"] = f;
        vj["h_P"] = p;
        vj["contains_w_prime"] = v.contains_w_prime;
        vj["top_component_outside_v"] = v.top_component_nonzero;
        vj["top_component_outside_v_all_generators"] = v.all_generator_choices;
        vj["generator_changes_sampled"] = v.generator_changes_sampled;
        vj["generator_changes_passed"] = v.generator_changes_passed;
        vj["filtration_identity"] = v.filtration_identity;
        vj["filtration_conservation"] = v.conservation;
        vj["gorenstein_symmetric"] = v.gorenstein_symmetric;
        j["v_family"] = vj;
    }
    return j;
}

std::string tables_to_csv(const std::vector<HilbertTable>& tables) {
    std::ostringstream out;
    out << "degree";
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& t : tables) {
        out << ',' << (t.label().empty() ? "h" : t.label());
        if (t.empty()) continue;
        lo = any ? std::min(lo, t.first_degree()) : t.first_degree();
        hi = any ? std::max(hi, t.last_degree()) : t.last_degree();
        any = true;
    }
    out << '\n';
    for (int k = lo; any && k <= hi; ++k) {
        out << k;
        for (const auto& t : tables) {
            out << ',';
            if (t.contains(k)) out << t.at(k);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace nodal::io
