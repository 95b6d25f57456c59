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


// nodal-ci: command-line front end. Every JSON document written to stdout (or
// --output) carries a "manifest" describing the run that produced it.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nodal/cayley.hpp"
#include "nodal/defect.hpp"
#include "nodal/generators.hpp"
#include "nodal/hilbert.hpp"
#include "nodal/io.hpp"
#include "nodal/macaulay.hpp"
#include "nodal/pipeline.hpp"

namespace {

using nodal::io::InputError;
using nodal::io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Globals {
    unsigned jobs = 1;
    std::string format = "json";
    std::string field;
    std::uint64_t seed = 1;
    bool timing = false;
    std::string output;
};

// Result of one subcommand: the document to print and the names of failed checks.
struct Outcome {
    Json doc;
    std::vector<std::string> failed;
    std::string csv;  // used with --format csv when non-empty
};

struct Manifest {
    std::string command;
    Json config = Json::object();
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> fields;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["config"] = config;
        j["seeds"] = seeds;
        j["fields"] = fields;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["version"] = NODAL_VERSION;
        return j;
    }
};

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

std::uint32_t second_prime() {
    const std::string s = env_or("NODAL_SECOND_PRIME", "10009");
    try {
        const unsigned long v = std::stoul(s);
        if (!nodal::is_prime(v) || v < 3 || v > (1ul << 31)) throw std::invalid_argument(s);
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        throw InputError("NODAL_SECOND_PRIME must be an odd prime, got '" + s + "'");
    }
}

std::vector<int> parse_degrees(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size() || v < 1) throw std::invalid_argument(part);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("degrees must be a comma-separated list of positive integers, got '" + s + "'");
        }
    }
    if (out.empty()) throw InputError("empty degree list");
    return out;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int k = std::stoi(s);
            return {k, k};
        }
        const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
        if (lo < 0 || hi < lo) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw InputError("degree range must look like A..B, got '" + s + "'");
    }
}

mpz_class parse_integer(const std::string& s, const std::string& what) {
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw InputError(what + " must be an integer, got '" + s + "'");
    return v;
}

// --------------------------------------------------------------- macaulay

Outcome run_macaulay(const std::string& mode, const std::string& c_text, long d, std::optional<long> k,
                     Manifest& m) {
    namespace mac = nodal::macaulay;
    const mpz_class c = parse_integer(c_text, "--c");
    if (d <= 0) throw InputError("--d must be positive");
    if (c < 0) throw InputError("--c must be non-negative");
    m.config["mode"] = mode;
    m.config["c"] = c_text;
    m.config["d"] = d;
    if (k) m.config["k"] = *k;

    Outcome out;
    const auto e = mac::expand(c, d);
    out.doc["c"] = nodal::io::integer_to_json(c);
    out.doc["d"] = d;
    out.doc["epsilons"] = nodal::io::expansion_to_json(e);
    out.doc["growth_up"] = nodal::io::integer_to_json(mac::growth_up(c, d));
    out.doc["shrink"] = nodal::io::integer_to_json(mac::shrink(c, d));
    out.doc["down"] = d >= 2 ? nodal::io::integer_to_json(mac::down(c, d)) : Json(nullptr);
    if (mode == "bound") {
        if (!k) throw InputError("macaulay bound needs --k");
        try {
            out.doc["k"] = *k;
            out.doc["low_degree_bound"] = nodal::io::integer_to_json(mac::low_degree_bound(c, d, *k));
        } catch (const mac::OutsideLowDegreeRange& err) {
            throw InputError(err.what());
        } catch (const std::invalid_argument& err) {
            throw InputError(err.what());
        }
    }
    if (mode == "expand") {
        Json terms = Json::array();
        const auto eps = e.epsilons_descending();
        for (std::size_t i = 0; i < eps.size(); ++i) {
            const long idx = d - static_cast<long>(i);
            terms.push_back({{"top", nodal::io::integer_to_json(eps[i] + idx)}, {"bottom", idx}});
        }
        out.doc["binomials"] = terms;
    }
    return out;
}

// ---------------------------------------------------------------- hilbert

template <nodal::Field F>
nodal::HilbertTable points_table(const F& f, const std::vector<std::vector<mpq_class>>& rows,
                                 const std::vector<int>& weights, int lo, int hi) {
    std::vector<std::vector<typename F::Elem>> pts;
    for (const auto& r : rows) {
        std::vector<typename F::Elem> p;
        for (const auto& v : r) p.push_back(f.from_rational(v));
        pts.push_back(std::move(p));
    }
    const int nv = static_cast<int>(weights.size());
    const nodal::PointSet<F> set(f, nv, std::move(pts));
    auto t = nodal::hilbert_table_of_points(f, set, std::span<const int>(weights), lo, hi);
    return nodal::HilbertTable("h", t.first_degree(), t.values());
}

Outcome run_hilbert(const Globals& g, const std::string& path, const std::string& degrees, Manifest& m) {
    const Json doc = nodal::io::read_json_file(path);
    m.inputs.push_back(path);
    const auto rows = nodal::io::points_from_json(doc);
    if (rows.empty()) throw InputError(path + ": no points");
    std::vector<int> weights(rows.front().size(), 1);
    if (doc.contains("weights")) {
        try {
            weights = doc.at("weights").get<std::vector<int>>();
        } catch (const std::exception& e) {
            throw InputError(path + ": invalid weights: " + e.what());
        }
    }
    for (const auto& r : rows)
        if (r.size() != weights.size()) throw InputError(path + ": points and weights differ in length");
    const auto [lo, hi] = parse_range(degrees);
    m.config["degrees"] = degrees;
    m.fields.push_back(g.field);

    nodal::HilbertTable t;
    try {
        if (g.field == "q")
            t = points_table(nodal::RationalField{}, rows, weights, lo, hi);
        else
            t = points_table(nodal::FiniteField::parse(g.field), rows, weights, lo, hi);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Outcome out;
    out.doc["field"] = g.field;
    out.doc["points"] = rows.size();
    out.doc["table"] = nodal::io::table_to_json(t);
    out.csv = nodal::io::tables_to_csv({t});
    return out;
}

// ------------------------------------------------------------- find-nodes

Outcome run_find_nodes(const Globals& g, const std::string& input, int ext, const std::string& plane, Manifest& m) {
    const auto x = nodal::io::ci_from_json(nodal::io::read_json_file(input));
    m.inputs.push_back(input);
    const nodal::FiniteField base = nodal::FiniteField::parse(g.field);
    if (!base.is_prime_field()) throw InputError("find-nodes scans extensions of a prime field; pass --field fp:<p>");
    if (ext < 1) throw InputError("--ext must be positive");
    nodal::SearchDomain domain = nodal::SearchDomain::ambient();
    if (!plane.empty()) {
        domain = nodal::SearchDomain::subspace(nodal::io::basis_from_json(nodal::io::read_json_file(plane)));
        m.inputs.push_back(plane);
        for (const auto& r : domain.basis)
            if (static_cast<int>(r.size()) != x.num_vars()) throw InputError(plane + ": basis rows have the wrong length");
    }
    m.config["ext"] = ext;
    m.config["domain"] = plane.empty() ? "ambient" : "subspace";
    m.fields.push_back(g.field);

    const nodal::ScanOptions opts{nodal::ScanOptions{}.budget, g.jobs};
    const auto scans = nodal::scan_extensions(base.characteristic(), ext, x, domain, opts);

    Outcome out;
    Json scan_list = Json::array(), groups = Json::array();
    std::uint64_t total_orbits = 0;
    for (const auto& s : scans) {
        scan_list.push_back({{"degree", s.degree},
                             {"points_examined", s.points_examined},
                             {"rational_points", s.rational_points},
                             {"new_points", s.new_points},
                             {"orbits", s.orbits}});
        total_orbits += s.orbits;
        if (s.points.empty()) continue;
        const auto f = nodal::FiniteField::extension(base.characteristic(), s.degree);
        std::vector<nodal::NodeRecord<nodal::FiniteField>> records;
        Json failures = Json::array();
        std::size_t uncertified = 0;
        for (const auto& p : s.points) {
            try {
                auto rec = nodal::lift_node(f, x, std::span<const nodal::FiniteField::Elem>(p));
                if (!nodal::certify_node(f, x, rec)) ++uncertified;
                records.push_back(std::move(rec));
            } catch (const nodal::LiftError& e) {
                failures.push_back({{"p", p}, {"fiber_dimension", e.fiber_dimension()}, {"error", e.what()}});
            } catch (const nodal::PreconditionError& e) {
                failures.push_back({{"p", p}, {"error", e.what()}});
            }
        }
        Json group = nodal::io::nodes_to_json(f, records);
        group["degree"] = s.degree;
        group["lift_failures"] = failures;
        group["uncertified"] = uncertified;
        groups.push_back(std::move(group));
        if (uncertified > 0 || !failures.empty())
            out.failed.push_back("node_certification[" + f.name() + "]");
    }
    out.doc["field"] = base.name();
    out.doc["scans"] = scan_list;
    out.doc["orbits"] = total_orbits;
    out.doc["nodes"] = groups;
    return out;
}

// ----------------------------------------------------------------- defect

void collect_failures(const nodal::DefectReport& r, std::vector<std::string>& failed) {
    for (const auto& c : r.checks)
        if (!c.passed) failed.push_back(r.field + ":" + c.name);
}

Outcome run_defect(const Globals& g, const std::string& ci_path, const std::string& nodes_path, bool full,
                   Manifest& m) {
    const auto x = nodal::io::ci_from_json(nodal::io::read_json_file(ci_path));
    m.inputs.push_back(ci_path);
    const Json nodes_doc = nodal::io::read_json_file(nodes_path);
    m.inputs.push_back(nodes_path);
    m.config["full_report"] = full;

    Outcome out;
    std::vector<nodal::DefectReport> reports;
    const std::string stored = nodal::io::nodes_field(nodes_doc);
    try {
        if (stored == "q") {
            const auto nodes = nodal::io::rational_nodes_from_json(nodes_doc);
            if (g.field == "q") {
                reports.push_back(nodal::full_defect_report(nodal::RationalField{}, x, nodes, g.seed));
            } else {
                const auto f = nodal::FiniteField::parse(g.field);
                reports.push_back(nodal::full_defect_report(f, x, nodal::reduce_nodes(f, nodes), g.seed));
                const auto f2 = nodal::FiniteField::prime(second_prime());
                if (!(f2 == f))
                    reports.push_back(nodal::full_defect_report(f2, x, nodal::reduce_nodes(f2, nodes), g.seed));
            }
        } else {
            const auto f = nodal::FiniteField::parse(stored);
            reports.push_back(
                nodal::full_defect_report(f, x, nodal::io::finite_nodes_from_json(nodes_doc, f), g.seed));
        }
    } catch (const nodal::UncertifiedNode& e) {
        throw InputError(e.what());
    } catch (const nodal::UnsupportedDimension& e) {
        throw InputError(e.what());
    } catch (const nodal::PreconditionError& e) {
        throw InputError(e.what());
    } catch (const nodal::FieldError& e) {
        throw InputError(e.what());
    }
    Json list = Json::array();
    bool agree = true;
    for (const auto& r : reports) {
        m.fields.push_back(r.field);
        list.push_back(nodal::io::report_to_json(r, full));
        collect_failures(r, out.failed);
        agree = agree && r.same_values(reports.front());
    }
    if (!agree) out.failed.push_back("field_agreement");
    out.doc["reports"] = list;
    out.doc["field_agreement"] = agree;
    out.doc["node_count"] = reports.front().core.node_count;
    out.doc["delta"] = reports.front().core.delta;
    return out;
}

// --------------------------------------------------------------- generate

nodal::GeneratedExample generate_family(const std::string& family, const std::vector<int>& degrees,
                                        std::uint64_t seed, const nodal::GeneratorOptions& opt) {
    if (family == "plane") return nodal::plane_containing_ci(degrees, seed, opt);
    if (family == "induced") {
        if (degrees.size() != 2 || degrees[0] != 2) throw InputError("the induced family takes --degrees 2,<d>");
        return nodal::induced_defect_example(degrees[1], seed, opt);
    }
    if (family == "smooth") return nodal::smooth_random_ci(degrees, seed, opt);
    throw InputError("unknown family '" + family + "' (plane, induced, smooth)");
}

void check_family_degrees(const std::string& family, const std::vector<int>& degrees) {
    if (family != "smooth" && (degrees.size() != 2 || degrees[0] > degrees[1]))
        throw InputError("family '" + family + "' needs two ascending degrees");
    if (family == "smooth" && !std::is_sorted(degrees.begin(), degrees.end()))
        throw InputError("degrees must be ascending");
}

Outcome run_generate(const Globals& g, const std::string& family, const std::string& degree_text,
                     const std::vector<std::string>& outs, Manifest& m) {
    if (outs.size() != 3) throw InputError("--out takes three paths: ci.json nodes.json provenance.json");
    const auto degrees = parse_degrees(degree_text);
    check_family_degrees(family, degrees);
    m.config["family"] = family;
    m.config["degrees"] = degrees;
    m.fields = {"q"};
    nodal::GeneratorOptions opt;
    opt.scan.jobs = g.jobs;
    for (auto p : opt.scan_primes) m.fields.push_back("fp:" + std::to_string(p));
    const auto ex = generate_family(family, degrees, g.seed, opt);
    for (const auto& o : outs) m.outputs.push_back(o);

    const Json manifest = m.to_json();
    nodal::io::write_json_file(outs[0], nodal::io::ci_to_json(ex.ci));
    nodal::io::write_json_file(outs[1], nodal::io::nodes_to_json(nodal::RationalField{}, ex.nodes));
    Json prov = nodal::io::provenance_to_json(ex.provenance);
    prov["manifest"] = manifest;
    nodal::io::write_json_file(outs[2], prov);

    Outcome out;
    out.doc["family"] = ex.provenance.family;
    out.doc["degrees"] = degrees;
    out.doc["node_count"] = ex.nodes.size();
    out.doc["expected_node_count"] = ex.provenance.expected_node_count;
    out.doc["effective_seed"] = ex.provenance.effective_seed;
    out.doc["retries"] = ex.provenance.retries;
    return out;
}

// ----------------------------------------------------------- verify-bound

nodal::PipelineOptions pipeline_options(const Globals& g, bool exact, Manifest& m) {
    nodal::PipelineOptions opt;
    opt.seed = g.seed;
    opt.rank_primes.clear();
    if (g.field == "q") {
        opt.exact_rational = true;
    } else {
        const auto f = nodal::FiniteField::parse(g.field);
        if (!f.is_prime_field()) throw InputError("defect ranks need a prime field or q");
        opt.rank_primes.push_back(f.characteristic());
        const auto p2 = second_prime();
        if (p2 != f.characteristic()) opt.rank_primes.push_back(p2);
        opt.exact_rational = exact;
    }
    for (auto p : opt.rank_primes) m.fields.push_back("fp:" + std::to_string(p));
    if (opt.exact_rational) m.fields.push_back("q");
    return opt;
}

Json verification_json(const nodal::ExampleVerification& v, bool full) {
    const auto& r = v.reports.front();
    Json j;
    j["family"] = v.example.provenance.family;
    if (!v.example.provenance.variant.empty()) j["variant"] = v.example.provenance.variant;
    j["degrees"] = v.example.provenance.degrees;
    j["effective_seed"] = v.example.provenance.effective_seed;
    j["nodes"] = v.example.nodes.size();
    j["delta"] = r.core.delta;
    j["node_lower_bound"] = r.node_bound;
    j["cynk_bound"] = r.cynk_bound;
    j["passed"] = v.passed();
    j["failures"] = v.failures();
    Json exp = Json::array();
    for (const auto& c : v.expectations) exp.push_back(nodal::io::check_to_json(c));
    j["expectations"] = exp;
    if (full) {
        Json reports = Json::array();
        for (const auto& rep : v.reports) reports.push_back(nodal::io::report_to_json(rep, true));
        j["reports"] = reports;
        j["provenance"] = nodal::io::provenance_to_json(v.example.provenance);
    }
    return j;
}

std::vector<nodal::HilbertTable> report_tables(const nodal::DefectReport& r) {
    std::vector<nodal::HilbertTable> t{r.h_w, r.h_w_prime};
    if (r.v) {
        t.push_back(r.v->h_v);
        for (const auto& x : r.v->h_f) t.push_back(x);
        for (const auto& x : r.v->h_p) t.push_back(x);
    }
    return t;
}

Outcome run_verify(const Globals& g, const std::string& family, const std::string& degree_text, bool exact,
                   Manifest& m) {
    const auto degrees = parse_degrees(degree_text);
    check_family_degrees(family, degrees);
    m.config["family"] = family;
    m.config["degrees"] = degrees;
    const auto opt = pipeline_options(g, exact, m);
    nodal::GeneratorOptions gen;
    gen.scan.jobs = g.jobs;
    const auto v = nodal::verify_example(generate_family(family, degrees, g.seed, gen), opt);
    Outcome out;
    out.doc = verification_json(v, true);
    out.failed = v.failures();
    out.csv = nodal::io::tables_to_csv(report_tables(v.reports.front()));
    return out;
}

// ----------------------------------------------------------------- report

Outcome run_report(const Globals& g, bool exact, bool full, Manifest& m) {
    const auto opt = pipeline_options(g, exact, m);
    nodal::GeneratorOptions gen;
    gen.scan.jobs = g.jobs;
    struct Item {
        std::string family;
        std::vector<int> degrees;
    };
    const std::vector<Item> items{{"plane", {2, 2}},   {"plane", {2, 3}},   {"plane", {3, 3}},
                                  {"induced", {2, 2}}, {"induced", {2, 3}}, {"induced", {2, 4}},
                                  {"smooth", {2, 2}},  {"smooth", {2, 3}}};
    m.config["examples"] = Json::array();
    Outcome out;
    Json list = Json::array();
    std::string csv;
    auto add = [&](const nodal::ExampleVerification& v, const std::string& tag) {
        list.push_back(verification_json(v, full));
        for (const auto& f : v.failures()) out.failed.push_back(tag + ":" + f);
        const auto& r = v.reports.front();
        std::ostringstream row;
        row << tag << ',' << v.example.nodes.size() << ',' << r.core.delta << ',' << r.node_bound << ','
            << r.cynk_bound << ',' << (v.passed() ? "pass" : "fail") << '\n';
        csv += row.str();
    };
    for (const auto& it : items) {
        std::string tag = it.family + "(" + std::to_string(it.degrees[0]) + "," + std::to_string(it.degrees[1]) + ")";
        m.config["examples"].push_back(tag);
        add(nodal::verify_example(generate_family(it.family, it.degrees, g.seed, gen), opt), tag);
    }
    for (auto& ex : nodal::quadric_pair_cases(g.seed, gen)) {
        const std::string tag = "quadric-pair/" + ex.provenance.variant;
        m.config["examples"].push_back(tag);
        add(nodal::verify_example(std::move(ex), opt), tag);
    }
    out.doc["examples"] = list;
    out.doc["passed"] = out.failed.empty();
    out.csv = "example,nodes,delta,node_lower_bound,cynk_bound,status\n" + csv;
    return out;
}

int emit(const Globals& g, const Manifest& m, Outcome out, double seconds) {
    Json manifest = m.to_json();
    if (g.timing) manifest["wall_clock_seconds"] = seconds;
    std::string text;
    if (g.format == "csv" && !out.csv.empty()) {
        text = out.csv;
    } else {
        out.doc["manifest"] = manifest;
        text = nodal::io::dump(out.doc);
    }
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.output, std::ios::binary);
        if (!f) throw InputError("cannot write " + g.output);
        f << text;
    }
    if (out.failed.empty()) return kOk;
    for (const auto& name : out.failed) std::cerr << "failed check: " << name << '\n';
    return kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nodal complete intersections: Hilbert functions, nodes, defect and node bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(NODAL_VERSION));

    Globals g;
    g.field = env_or("NODAL_FIELD", "fp:10007");
    app.add_option("--jobs", g.jobs, "Worker threads for scans")->check(CLI::Range(1u, 256u));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--field", g.field, "Field backend: q or fp:<p>[^<k>] (env NODAL_FIELD)");
    app.add_option("--seed", g.seed, "Seed for every random draw");
    app.add_flag("--timing", g.timing, "Record wall-clock time in the manifest");
    app.add_option("-o,--output", g.output, "Write the document to a file instead of stdout");

    auto* mac = app.add_subcommand("macaulay", "Macaulay expansions and growth bounds");
    std::string mac_mode, mac_c;
    long mac_d = 0;
    std::optional<long> mac_k;
    mac->add_option("mode", mac_mode, "expand | growth | bound")->required()->check(CLI::IsMember({"expand", "growth", "bound"}));
    mac->add_option("--c", mac_c, "Value c")->required();
    mac->add_option("--d", mac_d, "Degree d")->required();
    mac->add_option("--k", mac_k, "Degree k for the low-degree bound");

    auto* hil = app.add_subcommand("hilbert", "Hilbert function of a finite point set");
    std::string hil_points, hil_degrees = "0..5";
    hil->add_option("--points", hil_points, "JSON file {\"points\": [...], \"weights\": [...]}")->required();
    hil->add_option("--degrees", hil_degrees, "Degree range A..B");

    auto* fnd = app.add_subcommand("find-nodes", "Scan for singular points over F_p and its extensions");
    std::string fnd_input, fnd_plane;
    int fnd_ext = 4;
    fnd->add_option("--input", fnd_input, "Complete intersection JSON")->required();
    fnd->add_option("--ext", fnd_ext, "Largest extension degree");
    fnd->add_option("--on-plane", fnd_plane, "JSON {\"basis\": [...]} restricting the scan to a linear subspace");

    auto* dfc = app.add_subcommand("defect", "Defect of a nodal complete intersection");
    std::string dfc_ci, dfc_nodes;
    bool dfc_full = false;
    dfc->add_option("--ci", dfc_ci, "Complete intersection JSON")->required();
    dfc->add_option("--nodes", dfc_nodes, "Nodes JSON");
    dfc->add_flag("--full-report", dfc_full, "Include W and V tables");

    auto* gen = app.add_subcommand("generate", "Generate an example family member");
    std::string gen_family, gen_degrees;
    std::vector<std::string> gen_out;
    gen->add_option("--family", gen_family, "plane | induced | smooth")->required();
    gen->add_option("--degrees", gen_degrees, "Comma-separated degrees")->required();
    gen->add_option("--out", gen_out, "ci.json nodes.json provenance.json")->required()->expected(3);

    auto* ver = app.add_subcommand("verify-bound", "Generate an example and verify every stated expectation");
    std::string ver_family, ver_degrees;
    bool ver_exact = false;
    ver->add_option("--family", ver_family, "plane | induced | smooth")->required();
    ver->add_option("--degrees", ver_degrees, "Comma-separated degrees")->required();
    ver->add_flag("--exact", ver_exact, "Also compute every rank over Q");

    auto* rep = app.add_subcommand("report", "Verify the standard example set");
    bool rep_exact = false, rep_full = false;
    rep->add_flag("--exact", rep_exact, "Also compute every rank over Q");
    rep->add_flag("--full", rep_full, "Include complete defect reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    Manifest m;
    m.seeds = {g.seed};
    m.config["format"] = g.format;
    if (!g.output.empty()) m.outputs.push_back(g.output);
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome out;
        if (*mac) {
            m.command = "macaulay";
            out = run_macaulay(mac_mode, mac_c, mac_d, mac_k, m);
        } else if (*hil) {
            m.command = "hilbert";
            out = run_hilbert(g, hil_points, hil_degrees, m);
        } else if (*fnd) {
            m.command = "find-nodes";
            out = run_find_nodes(g, fnd_input, fnd_ext, fnd_plane, m);
        } else if (*dfc) {
            m.command = "defect";
            if (dfc_nodes.empty()) {
                nodal::io::read_json_file(dfc_ci);
                throw InputError("defect needs --nodes");
            }
            out = run_defect(g, dfc_ci, dfc_nodes, dfc_full, m);
        } else if (*gen) {
            m.command = "generate";
            out = run_generate(g, gen_family, gen_degrees, gen_out, m);
        } else if (*ver) {
            m.command = "verify-bound";
            out = run_verify(g, ver_family, ver_degrees, ver_exact, m);
        } else {
            m.command = "report";
            out = run_report(g, rep_exact, rep_full, m);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return emit(g, m, std::move(out), secs);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const nodal::BudgetExceeded& e) {
        std::cerr << "input error: budget exceeded, scan requires " << e.required() << " points (budget " << e.budget()
                  << ")\n";
        return kInputError;
    } catch (const nodal::FieldError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const nodal::GenerationFailed& e) {
        std::cerr << "failed check: generation: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
