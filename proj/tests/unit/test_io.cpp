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


#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "nodal/io.hpp"

using namespace nodal;
using namespace nodal::io;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("nodal_io_" + name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("integers and rationals") {
    CHECK(integer_to_json(mpz_class(42)) == Json(42));
    const mpz_class big("123456789012345678901234567890");
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json(-7)) == -7);
    const mpq_class r(-3, 4);
    CHECK(rational_from_json(rational_to_json(r)) == r);
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json::array({1, 0})), InputError);
    CHECK_THROWS_AS(integer_from_json(Json("12x")), InputError);
}

TEST_CASE("polynomial and complete intersection round trips") {
    const auto ex = plane_containing_ci({2, 3}, 1);
    for (const auto& eq : ex.ci.equations)
        CHECK(polynomial_from_json(polynomial_to_json(eq.poly()), ex.ci.num_vars()) == eq.poly());
    const auto j = ci_to_json(ex.ci);
    CHECK(ci_from_json(j) == ex.ci);
    CHECK(ci_from_json(parse_json_text(dump(j), "mem")) == ex.ci);

    const auto nodes = rational_nodes_from_json(nodes_to_json(RationalField{}, ex.nodes));
    REQUIRE(nodes.size() == ex.nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        CHECK(nodes[i].p == ex.nodes[i].p);
        CHECK(nodes[i].q == ex.nodes[i].q);
    }
    const auto f = FiniteField::prime(10007);
    const auto reduced = reduce_nodes(f, ex.nodes);
    const auto nj = nodes_to_json(f, reduced);
    CHECK(nodes_field(nj) == "fp:10007");
    const auto back = finite_nodes_from_json(nj, f);
    REQUIRE(back.size() == reduced.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i].p == reduced[i].p);
    CHECK_THROWS_AS(rational_nodes_from_json(nj), InputError);

    CHECK(provenance_from_json(provenance_to_json(ex.provenance)) == ex.provenance);
}

TEST_CASE("malformed input") {
    const auto bad = temp_file("bad.json", "{\n  \"a\": [1, 2,\n}\n");
    try {
        read_json_file(bad);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find(bad.string() + ":3:") != std::string::npos);
    }
    CHECK_THROWS_AS(read_json_file(std::filesystem::temp_directory_path() / "nodal_io_missing.json"), InputError);
    CHECK_THROWS_AS(ci_from_json(Json::object()), InputError);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse("[[[1,1],[1,2]]]"), 3), InputError);
}

TEST_CASE("canonical output") {
    const Json j = {{"b", 1}, {"a", {1, 2}}};
    const auto text = dump(j);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"a\"") < text.find("\"b\""));
    const auto path = std::filesystem::temp_directory_path() / "nodal_io_out.json";
    write_json_file(path, j);
    CHECK(read_json_file(path) == j);
    const HilbertTable a("h_a", 0, {1, 2, 3}), b("h_b", 1, {4});
    const auto csv = tables_to_csv({a, b});
    CHECK(csv.substr(0, csv.find('\n')) == "degree,h_a,h_b");
}
