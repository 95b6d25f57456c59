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


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(NODAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

const char* kCusp = R"({"c": 2, "n": 3, "degrees": [2, 3], "weights": [1, 1, 1, 1, 1, 1], "equations": [
  [[[1, 1], [1, 0, 0, 0, 0, 1]], [[1, 1], [0, 1, 0, 0, 1, 0]], [[1, 1], [0, 0, 1, 1, 0, 0]]],
  [[[1, 1], [2, 0, 0, 0, 0, 1]], [[1, 1], [1, 1, 0, 0, 1, 0]], [[1, 1], [1, 0, 1, 1, 0, 0]],
   [[-1, 1], [1, 2, 0, 0, 0, 0]], [[-1, 1], [1, 0, 2, 0, 0, 0]], [[-1, 1], [1, 0, 0, 2, 0, 0]],
   [[1, 1], [0, 0, 0, 0, 3, 0]]]]})";

}  // namespace

TEST_CASE("macaulay subcommand") {
    const auto r = run("macaulay growth --c 5 --d 3");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["growth_up"] == 6);
    CHECK(j.contains("manifest"));
    CHECK_FALSE(j["manifest"].contains("wall_clock_seconds"));
    CHECK(run("--timing macaulay growth --c 5 --d 3").out.find("wall_clock_seconds") != std::string::npos);
}

TEST_CASE("exit statuses") {
    CHECK(run("verify-bound --family plane --degrees 2,2 --seed 1").status == 0);
    CHECK(run("defect --ci does_not_exist.json").status == 2);
    write("cli_bad.json", "{\"c\": 2,\n  oops\n}");
    CHECK(run("defect --ci cli_bad.json").status == 2);
    CHECK(run("macaulay growth --c 5").status == 2);
    write("cli_cusp.json", kCusp);
    CHECK(run("--field fp:7 find-nodes --input cli_cusp.json --ext 1").status == 1);
    // An exhaustive scan of P^5 over F_10007 is far beyond the default budget.
    CHECK(run("--field fp:10007 find-nodes --input cli_cusp.json --ext 1").status == 2);
    CHECK(run("--field fp:9 find-nodes --input cli_cusp.json --ext 1").status == 2);
}

TEST_CASE("generate and defect round trip") {
    REQUIRE(run("--seed 3 generate --family plane --degrees 2,3 --out cli_ci.json cli_nodes.json cli_prov.json").status == 0);
    const auto r = run("defect --ci cli_ci.json --nodes cli_nodes.json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["delta"] == 1);
    CHECK(j["node_count"] == 7);
    CHECK(j["field_agreement"] == true);
}

TEST_CASE("output is deterministic") {
    const auto a = run("--seed 4 report");
    const auto b = run("--seed 4 --jobs 3 report");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    REQUIRE(run("--seed 2 -o cli_g1.json generate --family induced --degrees 2,3 --out cli_a1 cli_a2 cli_a3").status == 0);
    REQUIRE(run("--seed 2 -o cli_g2.json generate --family induced --degrees 2,3 --out cli_b1 cli_b2 cli_b3").status == 0);
    CHECK(slurp("cli_a1") == slurp("cli_b1"));
    CHECK(slurp("cli_a2") == slurp("cli_b2"));
}
