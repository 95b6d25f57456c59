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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nodal/cayley.hpp"
#include "nodal/defect.hpp"
#include "nodal/generators.hpp"
#include "nodal/hilbert_table.hpp"
#include "nodal/macaulay.hpp"
#include "nodal/polyring.hpp"

namespace nodal::io {

using Json = nlohmann::json;  // object keys are kept sorted

/// Malformed or missing input. Maps to exit status 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Reads and parses a JSON file; parse errors carry "path:line:column".
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& origin);
void write_json_file(const std::filesystem::path& path, const Json& j);
/// Canonical text: 2-space indentation, sorted keys, trailing newline.
std::string dump(const Json& j);

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const mpz_class& v);
mpz_class integer_from_json(const Json& j);
/// [numerator, denominator]; plain integers are accepted on input.
Json rational_to_json(const mpq_class& v);
mpq_class rational_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
/// Terms [[num, den], [e_0, ...]]; num_vars fixes the exponent length.
Polynomial polynomial_from_json(const Json& j, int num_vars);

Json ci_to_json(const CompleteIntersection& x);
CompleteIntersection ci_from_json(const Json& j);

Json nodes_to_json(const RationalField& f, const std::vector<NodeRecord<RationalField>>& nodes);
Json nodes_to_json(const FiniteField& f, const std::vector<NodeRecord<FiniteField>>& nodes);
/// Requires "field": "q".
std::vector<NodeRecord<RationalField>> rational_nodes_from_json(const Json& j);
/// Field name stored in a nodes document.
std::string nodes_field(const Json& j);
std::vector<NodeRecord<FiniteField>> finite_nodes_from_json(const Json& j, const FiniteField& f);

/// {"points": [[...], ...]} with rational entries.
std::vector<std::vector<mpq_class>> points_from_json(const Json& j);
/// {"basis": [[...], ...]}.
std::vector<std::vector<mpq_class>> basis_from_json(const Json& j);

Json table_to_json(const HilbertTable& t);
Json expansion_to_json(const macaulay::Expansion& e);
Json provenance_to_json(const ExampleProvenance& p);
ExampleProvenance provenance_from_json(const Json& j);
Json check_to_json(const NamedCheck& c);
Json report_to_json(const DefectReport& r, bool full);

/// CSV with one row per degree and one column per table.
std::string tables_to_csv(const std::vector<HilbertTable>& tables);

}  // namespace nodal::io
