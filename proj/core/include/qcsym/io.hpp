// Copyright 2026 The qcsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCSYM_IO_HPP
#define QCSYM_IO_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcsym/qc_code.hpp"
#include "qcsym/qecc.hpp"
#include "qcsym/search.hpp"
#include "qcsym/weight.hpp"

namespace qcsym {

using Json = nlohmann::json;

/// F_q from its order; throws std::invalid_argument unless q is a prime power.
Field field_from_q(std::uint64_t q);
/// Inverse of field_from_q for fields built with the default modulus.
std::uint64_t field_q(const Field& f);

/// Parsed code description: one or two generator pairs, optionally factored.
struct CodeDescription {
    Field field = Field::prime(2);
    std::size_t n = 0;
    std::vector<std::pair<Poly, Poly>> generators;
    std::optional<OneGenFactors> onegen_factors;  // g1, r1, g2, r2 (h_i derived)
    std::optional<TwoGenFactors> twogen_factors;

    bool is_two_generator() const { return generators.size() == 2; }
    OneGenQc onegen() const;
    TwoGenQc twogen() const;
    Matrix generator_matrix() const;
};

// {"q":int, "n":int, "generators":[{"a":poly,"b":poly}, ...], "factored":{...}}
// factored is {"g1","r1","g2","r2"} for one generator and {"g":[4],"t":[4]} for two.
CodeDescription code_from_json(const Json& j);
Json to_json(const CodeDescription& c);

// {"q", "rows", "cols", "entries": [[...], ...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"p1","q1","p2","q2"} polynomials; n and q come from the code.
Json to_json(const ParityBlocks& h);
ParityBlocks parity_blocks_from_json(const Json& j, std::size_t n, const Field& f);

Json to_json(const SympVector& v);
// {"minimum", "witness": {"x","y"}, "method", "exhaustive", "excluded_subcode_applied", "lower_bound"}
Json to_json(const WeightReport& r);
WeightReport weight_report_from_json(const Json& j, const Field& f);

// {"q","n","k","d","direction","exhaustive","provenance":{"classical":[2n,k_c,d_H|null],"generators":{...}}}
Json to_json(const QuantumParams& p, const Json& generators = Json::object());
QuantumParams quantum_params_from_json(const Json& j);

Json to_json(const SearchConfig& c);
SearchConfig search_config_from_json(const Json& j);
Json to_json(const SearchHit& h, std::size_t n);
/// One hit per line followed by {"summary": {...}}. Wall-clock timings are left out.
std::string search_record_jsonl(const SearchRecord& r);
Json to_json(const SearchTimings& t);

Json to_json(const Factor& f);

}  // namespace qcsym

#endif  // QCSYM_IO_HPP
