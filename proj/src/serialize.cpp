/*
   Copyright 2026 The tropkex Authors

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

#include <tropkex/serialize.hpp>

#include <tropkex/errors.hpp>

namespace tropkex {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw FormatError(std::string("expected a JSON object holding '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
    return *it;
}

template <typename T>
T integer_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw FormatError(std::string("field '") + name + "' must be an integer");
    return v.get<T>();
}

}  // namespace

Json matrix_to_json(const TropicalMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"k", m.rows()}, {"entries", std::move(rows)}};
}

TropicalMatrix matrix_from_json(const Json& j) {
    const auto k = integer_field<std::int64_t>(j, "k");
    if (k < 1) throw FormatError("matrix: k must be >= 1");
    const Json& rows = field(j, "entries");
    if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != k) {
        throw FormatError("matrix: 'entries' must hold exactly k rows");
    }
    TropicalMatrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<std::int64_t>(row.size()) != k) {
            throw FormatError("matrix: row " + std::to_string(i) + " must hold exactly k entries");
        }
        for (Eigen::Index c = 0; c < k; ++c) {
            const Json& e = row[static_cast<std::size_t>(c)];
            if (!e.is_string()) throw FormatError("matrix: entries must be decimal strings");
            try {
                m(i, c) = parse_bigint(e.get<std::string>());
            } catch (const std::invalid_argument& ex) {
                throw FormatError(std::string("matrix: ") + ex.what());
            }
        }
    }
    return m;
}

Json pair_to_json(const SemigroupPair& p) {
    return Json{{"first", matrix_to_json(p.first)}, {"second", matrix_to_json(p.second)}};
}

SemigroupPair pair_from_json(const Json& j) {
    SemigroupPair p{matrix_from_json(field(j, "first")), matrix_from_json(field(j, "second"))};
    if (p.first.rows() != p.second.rows()) throw FormatError("pair: component dimensions differ");
    return p;
}

Json params_to_json(const ProtocolParams& p) {
    return Json{{"k", p.k},
                {"N", p.N},
                {"K", p.K},
                {"op", std::string(to_string(p.op))},
                {"M", matrix_to_json(p.M)},
                {"H", matrix_to_json(p.H)}};
}

ProtocolParams params_from_json(const Json& j) {
    ProtocolParams p;
    p.k = integer_field<std::int64_t>(j, "k");
    p.N = integer_field<std::int64_t>(j, "N");
    const auto K = integer_field<std::int64_t>(j, "K");
    if (K < 1 || K > 1'000'000) throw FormatError("params: K out of range");
    p.K = static_cast<std::uint32_t>(K);
    const Json& op = field(j, "op");
    if (!op.is_string()) throw FormatError("params: 'op' must be \"circ\" or \"star\"");
    try {
        p.op = parse_op_kind(op.get<std::string>());
    } catch (const std::invalid_argument& ex) {
        throw FormatError(ex.what());
    }
    p.M = matrix_from_json(field(j, "M"));
    p.H = matrix_from_json(field(j, "H"));
    try {
        validate(p);
    } catch (const std::invalid_argument& ex) {
        throw FormatError(ex.what());
    }
    return p;
}

Json transcript_to_json(const Transcript& t) {
    return Json{{"params", params_to_json(t.params)},
                {"alice_message", matrix_to_json(t.alice_message)},
                {"bob_message", matrix_to_json(t.bob_message)}};
}

Transcript transcript_from_json(const Json& j) {
    Transcript t;
    t.params = params_from_json(field(j, "params"));
    t.alice_message = matrix_from_json(field(j, "alice_message"));
    t.bob_message = matrix_from_json(field(j, "bob_message"));
    if (t.alice_message.rows() != t.params.k || t.bob_message.rows() != t.params.k) {
        throw FormatError("transcript: message dimension differs from params.k");
    }
    return t;
}

Json attack_result_to_json(const AttackResult& r) {
    return Json{{"m_prime", to_decimal(r.m_prime)},
                {"t", r.t},
                {"op_count", r.op_count},
                {"recovered_key", matrix_to_json(r.recovered_key)}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& ex) {
        throw FormatError(std::string("invalid JSON: ") + ex.what());
    }
}

}  // namespace tropkex
