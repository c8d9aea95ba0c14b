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

#ifndef TROPKEX_SERIALIZE_HPP_
#define TROPKEX_SERIALIZE_HPP_

// JSON documents. Matrix entries are decimal strings so arbitrary-precision values survive
// bit-exactly:
//
//   matrix      {"k": 2, "entries": [["1", "-5"], ["0", "3"]]}
//   pair        {"first": <matrix>, "second": <matrix>}
//   params      {"k", "N", "K", "op": "circ"|"star", "M": <matrix>, "H": <matrix>}
//   transcript  {"params": <params>, "alice_message": <matrix>, "bob_message": <matrix>}
//   attack      {"m_prime": "<decimal>", "t", "op_count", "recovered_key": <matrix>}
//
// Decoding failures throw FormatError.

#include <string>

#include <json.hpp>

#include <tropkex/attack.hpp>
#include <tropkex/protocol.hpp>
#include <tropkex/semidirect.hpp>
#include <tropkex/tropical.hpp>

namespace tropkex {

using Json = nlohmann::json;

Json matrix_to_json(const TropicalMatrix& m);
TropicalMatrix matrix_from_json(const Json& j);

Json pair_to_json(const SemigroupPair& p);
SemigroupPair pair_from_json(const Json& j);

Json params_to_json(const ProtocolParams& p);
ProtocolParams params_from_json(const Json& j);

Json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const Json& j);

Json attack_result_to_json(const AttackResult& r);

// Parses text; syntax errors become FormatError.
Json parse_json(const std::string& text);

}  // namespace tropkex

#endif  // TROPKEX_SERIALIZE_HPP_
