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

#include <tropkex/semidirect.hpp>
#include <tropkex/tropical.hpp>

namespace tropkex {

std::string to_string(ChainOrdering ord) {
    switch (ord) {
        case ChainOrdering::Less: return "Less";
        case ChainOrdering::Equal: return "Equal";
        case ChainOrdering::Greater: return "Greater";
        case ChainOrdering::Incomparable: return "Incomparable";
    }
    return "?";
}

TropicalMatrix random_matrix(Eigen::Index k, std::int64_t bound, std::mt19937_64& rng) {
    if (k < 1) throw std::invalid_argument("random_matrix: k must be >= 1");
    if (bound < 0) throw std::invalid_argument("random_matrix: N must be >= 0");
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    TropicalMatrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = BigInt(static_cast<long>(dist(rng)));
    return m;
}

std::string_view to_string(OpKind op) { return op == OpKind::Circ ? "circ" : "star"; }

OpKind parse_op_kind(std::string_view name) {
    if (name == "circ") return OpKind::Circ;
    if (name == "star") return OpKind::Star;
    throw std::invalid_argument("unknown operation '" + std::string(name) + "', expected circ|star");
}

}  // namespace tropkex
