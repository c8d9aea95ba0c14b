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

#include <tropkex/protocol.hpp>

#include <string>

#include <tropkex/errors.hpp>

namespace tropkex {

namespace {

void require_entries_within(const TropicalMatrix& m, std::int64_t N, const char* name) {
    const BigInt lo(static_cast<long>(-N));
    const BigInt hi(static_cast<long>(N));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) < lo || hi < m(i, j)) {
                throw std::invalid_argument(std::string(name) + " entry " + to_decimal(m(i, j)) +
                                            " outside [-N, N] with N=" + std::to_string(N));
            }
}

}  // namespace

void validate(const ProtocolParams& params) {
    if (params.k < 1) throw std::invalid_argument("params: k must be >= 1");
    if (params.N < 0) throw std::invalid_argument("params: N must be >= 0");
    if (params.K < 1) throw std::invalid_argument("params: K must be >= 1");
    detail::require_same_dim(params.M, params.H);
    if (params.M.rows() != params.k) throw std::invalid_argument("params: M is not k x k");
    require_entries_within(params.M, params.N, "M");
    require_entries_within(params.H, params.N, "H");
}

ProtocolParams setup(Eigen::Index k, std::int64_t N, std::uint32_t K, OpKind op, std::mt19937_64& rng) {
    if (K < 1) throw std::invalid_argument("setup: K must be >= 1");
    ProtocolParams p;
    p.k = k;
    p.N = N;
    p.K = K;
    p.op = op;
    p.M = random_matrix(k, N, rng);
    p.H = random_matrix(k, N, rng);
    return p;
}

PartyState make_party_with_exponent(const ProtocolParams& params, const BigInt& exponent) {
    if (exponent < 1 || bit_length(exponent) > params.K) {
        throw std::invalid_argument("private exponent " + to_decimal(exponent) + " outside [1, 2^K - 1]");
    }
    PartyState s;
    s.exponent = exponent;
    s.pair = power(params.op, params.base(), exponent);
    s.public_message = s.pair.first;
    return s;
}

PartyState make_party(const ProtocolParams& params, std::mt19937_64& rng) {
    return make_party_with_exponent(params, random_positive_below_pow2(rng, params.K));
}

TropicalMatrix derive_shared_key(const ProtocolParams& params, const PartyState& own,
                                 const TropicalMatrix& other_message) {
    detail::require_same_dim(other_message, own.pair.first);
    return product_first(params.op, other_message, own.pair);
}

ExchangeResult exchange_keys(const ProtocolParams& params, PartyState alice, PartyState bob) {
    ExchangeResult r;
    r.transcript = Transcript{params, alice.public_message, bob.public_message};
    r.alice_key = derive_shared_key(params, alice, bob.public_message);
    r.bob_key = derive_shared_key(params, bob, alice.public_message);
    r.alice = std::move(alice);
    r.bob = std::move(bob);
    return r;
}

ExchangeResult run_exchange(const ProtocolParams& params, std::mt19937_64& rng) {
    PartyState alice = make_party(params, rng);
    PartyState bob = make_party(params, rng);
    ExchangeResult r = exchange_keys(params, std::move(alice), std::move(bob));
    if (!r.keys_agree()) {
        throw KeyAgreementError("alice and bob derived different keys (op=" + std::string(to_string(params.op)) +
                                ", k=" + std::to_string(params.k) + ", m=" + to_decimal(r.alice.exponent) +
                                ", n=" + to_decimal(r.bob.exponent) + ")");
    }
    return r;
}

}  // namespace tropkex
