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

#ifndef TROPKEX_PROTOCOL_HPP_
#define TROPKEX_PROTOCOL_HPP_

// Two-party key exchange over the pair semigroup. Both parties raise the public pair (M,H) to a
// private exponent below 2^K, publish the first component, and derive the first component of
// (M,H)^(m+n) from their own pair and the partner's public matrix.

#include <cstdint>
#include <random>

#include <tropkex/bigint.hpp>
#include <tropkex/semidirect.hpp>
#include <tropkex/tropical.hpp>

namespace tropkex {

struct ProtocolParams {
    Eigen::Index k = 1;
    std::int64_t N = 0;
    std::uint32_t K = 1;
    OpKind op = OpKind::Circ;
    TropicalMatrix M;
    TropicalMatrix H;

    SemigroupPair base() const { return {M, H}; }
};

// Throws std::invalid_argument unless M, H are k x k with entries in [-N, N] and K >= 1.
void validate(const ProtocolParams& params);

struct PartyState {
    BigInt exponent;
    SemigroupPair pair;
    TropicalMatrix public_message;
};

// What a passive eavesdropper sees.
struct Transcript {
    ProtocolParams params;
    TropicalMatrix alice_message;
    TropicalMatrix bob_message;
};

ProtocolParams setup(Eigen::Index k, std::int64_t N, std::uint32_t K, OpKind op, std::mt19937_64& rng);

// Private exponent uniform in [1, 2^K - 1].
PartyState make_party(const ProtocolParams& params, std::mt19937_64& rng);

PartyState make_party_with_exponent(const ProtocolParams& params, const BigInt& exponent);

// First component of (other_message, *) op own.pair, i.e. the partner's factor on the left.
TropicalMatrix derive_shared_key(const ProtocolParams& params, const PartyState& own,
                                 const TropicalMatrix& other_message);

struct ExchangeResult {
    Transcript transcript;
    PartyState alice;
    PartyState bob;
    TropicalMatrix alice_key;
    TropicalMatrix bob_key;

    bool keys_agree() const { return equal(alice_key, bob_key); }
};

// Runs both parties' derivations without checking agreement.
ExchangeResult exchange_keys(const ProtocolParams& params, PartyState alice, PartyState bob);

// Full protocol; throws KeyAgreementError if the two keys differ.
ExchangeResult run_exchange(const ProtocolParams& params, std::mt19937_64& rng);

}  // namespace tropkex

#endif  // TROPKEX_PROTOCOL_HPP_
