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

#include <doctest.h>

#include <random>

#include <tropkex/errors.hpp>
#include <tropkex/protocol.hpp>

#include "support.hpp"

using namespace tropkex;

namespace {

ProtocolParams scalar_params(long m, long h, std::uint32_t K, OpKind op = OpKind::Circ) {
    ProtocolParams p;
    p.k = 1;
    p.N = 1000;
    p.K = K;
    p.op = op;
    p.M = make_matrix({{m}});
    p.H = make_matrix({{h}});
    return p;
}

}  // namespace

TEST_CASE("setup") {
    std::mt19937_64 rng(1);
    const ProtocolParams suggested = setup(30, 1000, 200, OpKind::Circ, rng);
    CHECK(suggested.M.rows() == 30);
    CHECK(suggested.H.rows() == 30);
    CHECK_NOTHROW(validate(suggested));

    const ProtocolParams tiny = setup(1, 0, 1, OpKind::Circ, rng);
    CHECK(equal(tiny.M, make_matrix({{0}})));
    CHECK(equal(tiny.H, make_matrix({{0}})));

    std::mt19937_64 a(9);
    std::mt19937_64 b(9);
    const ProtocolParams pa = setup(4, 100, 10, OpKind::Star, a);
    const ProtocolParams pb = setup(4, 100, 10, OpKind::Star, b);
    CHECK(equal(pa.M, pb.M));
    CHECK(equal(pa.H, pb.H));
    CHECK_THROWS_AS(setup(2, 5, 0, OpKind::Circ, rng), std::invalid_argument);
}

TEST_CASE("validate rejects out-of-range parameters") {
    ProtocolParams p = scalar_params(10, -3, 4);
    p.N = 5;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = scalar_params(1, 1, 4);
    p.k = 2;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("make_party") {
    std::mt19937_64 rng(2);
    const ProtocolParams p = setup(3, 50, 1, OpKind::Circ, rng);
    for (int i = 0; i < 20; ++i) {
        const PartyState s = make_party(p, rng);
        CHECK(s.exponent == 1);
        CHECK(equal(s.public_message, p.M));
    }

    const PartyState four = make_party_with_exponent(scalar_params(10, -3, 8), 4);
    CHECK(equal(four.public_message, make_matrix({{-9}})));
    CHECK(equal(four.pair.first, four.public_message));

    CHECK_THROWS_AS(make_party_with_exponent(scalar_params(10, -3, 3), 8), std::invalid_argument);
    CHECK_THROWS_AS(make_party_with_exponent(scalar_params(10, -3, 3), 0), std::invalid_argument);

    std::mt19937_64 r1(100);
    std::mt19937_64 r2(200);
    const ProtocolParams big = setup(2, 10, 64, OpKind::Circ, r1);
    CHECK(make_party(big, r1).exponent != make_party(big, r2).exponent);
}

TEST_CASE("derive_shared_key") {
    ProtocolParams p = scalar_params(0, 0, 4);
    PartyState own;
    own.exponent = 1;
    own.pair = SemigroupPair{make_matrix({{1}}), make_matrix({{3}})};
    own.public_message = own.pair.first;
    CHECK(equal(derive_shared_key(p, own, make_matrix({{0}})), make_matrix({{0}})));
    CHECK_THROWS_AS(derive_shared_key(p, own, make_matrix({{0, 0}, {0, 0}})), std::invalid_argument);

    // Star: (P Y^T) (+) (Y^T P) (+) X at 1x1 is min(P+Y, Y+P, X).
    p.op = OpKind::Star;
    CHECK(equal(derive_shared_key(p, own, make_matrix({{-5}})), make_matrix({{-2}})));
}

TEST_CASE("scalar exchange m=2, n=3 gives pi1((M,H)^5)") {
    const ProtocolParams p = scalar_params(10, -3, 4);
    const ExchangeResult r =
        exchange_keys(p, make_party_with_exponent(p, 2), make_party_with_exponent(p, 3));
    CHECK(r.keys_agree());
    CHECK(equal(r.alice_key, make_matrix({{-12}})));
    CHECK(equal(r.transcript.alice_message, make_matrix({{-3}})));
    CHECK(equal(r.transcript.bob_message, make_matrix({{-6}})));
}

TEST_CASE("circ exchange agrees and matches the powering oracle") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 300; ++n) {
        const auto k = testing::random_dim(rng, 1, 5);
        const auto K = std::uniform_int_distribution<std::uint32_t>(1, 8)(rng);
        const ProtocolParams p = setup(k, 100, K, OpKind::Circ, rng);
        const ExchangeResult r = run_exchange(p, rng);
        REQUIRE(r.keys_agree());

        // Independent oracle: right-fold the entrywise definition m+n times.
        const unsigned total = static_cast<unsigned>(r.alice.exponent.get_ui() + r.bob.exponent.get_ui());
        const auto oracle = testing::right_fold_power(OpKind::Circ, testing::to_dense(p.base()), total);
        REQUIRE(testing::to_dense(r.alice_key) == oracle.first);
    }
}

TEST_CASE("derived key ignores the partner's private component") {
    std::mt19937_64 rng(4);
    for (OpKind op : {OpKind::Circ, OpKind::Star}) {
        for (int n = 0; n < 50; ++n) {
            const ProtocolParams p = setup(3, 100, 10, op, rng);
            const PartyState alice = make_party(p, rng);
            PartyState bob = make_party(p, rng);
            const TropicalMatrix before = derive_shared_key(p, alice, bob.public_message);
            bob.pair.second = testing::random_small(rng, 3, 1000);
            REQUIRE(equal(derive_shared_key(p, alice, bob.public_message), before));
        }
    }
}

TEST_CASE("star exchange: agreement fails on some instances, run_exchange reports it") {
    std::mt19937_64 rng(5);
    int disagreements = 0;
    int scalar_disagreements = 0;
    for (int n = 0; n < 200; ++n) {
        const ProtocolParams p = setup(3, 100, 10, OpKind::Star, rng);
        const ExchangeResult r = exchange_keys(p, make_party(p, rng), make_party(p, rng));
        disagreements += !r.keys_agree();

        const ProtocolParams s = setup(1, 100, 10, OpKind::Star, rng);
        scalar_disagreements += !exchange_keys(s, make_party(s, rng), make_party(s, rng)).keys_agree();
    }
    CHECK(disagreements > 0);
    // At k = 1 the law is associative and the protocol is consistent.
    CHECK(scalar_disagreements == 0);

    std::mt19937_64 again(5);
    bool threw = false;
    for (int n = 0; n < 50 && !threw; ++n) {
        const ProtocolParams p = setup(3, 100, 10, OpKind::Star, again);
        try {
            run_exchange(p, again);
        } catch (const KeyAgreementError&) {
            threw = true;
        }
    }
    CHECK(threw);
}
