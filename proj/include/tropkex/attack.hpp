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

#ifndef TROPKEX_ATTACK_HPP_
#define TROPKEX_ATTACK_HPP_

// Passive key recovery. The first components M_1 >= M_2 >= ... of the powers of (M,H) form a
// decreasing chain, so the exponent behind an intercepted message A can be bracketed by repeated
// squaring and then located by bisection. Any m' with M_{m'} = A yields the shared key.
//
// Operation budget with K-bit exponents: at most K squarings, then at most t+1 probes of at most
// t-1 applications each when probes are assembled from the square ladder (<= K^2 + K overall), or
// at most 2t-2 each when every probe is powered from scratch (<= 2K^2 + K).

#include <cstddef>
#include <cstdint>

#include <tropkex/bigint.hpp>
#include <tropkex/protocol.hpp>
#include <tropkex/semidirect.hpp>
#include <tropkex/tropical.hpp>

namespace tropkex {

enum class Target { Alice, Bob };

enum class ProbeMode {
    Cached,  // probes built from the stored square ladder
    Naive,   // probes powered from scratch
};

struct DoublingResult {
    std::size_t t = 0;  // least t with M_{2^t} <= A
    SquareCache cache;  // squares 0..t
};

struct SearchHit {
    BigInt m_prime;
    SemigroupPair pair;  // (M,H)^{m_prime}, first component equals A
};

struct AttackResult {
    BigInt m_prime;
    std::size_t t = 0;
    std::uint64_t op_count = 0;
    SemigroupPair eve_pair;
    TropicalMatrix recovered_key;
};

// Throws NotOnChainError if no t <= max_levels works, ChainViolationError on an Incomparable step.
DoublingResult doubling_phase(OpKind op, const TropicalMatrix& M, const TropicalMatrix& H,
                              const TropicalMatrix& A, std::size_t max_levels, OpCounter* counter = nullptr);

// Bisection over [1, 2^t]. Greater -> right half, Less -> left half, Equal -> done.
SearchHit binary_search_exponent(const SquareCache& cache, const TropicalMatrix& A, std::size_t t,
                                 OpCounter* counter = nullptr, ProbeMode mode = ProbeMode::Cached);

AttackResult recover_key(const Transcript& transcript, Target target = Target::Alice,
                         ProbeMode mode = ProbeMode::Cached);

}  // namespace tropkex

#endif  // TROPKEX_ATTACK_HPP_
