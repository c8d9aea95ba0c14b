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

#include <tropkex/attack.hpp>

#include <string>

#include <tropkex/errors.hpp>

namespace tropkex {

DoublingResult doubling_phase(OpKind op, const TropicalMatrix& M, const TropicalMatrix& H, const TropicalMatrix& A,
                              std::size_t max_levels, OpCounter* counter) {
    detail::require_same_dim(M, H);
    detail::require_same_dim(M, A);
    if (max_levels < 1) throw std::invalid_argument("doubling_phase: max_levels must be >= 1");

    SquareCache cache(op, SemigroupPair{M, H});
    for (std::size_t t = 0;; ++t) {
        switch (chain_compare(cache.top().first, A)) {
            case ChainOrdering::Less:
            case ChainOrdering::Equal:
                return DoublingResult{t, std::move(cache)};
            case ChainOrdering::Incomparable:
                throw ChainViolationError("doubling phase: M_{2^" + std::to_string(t) +
                                          "} is incomparable with the intercepted matrix");
            case ChainOrdering::Greater:
                break;
        }
        if (t == max_levels) {
            throw NotOnChainError("intercepted matrix is not reached by M_{2^t} for any t <= " +
                                  std::to_string(max_levels));
        }
        cache.extend(counter);
    }
}

SearchHit binary_search_exponent(const SquareCache& cache, const TropicalMatrix& A, std::size_t t,
                                 OpCounter* counter, ProbeMode mode) {
    if (cache.levels() < t + 1) {
        throw std::invalid_argument("binary_search_exponent: cache has " + std::to_string(cache.levels()) +
                                    " levels, need " + std::to_string(t + 1));
    }
    BigInt lo = 1;
    BigInt hi = pow2(t);
    BigInt mid;
    while (lo <= hi) {
        mid = (lo + hi) >> 1;
        SemigroupPair probe = mode == ProbeMode::Cached ? power_from_cache(cache, mid, counter)
                                                        : power(cache.op(), cache.base(), mid, counter);
        switch (chain_compare(probe.first, A)) {
            case ChainOrdering::Equal:
                return SearchHit{mid, std::move(probe)};
            case ChainOrdering::Greater:
                lo = mid + 1;
                break;
            case ChainOrdering::Less:
                hi = mid - 1;
                break;
            case ChainOrdering::Incomparable:
                throw ChainViolationError("binary search: M_" + to_decimal(mid) +
                                          " is incomparable with the intercepted matrix");
        }
    }
    throw NotOnChainError("binary search: no exponent in [1, 2^" + std::to_string(t) +
                          "] has the intercepted first component");
}

AttackResult recover_key(const Transcript& transcript, Target target, ProbeMode mode) {
    const ProtocolParams& params = transcript.params;
    const TropicalMatrix& victim = target == Target::Alice ? transcript.alice_message : transcript.bob_message;
    const TropicalMatrix& partner = target == Target::Alice ? transcript.bob_message : transcript.alice_message;

    OpCounter counter;
    DoublingResult bound = doubling_phase(params.op, params.M, params.H, victim, params.K, &counter);
    SearchHit hit = binary_search_exponent(bound.cache, victim, bound.t, &counter, mode);

    AttackResult r;
    r.t = bound.t;
    r.op_count = counter.count;
    r.m_prime = hit.m_prime;
    r.recovered_key = product_first(params.op, partner, hit.pair);
    r.eve_pair = std::move(hit.pair);
    return r;
}

}  // namespace tropkex
