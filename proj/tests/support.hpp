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

#ifndef TROPKEX_TESTS_SUPPORT_HPP_
#define TROPKEX_TESTS_SUPPORT_HPP_

// Test-only oracles and generators. Nothing here calls into the library's algebra.

#include <cstdint>
#include <random>
#include <vector>

#include <tropkex/semidirect.hpp>
#include <tropkex/tropical.hpp>

namespace tropkex::testing {

using Dense = std::vector<std::vector<long long>>;

inline Dense to_dense(const TropicalMatrix& m) {
    Dense d(static_cast<std::size_t>(m.rows()), std::vector<long long>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).get_si();
    return d;
}

inline TropicalMatrix from_dense(const Dense& d) {
    const auto k = static_cast<Eigen::Index>(d.size());
    TropicalMatrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = BigInt(static_cast<long>(d[i][j]));
    return m;
}

// Textbook triple loop over plain integers.
inline Dense naive_min_plus(const Dense& a, const Dense& b) {
    const std::size_t k = a.size();
    Dense c(k, std::vector<long long>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            long long best = a[i][0] + b[0][j];
            for (std::size_t l = 1; l < k; ++l) best = std::min(best, a[i][l] + b[l][j]);
            c[i][j] = best;
        }
    }
    return c;
}

inline Dense naive_min(const Dense& a, const Dense& b) {
    Dense c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = std::min(a[i][j], b[i][j]);
    return c;
}

inline Dense naive_transpose(const Dense& a) {
    Dense c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = a[j][i];
    return c;
}

struct DensePair {
    Dense first;
    Dense second;
    bool operator==(const DensePair&) const = default;
};

// Both laws written out entry by entry from their definitions.
inline DensePair naive_circ(const DensePair& p, const DensePair& q) {
    const Dense mh = naive_min_plus(p.first, q.second);
    const Dense gh = naive_min_plus(p.second, q.second);
    return {naive_min(naive_min(naive_min(p.first, q.first), q.second), mh),
            naive_min(naive_min(p.second, q.second), gh)};
}

inline DensePair naive_star(const DensePair& p, const DensePair& q) {
    const Dense mt = naive_transpose(p.first);
    return {naive_min(naive_min(naive_min_plus(q.second, mt), naive_min_plus(mt, q.second)), q.first),
            naive_min_plus(p.second, q.second)};
}

inline DensePair naive_apply(OpKind op, const DensePair& p, const DensePair& q) {
    return op == OpKind::Circ ? naive_circ(p, q) : naive_star(p, q);
}

// base^e as ((base op base) op base) ...
inline DensePair right_fold_power(OpKind op, const DensePair& base, unsigned e) {
    DensePair r = base;
    for (unsigned i = 1; i < e; ++i) r = naive_apply(op, r, base);
    return r;
}

// base^e as base op (base op (... op base)).
inline DensePair left_fold_power(OpKind op, const DensePair& base, unsigned e) {
    DensePair r = base;
    for (unsigned i = 1; i < e; ++i) r = naive_apply(op, base, r);
    return r;
}

inline DensePair to_dense(const SemigroupPair& p) { return {to_dense(p.first), to_dense(p.second)}; }

inline SemigroupPair from_dense(const DensePair& p) { return {from_dense(p.first), from_dense(p.second)}; }

inline TropicalMatrix random_small(std::mt19937_64& rng, Eigen::Index k, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    TropicalMatrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = BigInt(dist(rng));
    return m;
}

inline SemigroupPair random_pair(std::mt19937_64& rng, Eigen::Index k, long bound) {
    TropicalMatrix a = random_small(rng, k, bound);
    TropicalMatrix b = random_small(rng, k, bound);
    return {std::move(a), std::move(b)};
}

// Y with X <= Y: X plus a nonnegative entrywise offset.
inline TropicalMatrix random_above(std::mt19937_64& rng, const TropicalMatrix& x, long spread) {
    std::uniform_int_distribution<long> dist(0, spread);
    TropicalMatrix y = x;
    for (Eigen::Index i = 0; i < y.rows(); ++i)
        for (Eigen::Index j = 0; j < y.cols(); ++j) y(i, j) += dist(rng);
    return y;
}

inline Eigen::Index random_dim(std::mt19937_64& rng, Eigen::Index lo, Eigen::Index hi) {
    return std::uniform_int_distribution<Eigen::Index>(lo, hi)(rng);
}

}  // namespace tropkex::testing

#endif  // TROPKEX_TESTS_SUPPORT_HPP_
