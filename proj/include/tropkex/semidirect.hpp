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

#ifndef TROPKEX_SEMIDIRECT_HPP_
#define TROPKEX_SEMIDIRECT_HPP_

// The two semidirect-style laws on pairs of tropical matrices.
//
//   circ: (M,G) o (S,H) = ( M (+) S (+) H (+) M(x)H ,  G (+) H (+) G(x)H )
//   star: (M,G) * (S,H) = ( H(x)M^T (+) M^T(x)H (+) S ,  G(x)H )
//
// In both laws the first component of the product ignores G. The star law is
// not associative, so powers are defined by one fixed bracketing (see power()).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <tropkex/bigint.hpp>
#include <tropkex/tropical.hpp>

namespace tropkex {

enum class OpKind { Circ, Star };

std::string_view to_string(OpKind op);

// Accepts "circ" or "star".
OpKind parse_op_kind(std::string_view name);

template <typename Scalar>
struct PairT {
    MatrixT<Scalar> first;
    MatrixT<Scalar> second;

    Eigen::Index dim() const { return first.rows(); }

    friend bool operator==(const PairT& a, const PairT& b) {
        return equal(a.first, b.first) && equal(a.second, b.second);
    }
};

using SemigroupPair = PairT<BigInt>;

template <typename Scalar>
PairT<Scalar> make_pair(MatrixT<Scalar> first, MatrixT<Scalar> second) {
    detail::require_same_dim(first, second);
    return PairT<Scalar>{std::move(first), std::move(second)};
}

// Counts semigroup applications. Callers own it; nothing is global.
struct OpCounter {
    std::uint64_t count = 0;
};

// First component of (left_first, *) op right. Only needs the left factor's first component.
template <typename Scalar>
MatrixT<Scalar> product_first(OpKind op, const MatrixT<Scalar>& left_first, const PairT<Scalar>& right) {
    const auto& s = right.first;
    const auto& h = right.second;
    switch (op) {
        case OpKind::Circ:
            return oplus(left_first, s, h, otimes(left_first, h));
        case OpKind::Star: {
            const MatrixT<Scalar> mt = transpose(left_first);
            return oplus(otimes(h, mt), otimes(mt, h), s);
        }
    }
    throw std::logic_error("unknown OpKind");
}

template <typename Scalar>
PairT<Scalar> op_circ(const PairT<Scalar>& p, const PairT<Scalar>& q) {
    detail::require_same_dim(p.first, q.first);
    detail::require_same_dim(p.second, q.second);
    detail::require_same_dim(p.first, p.second);
    return {product_first(OpKind::Circ, p.first, q), oplus(p.second, q.second, otimes(p.second, q.second))};
}

template <typename Scalar>
PairT<Scalar> op_star(const PairT<Scalar>& p, const PairT<Scalar>& q) {
    detail::require_same_dim(p.first, q.first);
    detail::require_same_dim(p.second, q.second);
    detail::require_same_dim(p.first, p.second);
    return {product_first(OpKind::Star, p.first, q), otimes(p.second, q.second)};
}

template <typename Scalar>
PairT<Scalar> apply(OpKind op, const PairT<Scalar>& p, const PairT<Scalar>& q, OpCounter* counter = nullptr) {
    PairT<Scalar> r = op == OpKind::Circ ? op_circ(p, q) : op_star(p, q);
    if (counter != nullptr) ++counter->count;
    return r;
}

/// Ladder of repeated squares: squares[i] is base^(2^i), squares[i+1] = squares[i] op squares[i].
template <typename Scalar>
class SquareCacheT {
public:
    SquareCacheT(OpKind op, PairT<Scalar> base) : op_(op) { squares_.push_back(std::move(base)); }

    OpKind op() const { return op_; }
    const PairT<Scalar>& base() const { return squares_.front(); }
    const PairT<Scalar>& square(std::size_t i) const { return squares_.at(i); }
    const PairT<Scalar>& top() const { return squares_.back(); }
    std::size_t levels() const { return squares_.size(); }

    // Appends the next square; one op application.
    const PairT<Scalar>& extend(OpCounter* counter = nullptr) {
        squares_.push_back(apply(op_, squares_.back(), squares_.back(), counter));
        return squares_.back();
    }

private:
    OpKind op_;
    std::vector<PairT<Scalar>> squares_;
};

using SquareCache = SquareCacheT<BigInt>;

template <typename Scalar>
SquareCacheT<Scalar> build_square_cache(OpKind op, const PairT<Scalar>& base, std::size_t levels,
                                        OpCounter* counter = nullptr) {
    if (levels == 0) throw std::invalid_argument("build_square_cache: levels must be >= 1");
    SquareCacheT<Scalar> cache(op, base);
    while (cache.levels() < levels) cache.extend(counter);
    return cache;
}

/// Product of the cached squares at the set bits of e, combined in ascending bit order with the
/// running product as the left factor:
///
///   base^e = ((s_{i1} op s_{i2}) op s_{i3}) ...,   i1 < i2 < i3 < ...
///
/// Costs popcount(e) - 1 op applications. Requires 1 <= e < 2^levels.
template <typename Scalar>
PairT<Scalar> power_from_cache(const SquareCacheT<Scalar>& cache, const BigInt& e, OpCounter* counter = nullptr) {
    if (e < 1) throw std::invalid_argument("power_from_cache: exponent must be >= 1");
    if (bit_length(e) > cache.levels()) {
        throw std::invalid_argument("power_from_cache: exponent " + to_decimal(e) + " needs " +
                                    std::to_string(bit_length(e)) + " levels, cache has " +
                                    std::to_string(cache.levels()));
    }
    std::optional<PairT<Scalar>> acc;
    const std::size_t bits = bit_length(e);
    for (std::size_t i = 0; i < bits; ++i) {
        if (!test_bit(e, i)) continue;
        if (!acc) {
            acc = cache.square(i);
        } else {
            acc = apply(cache.op(), *acc, cache.square(i), counter);
        }
    }
    return std::move(*acc);
}

/// base^e by square-and-multiply. Uses exactly the bracketing of power_from_cache, so both return
/// bit-identical pairs for either law. Costs (bit_length(e) - 1) + (popcount(e) - 1) applications.
template <typename Scalar>
PairT<Scalar> power(OpKind op, const PairT<Scalar>& base, const BigInt& e, OpCounter* counter = nullptr) {
    if (e < 1) throw std::invalid_argument("power: exponent must be >= 1 (no identity element)");
    const std::size_t bits = bit_length(e);
    PairT<Scalar> sq = base;
    std::optional<PairT<Scalar>> acc;
    for (std::size_t i = 0; i < bits; ++i) {
        if (i > 0) sq = apply(op, sq, sq, counter);
        if (!test_bit(e, i)) continue;
        if (!acc) {
            acc = sq;
        } else {
            acc = apply(op, *acc, sq, counter);
        }
    }
    return std::move(*acc);
}

template <typename Scalar>
PairT<Scalar> power(OpKind op, const PairT<Scalar>& base, std::uint64_t e, OpCounter* counter = nullptr) {
    return power(op, base, BigInt(static_cast<unsigned long>(e)), counter);
}

}  // namespace tropkex

#endif  // TROPKEX_SEMIDIRECT_HPP_
