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

#ifndef TROPKEX_TROPICAL_HPP_
#define TROPKEX_TROPICAL_HPP_

// Min-plus (tropical) matrix algebra over an exact integer scalar.
//
//   a (+) b = min(a, b)        a (x) b = a + b
//
// Matrices are square. There is no infinite element, so the semiring has no
// identity matrix and none is provided.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include <tropkex/bigint.hpp>

namespace tropkex {

template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using TropicalMatrix = MatrixT<BigInt>;

enum class ChainOrdering { Less, Equal, Greater, Incomparable };

std::string to_string(ChainOrdering ord);

namespace detail {

template <typename Scalar>
void require_square(const MatrixT<Scalar>& a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument("tropical matrix must be square with k >= 1, got " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()));
    }
}

template <typename Scalar>
void require_same_dim(const MatrixT<Scalar>& a, const MatrixT<Scalar>& b) {
    require_square(a);
    require_square(b);
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.rows()) + " vs " +
                                    std::to_string(b.rows()));
    }
}

}  // namespace detail

// Builds a matrix from nested rows; every row must have the same length as the row count.
template <typename Scalar = BigInt>
MatrixT<Scalar> make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    const auto k = static_cast<Eigen::Index>(rows.size());
    MatrixT<Scalar> m(k, k);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != k) {
            throw std::invalid_argument("make_matrix: ragged or non-square rows");
        }
        Eigen::Index j = 0;
        for (long v : row) m(i, j++) = Scalar(v);
        ++i;
    }
    detail::require_square(m);
    return m;
}

template <typename Scalar>
MatrixT<Scalar> constant_matrix(Eigen::Index k, const Scalar& value) {
    MatrixT<Scalar> m(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) m(i, j) = value;
    return m;
}

// Entrywise minimum.
template <typename Scalar>
MatrixT<Scalar> oplus(const MatrixT<Scalar>& a, const MatrixT<Scalar>& b) {
    detail::require_same_dim(a, b);
    MatrixT<Scalar> r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = b(i, j) < a(i, j) ? b(i, j) : a(i, j);
    return r;
}

template <typename Scalar, typename... Rest>
MatrixT<Scalar> oplus(const MatrixT<Scalar>& a, const MatrixT<Scalar>& b, const Rest&... rest) {
    return oplus(oplus(a, b), rest...);
}

// Min-plus product: r(i,j) = min_l a(i,l) + b(l,j).
template <typename Scalar>
MatrixT<Scalar> otimes(const MatrixT<Scalar>& a, const MatrixT<Scalar>& b) {
    detail::require_same_dim(a, b);
    const Eigen::Index k = a.rows();
    MatrixT<Scalar> r(k, k);
    Scalar cand;
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            Scalar best = a(i, 0) + b(0, j);
            for (Eigen::Index l = 1; l < k; ++l) {
                cand = a(i, l) + b(l, j);
                if (cand < best) std::swap(best, cand);
            }
            r(i, j) = std::move(best);
        }
    }
    return r;
}

template <typename Scalar>
MatrixT<Scalar> transpose(const MatrixT<Scalar>& a) {
    detail::require_square(a);
    return a.transpose();
}

template <typename Scalar>
bool equal(const MatrixT<Scalar>& x, const MatrixT<Scalar>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (x(i, j) != y(i, j)) return false;
    return true;
}

// x <= y  iff  x (+) y == x  iff  entrywise x(i,j) <= y(i,j).
template <typename Scalar>
bool leq(const MatrixT<Scalar>& x, const MatrixT<Scalar>& y) {
    detail::require_same_dim(x, y);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (y(i, j) < x(i, j)) return false;
    return true;
}

// Total comparison for elements of a monotone chain; Incomparable flags a pair that cannot share one.
template <typename Scalar>
ChainOrdering chain_compare(const MatrixT<Scalar>& x, const MatrixT<Scalar>& y) {
    detail::require_same_dim(x, y);
    bool some_less = false;
    bool some_greater = false;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            some_less |= x(i, j) < y(i, j);
            some_greater |= y(i, j) < x(i, j);
            if (some_less && some_greater) return ChainOrdering::Incomparable;
        }
    }
    if (some_less) return ChainOrdering::Less;
    if (some_greater) return ChainOrdering::Greater;
    return ChainOrdering::Equal;
}

// k x k matrix with entries uniform in [-N, N].
TropicalMatrix random_matrix(Eigen::Index k, std::int64_t bound, std::mt19937_64& rng);

}  // namespace tropkex

#endif  // TROPKEX_TROPICAL_HPP_
