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

#ifndef TROPKEX_BIGINT_HPP_
#define TROPKEX_BIGINT_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace tropkex {

using BigInt = mpz_class;

// Parses an optionally signed decimal integer; anything else throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& x);

// Number of bits in |x|; zero has bit length 0.
std::size_t bit_length(const BigInt& x);

std::size_t popcount(const BigInt& x);

inline bool test_bit(const BigInt& x, std::size_t i) { return mpz_tstbit(x.get_mpz_t(), i) != 0; }

inline BigInt pow2(std::size_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Uniform in [0, 2^bits).
BigInt random_bits(std::mt19937_64& rng, std::size_t bits);

// Uniform in [1, 2^bits - 1]; requires bits >= 1.
BigInt random_positive_below_pow2(std::mt19937_64& rng, std::size_t bits);

}  // namespace tropkex

namespace Eigen {

// Storage-only traits: Eigen is used as a dense container, never for its own arithmetic.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Nested = mpz_class;
    using Literal = mpz_class;

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };

    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // TROPKEX_BIGINT_HPP_
