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

#include <tropkex/bigint.hpp>

#include <cctype>

namespace tropkex {

BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
        }
    }
    // mpz_set_str rejects a leading '+'.
    const std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    BigInt r;
    if (mpz_set_str(r.get_mpz_t(), digits.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    return r;
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

std::size_t bit_length(const BigInt& x) {
    if (sgn(x) == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t popcount(const BigInt& x) {
    BigInt a = abs(x);
    return mpz_popcount(a.get_mpz_t());
}

BigInt random_bits(std::mt19937_64& rng, std::size_t bits) {
    BigInt r = 0;
    std::size_t have = 0;
    while (have < bits) {
        const std::size_t take = std::min<std::size_t>(64, bits - have);
        std::uint64_t word = rng();
        if (take < 64) word &= (std::uint64_t{1} << take) - 1;
        BigInt w;
        mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
        r += w << static_cast<mp_bitcnt_t>(have);
        have += take;
    }
    return r;
}

BigInt random_positive_below_pow2(std::mt19937_64& rng, std::size_t bits) {
    if (bits == 0) throw std::invalid_argument("random_positive_below_pow2: bits must be >= 1");
    for (;;) {
        BigInt r = random_bits(rng, bits);
        if (sgn(r) != 0) return r;
    }
}

}  // namespace tropkex
