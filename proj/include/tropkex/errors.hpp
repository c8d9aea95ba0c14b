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

#ifndef TROPKEX_ERRORS_HPP_
#define TROPKEX_ERRORS_HPP_

#include <stdexcept>

namespace tropkex {

// Rejected inputs (dimension mismatch, bad exponent) are reported as std::invalid_argument.

// Malformed JSON or a document that does not match the expected schema.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two chain elements compared as Incomparable: the intercepted matrix is not from this (M,H).
class ChainViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The intercepted matrix is not a first component of any power within the search bound.
class NotOnChainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The two parties derived different keys.
class KeyAgreementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The eavesdropper's key differs from the parties' shared key.
class AttackFailedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tropkex

#endif  // TROPKEX_ERRORS_HPP_
