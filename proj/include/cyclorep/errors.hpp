/*
   Copyright 2026 The cyclorep Authors

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

#ifndef CYCLOREP_ERRORS_HPP
#define CYCLOREP_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclorep {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (k <= 0, zero
/// polynomial where a nonzero one is required, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Polynomial or factorization text could not be parsed.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

/// recover_pq was handed a (k, phi) pair that is not (pq, (p-1)(q-1)).
class InconsistencyError : public Error {
   public:
    using Error::Error;
};

/// A C-aware value whose net Phi_d multiplicity is negative for some d.
class NotAPolynomial : public Error {
   public:
    explicit NotAPolynomial(std::uint64_t d)
        : Error("net multiplicity of Phi_" + std::to_string(d) + " is negative"), divisor_(d) {}

    std::uint64_t divisor() const noexcept { return divisor_; }

   private:
    std::uint64_t divisor_;
};

/// A value does not fit the field widths selected for encoding.
class CapacityError : public Error {
   public:
    CapacityError(const std::string& field, const std::string& detail)
        : Error("field '" + field + "' overflows: " + detail), field_(field) {}

    const std::string& field() const noexcept { return field_; }

   private:
    std::string field_;
};

/// A blob failed header, framing or canonical-form checks on decode.
class MalformedBlob : public Error {
   public:
    using Error::Error;
};

}  // namespace cyclorep

#endif  // CYCLOREP_ERRORS_HPP
