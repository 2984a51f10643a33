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

#ifndef CYCLOREP_NUMTHEORY_HPP
#define CYCLOREP_NUMTHEORY_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace cyclorep {

/*
 * Integer primitives used by the polynomial layers. Inputs are signed so
 * that a caller passing 0 or a negative value gets a DomainError rather
 * than a silent wrap-around.
 */

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ascending primes with positive exponents; empty for 1.
class PrimeFactorization {
   public:
    PrimeFactorization() = default;
    /// Validates ordering, primality and exponents.
    explicit PrimeFactorization(std::vector<PrimePower> pairs);

    const std::vector<PrimePower>& pairs() const noexcept { return pairs_; }
    bool empty() const noexcept { return pairs_.empty(); }

    /// Product of prime^exponent; throws DomainError on 64-bit overflow.
    std::uint64_t value() const;
    /// Primes repeated according to their exponent, ascending (12 -> 2,2,3).
    std::vector<std::uint64_t> with_repetition() const;
    /// Inverse of with_repetition; input must be a nondecreasing list of primes.
    static PrimeFactorization from_repeated(const std::vector<std::uint64_t>& primes);

    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

   private:
    std::vector<PrimePower> pairs_;
};

bool is_prime(std::uint64_t n);

PrimeFactorization factorize(std::int64_t n);
std::vector<std::uint64_t> divisors(std::int64_t n);
/// Divisors from a known factorization, ascending.
std::vector<std::uint64_t> divisors(const PrimeFactorization& pf);
int mobius(std::int64_t n);
std::uint64_t totient(std::int64_t n);
std::uint64_t divisor_count(std::int64_t n);

/// Every k >= 1 with totient(k) <= bound, ascending.
std::vector<std::uint64_t> totient_at_most(std::uint64_t bound);

/// Exact floor(sqrt(n)) for n >= 0 by Newton iteration.
std::uint64_t isqrt(std::uint64_t n);

/// Recovers (p, q), p < q, from k = pq and phi = (p-1)(q-1) using
///   p, q = (k + 1 - phi -+ sqrt(k^2 - 2k - 2k*phi + (phi - 1)^2)) / 2.
/// Throws InconsistencyError when the pair is not of that shape.
std::pair<std::uint64_t, std::uint64_t> recover_pq(std::int64_t k, std::int64_t phi);

}  // namespace cyclorep

#endif  // CYCLOREP_NUMTHEORY_HPP
