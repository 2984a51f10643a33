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

#ifndef CYCLOREP_FACTORREP_HPP
#define CYCLOREP_FACTORREP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclorep/numtheory.hpp"
#include "cyclorep/poly.hpp"

namespace cyclorep {

/// factor^multiplicity with factor nonconstant and multiplicity >= 1.
struct FactorBlock {
    std::uint64_t multiplicity;
    SparsePoly factor;

    friend bool operator==(const FactorBlock&, const FactorBlock&) = default;
};

/// content * prod factor^multiplicity. x is an ordinary factor here.
struct PlainFactorization {
    std::vector<FactorBlock> factors;
    Integer content{1};

    friend bool operator==(const PlainFactorization& a, const PlainFactorization& b) {
        return a.factors == b.factors && a.content == b.content;
    }
};

struct PhiFactor {
    std::uint64_t multiplicity;
    std::uint64_t k;
    std::uint64_t degree;  // totient(k), stored alongside k

    friend bool operator==(const PhiFactor&, const PhiFactor&) = default;
};

/// content * x^x_power * prod Phi_k^m * prod others.
struct PhiAwareFactorization {
    std::vector<PhiFactor> phi_factors;
    std::vector<FactorBlock> other_factors;
    Integer content{1};
    Exponent x_power = 0;

    friend bool operator==(const PhiAwareFactorization& a, const PhiAwareFactorization& b) {
        return a.phi_factors == b.phi_factors && a.other_factors == b.other_factors && a.content == b.content &&
               a.x_power == b.x_power;
    }
};

struct CFactor {
    std::int64_t multiplicity;  // nonzero, may be negative
    std::uint64_t k;
    PrimeFactorization k_factorization;

    friend bool operator==(const CFactor&, const CFactor&) = default;
};

/// content * x^x_power * prod (x^k - 1)^m * prod others.
struct CAwareFactorization {
    std::vector<CFactor> c_factors;
    std::vector<FactorBlock> other_factors;
    Integer content{1};
    Exponent x_power = 0;

    friend bool operator==(const CAwareFactorization& a, const CAwareFactorization& b) {
        return a.c_factors == b.c_factors && a.other_factors == b.other_factors && a.content == b.content &&
               a.x_power == b.x_power;
    }
};

using Factorization = std::variant<PlainFactorization, PhiAwareFactorization, CAwareFactorization>;

/// Structural checks; throw DomainError (or NotAPolynomial for a C-aware
/// value whose net Phi multiplicities go negative).
void validate(const PlainFactorization& f);
void validate(const PhiAwareFactorization& f);
void validate(const CAwareFactorization& f);

/// Yun decomposition: f = content * prod g_i^i, g_i square-free, primitive,
/// positive leading coefficient, pairwise coprime. Sorted by degree then
/// ascending coefficient list.
PlainFactorization squarefree_decomposition(const SparsePoly& f);

/// Cyclotomic factors as Phi triples; the rest as square-free blocks.
PhiAwareFactorization factor_full(const SparsePoly& f);

/// Greedy descending-k grouping of complete divisor sets into C_k, leftovers
/// through Moebius. Entries are ascending in k.
CAwareFactorization to_c_aware(const PhiAwareFactorization& pf);
/// Net multiplicity m(d) = sum over stored k with d | k.
PhiAwareFactorization to_phi_aware(const CAwareFactorization& cf);

/// C entry for (x^k - 1)^m.
CFactor make_c_factor(std::uint64_t k, std::int64_t m);
PhiFactor make_phi_factor(std::uint64_t k, std::uint64_t m);

SparsePoly expand(const PlainFactorization& f);
SparsePoly expand(const PhiAwareFactorization& f);
SparsePoly expand(const CAwareFactorization& f);
SparsePoly expand(const Factorization& f);

std::uint64_t degree(const PlainFactorization& f);
std::uint64_t degree(const PhiAwareFactorization& f);
std::uint64_t degree(const CAwareFactorization& f);
std::uint64_t degree(const Factorization& f);

struct IrreducibleCount {
    std::uint64_t count;
    /// False when some counted block is a square-free but possibly
    /// reducible non-cyclotomic factor.
    bool guaranteed;
};
IrreducibleCount num_irreducible_factors(const PlainFactorization& f);
IrreducibleCount num_irreducible_factors(const PhiAwareFactorization& f);
IrreducibleCount num_irreducible_factors(const CAwareFactorization& f);
IrreducibleCount num_irreducible_factors(const Factorization& f);

std::uint64_t multiplicity_of_phi(const PlainFactorization& f, std::uint64_t k);
std::uint64_t multiplicity_of_phi(const PhiAwareFactorization& f, std::uint64_t k);
std::uint64_t multiplicity_of_phi(const CAwareFactorization& f, std::uint64_t k);
std::uint64_t multiplicity_of_phi(const Factorization& f, std::uint64_t k);

/*
 * Text form: items joined by " * ".
 *   Phi_k[^m]   C_k[^m] (m may be negative)   (poly)[^m]   x[^v]   content
 * Symbolic items come first, then bracketed factors, then x^v, then the
 * content when it is not 1. The empty product prints as "1".
 */
std::string to_string(const PlainFactorization& f);
std::string to_string(const PhiAwareFactorization& f);
std::string to_string(const CAwareFactorization& f);
std::string to_string(const Factorization& f);

/// Inverse of to_string. Any C_ item makes the result C-aware, any Phi_
/// item Phi-aware; otherwise it is plain and a bare x^v becomes the factor
/// x with multiplicity v. Mixing Phi_ and C_ is a ParseError.
Factorization parse_factorization(std::string_view text);

}  // namespace cyclorep

#endif  // CYCLOREP_FACTORREP_HPP
