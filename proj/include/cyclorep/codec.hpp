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

#ifndef CYCLOREP_CODEC_HPP
#define CYCLOREP_CODEC_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cyclorep/factorrep.hpp"
#include "cyclorep/poly.hpp"

namespace cyclorep {

/*
 * Blob = 7 header bytes ("CP", version 1, layout tag, inner tag, N, K)
 * followed by an MSB-first bitstream padded with zero bits to a byte.
 *
 * Field widths: degrees, counts, k indices and multiplicities take N bits,
 * the coefficient size k takes K bits, coefficients are (k+1)-bit two's
 * complement, C-aware multiplicities are (N+1)-bit two's complement. The k
 * field appears once per outermost structure and bounds every coefficient
 * in it, content included.
 *
 * Inside factorizations the content (when not 1) is a leading degree-0
 * factor with multiplicity 1; for Phi/C-aware values x^v follows it as the
 * factor x with multiplicity v.
 */

enum class Layout : std::uint8_t { Dense = 0, Sparse = 1, Plain = 2, PhiAware = 3, CAware = 4 };
enum class InnerPoly : std::uint8_t { Dense = 0, Sparse = 1 };

std::string to_string(Layout l);

using Representation =
    std::variant<DensePoly, SparsePoly, PlainFactorization, PhiAwareFactorization, CAwareFactorization>;

Layout layout_of(const Representation& v);

inline constexpr std::size_t kHeaderBytes = 7;
inline constexpr std::uint8_t kVersion = 1;

struct EncodedBlob {
    std::vector<std::uint8_t> bytes;  // header + body
    std::uint64_t body_bits = 0;      // before padding

    friend bool operator==(const EncodedBlob&, const EncodedBlob&) = default;
};

struct Decoded {
    Representation value;
    InnerPoly inner;
    unsigned n_bits;
    unsigned k_bits;
    std::uint64_t body_bits;
};

/// Throws DomainError for N or K outside 1..63 and CapacityError naming the
/// first field that does not fit.
EncodedBlob encode(const Representation& v, unsigned N, unsigned K, InnerPoly inner = InnerPoly::Sparse);
/// Throws MalformedBlob on any deviation from what encode would produce.
Decoded decode(std::span<const std::uint8_t> bytes);
std::uint64_t measured_bits(const Representation& v, unsigned N, unsigned K, InnerPoly inner = InnerPoly::Sparse);

/// Smallest k with every coefficient of f in -2^k .. 2^k - 1.
std::uint64_t coefficient_bits(const SparsePoly& f);

/// ceil(log2 n); 0 for n <= 1.
std::uint64_t ceil_log2(std::uint64_t n);

enum class PaperFormula {
    Dense,           // (k+1)(n+1) + log k + log n
    Sparse,          // log n + t(k + 1 + log n)
    FactorOverhead,  // (f+1) log n
    PhiOverhead,     // (3l+1) log n
};

struct PaperParameters {
    std::uint64_t n = 0;  // degree
    std::uint64_t t = 0;  // term count
    std::uint64_t k = 0;  // coefficient bits
    std::uint64_t f = 0;  // factor count
    std::uint64_t l = 0;  // Phi factor count
};

/// Closed forms with log2 read as ceil(log2). DomainError when n = 0 (and
/// k = 0 for the dense form).
std::uint64_t paper_size_bits(PaperFormula formula, const PaperParameters& p);

enum class TableVocab { Dense, Sparse, Phi, C };
enum class TableForm { Expanded, SquareFree, Factored };
std::string to_string(TableVocab v);
std::string to_string(TableForm f);

/// Cells of the size tables for x^n - 1 and for (x^p - 1)(x^q - 1), n = p+q.
/// The asymptotic dense/sparse factored cell of the first table is rounded up.
std::uint64_t table2_formula_bits(TableVocab v, TableForm f, std::uint64_t n);
std::uint64_t table3_formula_bits(TableVocab v, TableForm f, std::uint64_t p, std::uint64_t q);

struct SizeReport {
    std::uint64_t measured_bits;
    std::uint64_t paper_formula_bits;
    Layout layout;
    PaperParameters parameters;
};

/*
 * measured_bits next to a closed form. Polynomials use the dense or sparse
 * formula directly. Factorizations add the overhead formulas for their
 * symbolic part and for the block of other factors to the per-factor
 * closed form of each stored polynomial, with n the total degree.
 */
SizeReport size_report(const Representation& v, unsigned N, unsigned K, InnerPoly inner = InnerPoly::Sparse);

}  // namespace cyclorep

#endif  // CYCLOREP_CODEC_HPP
