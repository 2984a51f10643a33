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

#ifndef CYCLOREP_CYCLOTOMIC_HPP
#define CYCLOREP_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclorep/errors.hpp"
#include "cyclorep/poly.hpp"

namespace cyclorep {

struct CyclotomicPart {
    std::uint64_t k;
    std::uint64_t multiplicity;

    friend bool operator==(const CyclotomicPart&, const CyclotomicPart&) = default;
};

/// Phi_k^multiplicity factors, ascending and distinct in k.
struct CyclotomicDecomposition {
    std::vector<CyclotomicPart> parts;

    /// Sum of multiplicity * phi(k).
    std::uint64_t degree() const;
    /// Product of the Phi_k^multiplicity.
    SparsePoly expand() const;
    /// "Phi_15 * Phi_30"; "1" when empty.
    std::string to_string() const;

    friend bool operator==(const CyclotomicDecomposition&, const CyclotomicDecomposition&) = default;
};

struct HeightRecord {
    Integer height;
    std::uint64_t first_k;
    std::uint64_t phi_of_k;

    friend bool operator==(const HeightRecord& a, const HeightRecord& b) {
        return a.height == b.height && a.first_k == b.first_k && a.phi_of_k == b.phi_of_k;
    }
};

/// cyclotomic_decompose found a factor that is not a product of Phi_k.
class NotPureCyclotomic : public Error {
   public:
    NotPureCyclotomic(CyclotomicDecomposition found, SparsePoly residual);
    const CyclotomicDecomposition& found() const noexcept { return found_; }
    const SparsePoly& residual() const noexcept { return residual_; }

   private:
    CyclotomicDecomposition found_;
    SparsePoly residual_;
};

/// Phi_k via prod_{d | k} (x^d - 1)^mu(k/d). Memoized per process.
SparsePoly phi_poly(std::int64_t k);
/// Same as phi_poly, bypassing the memo.
SparsePoly compute_phi_poly(std::int64_t k);
/// x^n - 1
SparsePoly c_poly(std::int64_t n);

struct SubstitutionSplit {
    SparsePoly base;
    Exponent m;
};
/// Largest m with f(x) = g(x^m). Requires f(0) != 0.
SubstitutionSplit substitution_split(const SparsePoly& f);

enum class Verdict { Cyclotomic, NotCyclotomic, Unknown };
std::string to_string(Verdict v);

/*
 * Graeffe-iteration test for "every root of f is a root of unity".
 *
 * Works on the primitive square-free part h_0 of f with x^v removed and
 * iterates h_{j+1} = squarefree_part(graeffe(h_j)) at most
 * ceil(log2 deg f) + 2 times. A repeat of an earlier iterate (or of its
 * x -> -x image) proves the roots cycle under squaring; a height above
 * 2^deg f disproves it. Anything else is Unknown.
 */
Verdict is_cyclotomic_quick(const SparsePoly& f);

/// Authoritative decomposition of f into Phi_k. Requires f(0) != 0 and
/// content 1; throws NotPureCyclotomic when a non-unit residual remains.
CyclotomicDecomposition cyclotomic_decompose(const SparsePoly& f);

struct CyclotomicExtraction {
    CyclotomicDecomposition decomposition;
    Exponent x_power;
    /// Carries the content and sign of f; has no Phi_k divisor.
    SparsePoly cofactor;
};
/// f = x^x_power * expand(decomposition) * cofactor.
CyclotomicExtraction extract_cyclotomic_factors(const SparsePoly& f);

/// True when Phi_k divides f (exact test, sieved by evaluation at a k-th
/// root of unity modulo a prime p = 1 mod k).
bool phi_divides(const SparsePoly& f, std::uint64_t k);

/// Records of max |coeff| of Phi_k over k = 1..k_max. threads == 0 uses the
/// hardware concurrency. Output is ascending in k regardless of schedule.
std::vector<HeightRecord> height_records(std::int64_t k_max, unsigned threads = 0);

}  // namespace cyclorep

#endif  // CYCLOREP_CYCLOTOMIC_HPP
