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

#ifndef CYCLOREP_POLY_HPP
#define CYCLOREP_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclorep/errors.hpp"

namespace cyclorep {

using Integer = mpz_class;
using Exponent = std::uint64_t;

struct Term {
    Exponent exponent;
    Integer coefficient;

    friend bool operator==(const Term& a, const Term& b) {
        return a.exponent == b.exponent && a.coefficient == b.coefficient;
    }
};

/*
 * Univariate polynomial over Z stored as its nonzero terms, exponents
 * strictly descending. The zero polynomial has no terms and degree 0.
 */
class SparsePoly {
   public:
    SparsePoly() = default;

    /// Sorts, merges like terms and drops zeros.
    static SparsePoly from_terms(std::vector<Term> terms);
    static SparsePoly constant(Integer c);
    static SparsePoly monomial(Integer c, Exponent e);
    /// x^n - 1
    static SparsePoly binomial(Exponent n);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Exponent degree() const noexcept { return terms_.empty() ? 0 : terms_.front().exponent; }
    /// Smallest exponent present (the v of x^v dividing f); 0 for zero.
    Exponent low_degree() const noexcept { return terms_.empty() ? 0 : terms_.back().exponent; }
    Integer leading_coefficient() const;
    Integer trailing_coefficient() const;
    Integer coefficient(Exponent e) const;
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0); }

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& g);
    SparsePoly& operator-=(const SparsePoly& g);
    SparsePoly& operator*=(const SparsePoly& g);

    friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
    friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
    friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

   private:
    std::vector<Term> terms_;
};

/*
 * Dense coefficient vector, index i holding the coefficient of x^i. The zero
 * polynomial is the single coefficient 0.
 */
class DensePoly {
   public:
    DensePoly() : coeffs_{Integer(0)} {}
    /// Trailing zeros are trimmed.
    explicit DensePoly(std::vector<Integer> coefficients);

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    Exponent degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    const Integer& coefficient(Exponent i) const;
    const Integer& leading_coefficient() const noexcept { return coeffs_.back(); }

    DensePoly operator-() const;
    friend DensePoly operator+(const DensePoly& f, const DensePoly& g);
    friend DensePoly operator-(const DensePoly& f, const DensePoly& g);
    friend DensePoly operator*(const DensePoly& f, const DensePoly& g);
    friend bool operator==(const DensePoly&, const DensePoly&) = default;

   private:
    std::vector<Integer> coeffs_;
};

/// Thrown by div_exact when g does not divide f.
class RemainderError : public Error {
   public:
    explicit RemainderError(SparsePoly remainder);
    const SparsePoly& remainder() const noexcept { return remainder_; }

   private:
    SparsePoly remainder_;
};

// Arithmetic.
SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly sub(const SparsePoly& f, const SparsePoly& g);
SparsePoly mul(const SparsePoly& f, const SparsePoly& g);
SparsePoly negate(const SparsePoly& f);
SparsePoly pow(const SparsePoly& f, std::uint64_t e);
/// f * x^shift
SparsePoly shift(const SparsePoly& f, Exponent shift);
/// f / x^v; every exponent of f must be >= v.
SparsePoly shift_down(const SparsePoly& f, Exponent v);
/// f * c
SparsePoly scale(const SparsePoly& f, const Integer& c);
/// f / c, every coefficient must be divisible by c.
SparsePoly scale_down(const SparsePoly& f, const Integer& c);
/// Returns q with f = q * g; throws RemainderError or DomainError (g = 0).
SparsePoly div_exact(const SparsePoly& f, const SparsePoly& g);
/// As div_exact, but reports an inexact division as nullopt.
std::optional<SparsePoly> try_div_exact(const SparsePoly& f, const SparsePoly& g);

// Notation-block transforms.
/// x^deg(f) * f(1/x)
SparsePoly reverse(const SparsePoly& f);
/// f(-x)
SparsePoly negate_x(const SparsePoly& f);
/// f_e with f(x) = f_e(x^2) + x f_o(x^2)
SparsePoly even_part(const SparsePoly& f);
SparsePoly odd_part(const SparsePoly& f);
/// f(x^m)
SparsePoly inflate(const SparsePoly& f, Exponent m);
/// Root squaring: f_e(x)^2 - x f_o(x)^2, so that graeffe(f)(x^2) = f(x) f(-x).
SparsePoly graeffe(const SparsePoly& f);

struct Norms {
    Integer height;            // max |a_i|
    Integer one_norm;          // sum |a_i|
    Integer two_norm_squared;  // sum a_i^2
    std::size_t term_count;
};
Norms norms(const SparsePoly& f);
Integer height(const SparsePoly& f);

// Structure.
SparsePoly derivative(const SparsePoly& f);
/// gcd of the coefficients, >= 0; content(0) = 0.
Integer content(const SparsePoly& f);
/// f / (+-content) with a positive leading coefficient; zero maps to zero.
SparsePoly primitive_part(const SparsePoly& f);
/// Primitive gcd with positive leading coefficient. gcd(0, 0) is a DomainError.
SparsePoly gcd(const SparsePoly& f, const SparsePoly& g);
Integer eval_at(const SparsePoly& f, const Integer& x0);
/// f / gcd(f, f'), primitive with positive leading coefficient.
SparsePoly squarefree_part(const SparsePoly& f);

// Conversion.
DensePoly to_dense(const SparsePoly& f);
SparsePoly to_sparse(const DensePoly& f);

// Text. Grammar: ['-'] term (('+'|'-') term)*, term := coeff ['*' var] | var,
// var := 'x' ['^' uint]. Whitespace between tokens is ignored.
SparsePoly parse_poly(std::string_view text);
std::string format_poly(const SparsePoly& f);
std::ostream& operator<<(std::ostream& os, const SparsePoly& f);

}  // namespace cyclorep

#endif  // CYCLOREP_POLY_HPP
