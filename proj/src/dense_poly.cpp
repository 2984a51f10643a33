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

#include <algorithm>

#include "cyclorep/poly.hpp"

namespace cyclorep {

namespace {

const Integer kZero(0);

}  // namespace

DensePoly::DensePoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

const Integer& DensePoly::coefficient(Exponent i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

DensePoly DensePoly::operator-() const {
    std::vector<Integer> c = coeffs_;
    for (auto& a : c) a = -a;
    return DensePoly(std::move(c));
}

DensePoly operator+(const DensePoly& f, const DensePoly& g) {
    std::vector<Integer> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coefficient(i) + g.coefficient(i);
    return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& f, const DensePoly& g) {
    std::vector<Integer> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coefficient(i) - g.coefficient(i);
    return DensePoly(std::move(c));
}

// Schoolbook.
DensePoly operator*(const DensePoly& f, const DensePoly& g) {
    if (f.is_zero() || g.is_zero()) return DensePoly();
    std::vector<Integer> c(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
        }
    }
    return DensePoly(std::move(c));
}

DensePoly to_dense(const SparsePoly& f) {
    std::vector<Integer> c(f.degree() + 1);
    for (const auto& t : f.terms()) c[t.exponent] = t.coefficient;
    return DensePoly(std::move(c));
}

SparsePoly to_sparse(const DensePoly& f) {
    std::vector<Term> terms;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] != 0) terms.push_back({i, c[i]});
    }
    return SparsePoly::from_terms(std::move(terms));
}

}  // namespace cyclorep
