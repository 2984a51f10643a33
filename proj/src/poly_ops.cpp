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
#include <utility>

#include "cyclorep/poly.hpp"

namespace cyclorep {

namespace {

using Coeffs = std::vector<Integer>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs dense_of(const SparsePoly& f) {
    Coeffs c(f.is_zero() ? 0 : f.degree() + 1);
    for (const auto& t : f.terms()) c[t.exponent] = t.coefficient;
    return c;
}

SparsePoly sparse_of(const Coeffs& c) {
    std::vector<Term> terms;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] != 0) terms.push_back({i, c[i]});
    }
    return SparsePoly::from_terms(std::move(terms));
}

// Divides out the content and makes the leading coefficient positive.
void make_primitive(Coeffs& c) {
    trim(c);
    if (c.empty()) return;
    Integer g = 0;
    for (const auto& a : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    if (c.back() < 0) g = -g;
    if (g == 1) return;
    for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

// Primitive pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Coeffs primitive_prem(Coeffs a, const Coeffs& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    Integer la;
    while (!a.empty() && a.size() - 1 >= db) {
        la = a.back();
        const std::size_t s = a.size() - 1 - db;
        for (auto& x : a) x *= lb;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[s + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
        make_primitive(a);
    }
    return a;
}

}  // namespace

SparsePoly reverse(const SparsePoly& f) {
    const Exponent n = f.degree();
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) terms.push_back({n - it->exponent, it->coefficient});
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly negate_x(const SparsePoly& f) {
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) {
        if (t.exponent & 1) t.coefficient = -t.coefficient;
    }
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly even_part(const SparsePoly& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if ((t.exponent & 1) == 0) terms.push_back({t.exponent / 2, t.coefficient});
    }
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly odd_part(const SparsePoly& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.exponent & 1) terms.push_back({t.exponent / 2, t.coefficient});
    }
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly inflate(const SparsePoly& f, Exponent m) {
    if (m == 0) throw DomainError("inflate: factor must be positive");
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.exponent *= m;
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly graeffe(const SparsePoly& f) {
    const SparsePoly fe = even_part(f);
    const SparsePoly fo = odd_part(f);
    return fe * fe - shift(fo * fo, 1);
}

Norms norms(const SparsePoly& f) {
    Norms n{Integer(0), Integer(0), Integer(0), f.term_count()};
    Integer a;
    for (const auto& t : f.terms()) {
        a = abs(t.coefficient);
        if (a > n.height) n.height = a;
        n.one_norm += a;
        mpz_addmul(n.two_norm_squared.get_mpz_t(), a.get_mpz_t(), a.get_mpz_t());
    }
    return n;
}

Integer height(const SparsePoly& f) {
    Integer h = 0;
    for (const auto& t : f.terms()) {
        if (mpz_cmpabs(t.coefficient.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(t.coefficient);
    }
    return h;
}

SparsePoly derivative(const SparsePoly& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.exponent == 0) continue;
        Integer e;
        mpz_set_ui(e.get_mpz_t(), t.exponent);
        terms.push_back({t.exponent - 1, t.coefficient * e});
    }
    return SparsePoly::from_terms(std::move(terms));
}

Integer content(const SparsePoly& f) {
    Integer g = 0;
    for (const auto& t : f.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

SparsePoly primitive_part(const SparsePoly& f) {
    if (f.is_zero()) return f;
    Integer c = content(f);
    if (f.leading_coefficient() < 0) c = -c;
    return c == 1 ? f : scale_down(f, c);
}

SparsePoly gcd(const SparsePoly& f, const SparsePoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd: both arguments are zero");
    if (f.is_zero()) return primitive_part(g);
    if (g.is_zero()) return primitive_part(f);
    Coeffs a = dense_of(f);
    Coeffs b = dense_of(g);
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Coeffs r = primitive_prem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return sparse_of(a);
}

Integer eval_at(const SparsePoly& f, const Integer& x0) {
    // Horner over the gaps between consecutive exponents.
    Integer acc = 0;
    Integer p;
    Exponent prev = f.degree();
    for (const auto& t : f.terms()) {
        if (prev > t.exponent) {
            mpz_pow_ui(p.get_mpz_t(), x0.get_mpz_t(), prev - t.exponent);
            acc *= p;
        }
        acc += t.coefficient;
        prev = t.exponent;
    }
    if (prev > 0 && !f.is_zero()) {
        mpz_pow_ui(p.get_mpz_t(), x0.get_mpz_t(), prev);
        acc *= p;
    }
    return acc;
}

SparsePoly squarefree_part(const SparsePoly& f) {
    if (f.is_zero()) throw DomainError("squarefree_part: zero polynomial");
    if (f.degree() == 0) return SparsePoly::constant(1);
    return primitive_part(div_exact(f, gcd(f, derivative(f))));
}

}  // namespace cyclorep
