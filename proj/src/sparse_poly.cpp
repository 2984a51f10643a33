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
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>

#include "cyclorep/poly.hpp"

namespace cyclorep {

namespace {

bool is_canonical(const std::vector<Term>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0) return false;
        if (i > 0 && terms[i - 1].exponent <= terms[i].exponent) return false;
    }
    return true;
}

// Above this degree div_exact works on a term map instead of a dense buffer.
constexpr Exponent kDenseDivisionLimit = Exponent{1} << 24;

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent > b[j].exponent)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exponent > a[i].exponent) {
            out.push_back({b[j].exponent, subtract ? Integer(-b[j].coefficient) : b[j].coefficient});
            ++j;
        } else {
            Integer c = subtract ? Integer(a[i].coefficient - b[j].coefficient)
                                 : Integer(a[i].coefficient + b[j].coefficient);
            if (c != 0) out.push_back({a[i].exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Returns nullopt on an inexact division; the partial remainder goes to *rem when requested.
std::optional<SparsePoly> div_dense(const SparsePoly& f, const SparsePoly& g, SparsePoly* rem) {
    const Exponent df = f.degree();
    const Exponent dg = g.degree();
    std::vector<Integer> r(df + 1);
    for (const auto& t : f.terms()) r[t.exponent] = t.coefficient;
    const Integer lc = g.leading_coefficient();
    const bool unit = (lc == 1 || lc == -1);
    std::vector<Term> q;
    Integer c;
    auto remainder_of = [&]() {
        std::vector<Term> left;
        for (Exponent i = df + 1; i-- > 0;) {
            if (r[i] != 0) left.push_back({i, r[i]});
        }
        return SparsePoly::from_terms(std::move(left));
    };
    for (Exponent i = df + 1; i-- > dg;) {
        if (r[i] == 0) continue;
        if (unit) {
            c = lc > 0 ? r[i] : Integer(-r[i]);
        } else {
            if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t())) {
                if (rem) *rem = remainder_of();
                return std::nullopt;
            }
            mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
        }
        const Exponent base = i - dg;
        for (const auto& t : g.terms()) {
            mpz_submul(r[base + t.exponent].get_mpz_t(), c.get_mpz_t(), t.coefficient.get_mpz_t());
        }
        q.push_back({base, c});
    }
    for (Exponent i = 0; i < dg; ++i) {
        if (r[i] != 0) {
            if (rem) *rem = remainder_of();
            return std::nullopt;
        }
    }
    return SparsePoly::from_terms(std::move(q));
}

std::optional<SparsePoly> div_sparse(const SparsePoly& f, const SparsePoly& g, SparsePoly* rem) {
    std::map<Exponent, Integer, std::greater<>> r;
    for (const auto& t : f.terms()) r.emplace(t.exponent, t.coefficient);
    const Exponent dg = g.degree();
    const Integer lc = g.leading_coefficient();
    std::vector<Term> q;
    auto remainder_of = [&]() {
        std::vector<Term> left;
        for (auto& [e, c] : r) left.push_back({e, c});
        return SparsePoly::from_terms(std::move(left));
    };
    while (!r.empty()) {
        auto top = r.begin();
        if (top->first < dg || !mpz_divisible_p(top->second.get_mpz_t(), lc.get_mpz_t())) {
            if (rem) *rem = remainder_of();
            return std::nullopt;
        }
        Integer c;
        mpz_divexact(c.get_mpz_t(), top->second.get_mpz_t(), lc.get_mpz_t());
        const Exponent base = top->first - dg;
        for (const auto& t : g.terms()) {
            auto [it, inserted] = r.try_emplace(base + t.exponent, 0);
            it->second -= c * t.coefficient;
            if (it->second == 0) r.erase(it);
        }
        q.push_back({base, std::move(c)});
    }
    return SparsePoly::from_terms(std::move(q));
}

}  // namespace

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
    SparsePoly out;
    if (is_canonical(terms)) {
        out.terms_ = std::move(terms);
        return out;
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
            out.terms_.back().coefficient += t.coefficient;
        } else {
            if (!out.terms_.empty() && out.terms_.back().coefficient == 0) out.terms_.pop_back();
            out.terms_.push_back(std::move(t));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().coefficient == 0) out.terms_.pop_back();
    return out;
}

SparsePoly SparsePoly::constant(Integer c) { return monomial(std::move(c), 0); }

SparsePoly SparsePoly::monomial(Integer c, Exponent e) {
    SparsePoly out;
    if (c != 0) out.terms_.push_back({e, std::move(c)});
    return out;
}

SparsePoly SparsePoly::binomial(Exponent n) {
    if (n == 0) return SparsePoly();
    SparsePoly out;
    out.terms_ = {{n, Integer(1)}, {0, Integer(-1)}};
    return out;
}

Integer SparsePoly::leading_coefficient() const { return terms_.empty() ? Integer(0) : terms_.front().coefficient; }

Integer SparsePoly::trailing_coefficient() const {
    if (terms_.empty() || terms_.back().exponent != 0) return Integer(0);
    return terms_.back().coefficient;
}

Integer SparsePoly::coefficient(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exponent x) { return t.exponent > x; });
    if (it != terms_.end() && it->exponent == e) return it->coefficient;
    return Integer(0);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& g) {
    terms_ = merge(terms_, g.terms_, false);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& g) {
    terms_ = merge(terms_, g.terms_, true);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& g) {
    *this = *this * g;
    return *this;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
    if (f.is_zero() || g.is_zero()) return SparsePoly();
    // Johnson's heap merge: one cursor per term of the shorter operand.
    const auto& rows = f.term_count() <= g.term_count() ? f.terms() : g.terms();
    const auto& cols = f.term_count() <= g.term_count() ? g.terms() : f.terms();
    struct Cursor {
        Exponent exponent;
        std::size_t row;
        std::size_t col;
        bool operator<(const Cursor& o) const { return exponent < o.exponent; }
    };
    std::priority_queue<Cursor> heap;
    for (std::size_t i = 0; i < rows.size(); ++i) heap.push({rows[i].exponent + cols[0].exponent, i, 0});

    std::vector<Term> out;
    Integer acc;
    while (!heap.empty()) {
        const Exponent e = heap.top().exponent;
        acc = 0;
        while (!heap.empty() && heap.top().exponent == e) {
            Cursor c = heap.top();
            heap.pop();
            mpz_addmul(acc.get_mpz_t(), rows[c.row].coefficient.get_mpz_t(), cols[c.col].coefficient.get_mpz_t());
            if (++c.col < cols.size()) {
                c.exponent = rows[c.row].exponent + cols[c.col].exponent;
                heap.push(c);
            }
        }
        if (acc != 0) out.push_back({e, acc});
    }
    return SparsePoly::from_terms(std::move(out));
}

RemainderError::RemainderError(SparsePoly remainder)
    : Error("division is not exact, remainder " + format_poly(remainder)), remainder_(std::move(remainder)) {}

SparsePoly add(const SparsePoly& f, const SparsePoly& g) { return f + g; }
SparsePoly sub(const SparsePoly& f, const SparsePoly& g) { return f - g; }
SparsePoly mul(const SparsePoly& f, const SparsePoly& g) { return f * g; }
SparsePoly negate(const SparsePoly& f) { return -f; }

SparsePoly pow(const SparsePoly& f, std::uint64_t e) {
    SparsePoly result = SparsePoly::constant(1);
    SparsePoly base = f;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

SparsePoly shift(const SparsePoly& f, Exponent s) {
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.exponent += s;
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly shift_down(const SparsePoly& f, Exponent v) {
    if (!f.is_zero() && f.low_degree() < v) throw DomainError("shift_down: x^" + std::to_string(v) + " does not divide");
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.exponent -= v;
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly scale(const SparsePoly& f, const Integer& c) {
    if (c == 0) return SparsePoly();
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.coefficient *= c;
    return SparsePoly::from_terms(std::move(terms));
}

SparsePoly scale_down(const SparsePoly& f, const Integer& c) {
    if (c == 0) throw DomainError("scale_down: division by zero");
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) {
        if (!mpz_divisible_p(t.coefficient.get_mpz_t(), c.get_mpz_t())) {
            throw DomainError("scale_down: coefficient not divisible by " + c.get_str());
        }
        mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
    }
    return SparsePoly::from_terms(std::move(terms));
}

namespace {

std::optional<SparsePoly> divide(const SparsePoly& f, const SparsePoly& g, SparsePoly* rem) {
    if (g.is_zero()) throw DomainError("div_exact: division by the zero polynomial");
    if (f.is_zero()) return SparsePoly();
    if (f.degree() < g.degree()) {
        if (rem) *rem = f;
        return std::nullopt;
    }
    if (f.degree() <= kDenseDivisionLimit) return div_dense(f, g, rem);
    return div_sparse(f, g, rem);
}

}  // namespace

SparsePoly div_exact(const SparsePoly& f, const SparsePoly& g) {
    SparsePoly rem;
    auto q = divide(f, g, &rem);
    if (!q) throw RemainderError(std::move(rem));
    return std::move(*q);
}

std::optional<SparsePoly> try_div_exact(const SparsePoly& f, const SparsePoly& g) { return divide(f, g, nullptr); }

}  // namespace cyclorep
