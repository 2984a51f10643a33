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

#include <cctype>
#include <limits>
#include <ostream>

#include "cyclorep/poly.hpp"

namespace cyclorep {

namespace {

class PolyParser {
   public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    SparsePoly parse() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        terms.push_back(term(negative));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return SparsePoly::from_terms(std::move(terms));
    }

   private:
    Term term(bool negative) {
        skip_ws();
        Term t{0, Integer(1)};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coefficient = Integer(digits());
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'x') fail("expected 'x' after '*'");
                t.exponent = var();
            }
        } else if (peek() == 'x') {
            t.exponent = var();
        } else {
            fail(at_end() ? "unexpected end of input" : "expected a coefficient or 'x'");
        }
        if (negative) t.coefficient = -t.coefficient;
        return t;
    }

    Exponent var() {
        ++pos_;  // 'x'
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        if (peek() == '-') throw DomainError("negative exponent at position " + std::to_string(pos_));
        const std::size_t start = pos_;
        const std::string e = digits();
        Integer big(e);
        if (big > std::numeric_limits<Exponent>::max()) {
            throw DomainError("exponent too large at position " + std::to_string(start));
        }
        return big.get_ui();
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = t.coefficient < 0;
        if (negative) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        first = false;
        const Integer mag = abs(t.coefficient);
        if (t.exponent == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str();
            out += '*';
        }
        out += 'x';
        if (t.exponent != 1) {
            out += '^';
            out += std::to_string(t.exponent);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& f) { return os << format_poly(f); }

}  // namespace cyclorep
