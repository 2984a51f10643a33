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

#include "cyclorep/factorrep.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>

#include "cyclorep/cyclotomic.hpp"
#include "cyclorep/errors.hpp"

namespace cyclorep {

namespace {

std::int64_t as_signed(std::uint64_t k, const char* what) {
    if (k == 0 || k > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw DomainError(std::string(what) + ": index out of range: " + std::to_string(k));
    }
    return static_cast<std::int64_t>(k);
}

void validate_blocks(const std::vector<FactorBlock>& blocks, bool allow_x) {
    for (const auto& b : blocks) {
        if (b.multiplicity == 0) throw DomainError("factorization: zero multiplicity");
        if (b.factor.is_zero() || b.factor.degree() == 0) throw DomainError("factorization: constant factor");
        if (!allow_x && b.factor.low_degree() != 0) {
            throw DomainError("factorization: factor divisible by x; use the x power instead");
        }
    }
}

void require_content(const Integer& c) {
    if (c == 0) throw DomainError("factorization: zero content");
}

// Net Phi_d multiplicities implied by a list of C entries.
std::map<std::uint64_t, std::int64_t> net_phi(const std::vector<CFactor>& cs) {
    std::map<std::uint64_t, std::int64_t> m;
    for (const auto& c : cs) {
        for (auto d : divisors(c.k_factorization)) m[d] += c.multiplicity;
    }
    return m;
}

bool coeff_less(const SparsePoly& a, const SparsePoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    // Lexicographic from the constant term upward.
    auto ia = ta.rbegin();
    auto ib = tb.rbegin();
    Exponent e = 0;
    while (true) {
        const Integer ca = (ia != ta.rend() && ia->exponent == e) ? ia->coefficient : Integer(0);
        const Integer cb = (ib != tb.rend() && ib->exponent == e) ? ib->coefficient : Integer(0);
        if (ca != cb) return ca < cb;
        if (ia != ta.rend() && ia->exponent == e) ++ia;
        if (ib != tb.rend() && ib->exponent == e) ++ib;
        if (ia == ta.rend() && ib == tb.rend()) return false;
        Exponent next = std::numeric_limits<Exponent>::max();
        if (ia != ta.rend()) next = ia->exponent;
        if (ib != tb.rend()) next = std::min(next, ib->exponent);
        e = next;
    }
}

SparsePoly expand_blocks(const std::vector<FactorBlock>& blocks) {
    SparsePoly acc = SparsePoly::constant(1);
    for (const auto& b : blocks) acc *= pow(b.factor, b.multiplicity);
    return acc;
}

std::uint64_t blocks_degree(const std::vector<FactorBlock>& blocks) {
    std::uint64_t d = 0;
    for (const auto& b : blocks) d += b.multiplicity * b.factor.degree();
    return d;
}

// How many times Phi_k divides g.
std::uint64_t phi_power_in(SparsePoly g, std::uint64_t k) {
    std::uint64_t n = 0;
    const auto phi = phi_poly(as_signed(k, "multiplicity_of_phi"));
    if (g.degree() < phi.degree()) return 0;
    while (!g.is_zero() && g.degree() >= phi.degree() && phi_divides(g, k)) {
        g = div_exact(g, phi);
        ++n;
    }
    return n;
}

std::string power_suffix(std::int64_t m) { return m == 1 ? std::string() : "^" + std::to_string(m); }

void append_item(std::string& out, const std::string& item) {
    if (!out.empty()) out += " * ";
    out += item;
}

void append_tail(std::string& out, const std::vector<FactorBlock>& others, Exponent x_power, const Integer& content) {
    const SparsePoly x = SparsePoly::monomial(1, 1);
    for (const auto& b : others) {
        if (b.factor == x) {
            append_item(out, "x" + power_suffix(static_cast<std::int64_t>(b.multiplicity)));
        } else {
            append_item(out, "(" + format_poly(b.factor) + ")" + power_suffix(static_cast<std::int64_t>(b.multiplicity)));
        }
    }
    if (x_power > 0) append_item(out, "x" + power_suffix(static_cast<std::int64_t>(x_power)));
    if (content != 1 || out.empty()) append_item(out, content.get_str());
}

}  // namespace

void validate(const PlainFactorization& f) {
    require_content(f.content);
    validate_blocks(f.factors, true);
}

void validate(const PhiAwareFactorization& f) {
    require_content(f.content);
    std::set<std::uint64_t> seen;
    for (const auto& p : f.phi_factors) {
        if (p.multiplicity == 0) throw DomainError("phi-aware: zero multiplicity");
        const auto k = as_signed(p.k, "phi-aware");
        if (!seen.insert(p.k).second) throw DomainError("phi-aware: repeated k " + std::to_string(p.k));
        if (p.degree != totient(k)) {
            throw DomainError("phi-aware: stored degree of Phi_" + std::to_string(p.k) + " is not totient(k)");
        }
    }
    validate_blocks(f.other_factors, false);
}

void validate(const CAwareFactorization& f) {
    require_content(f.content);
    std::set<std::uint64_t> seen;
    for (const auto& c : f.c_factors) {
        if (c.multiplicity == 0) throw DomainError("c-aware: zero multiplicity");
        as_signed(c.k, "c-aware");
        if (!seen.insert(c.k).second) throw DomainError("c-aware: repeated k " + std::to_string(c.k));
        if (c.k_factorization.value() != c.k) {
            throw DomainError("c-aware: stored factorization does not multiply to " + std::to_string(c.k));
        }
    }
    validate_blocks(f.other_factors, false);
    for (const auto& [d, m] : net_phi(f.c_factors)) {
        if (m < 0) throw NotAPolynomial(d);
    }
}

PlainFactorization squarefree_decomposition(const SparsePoly& f) {
    if (f.is_zero()) throw DomainError("squarefree_decomposition: zero polynomial");
    PlainFactorization out;
    out.content = content(f);
    if (f.leading_coefficient() < 0) out.content = -out.content;
    const SparsePoly g = primitive_part(f);
    if (g.degree() == 0) return out;

    // Yun: every gcd is primitive, so the quotients stay in Z[x].
    const SparsePoly dg = derivative(g);
    const SparsePoly a = gcd(g, dg);
    SparsePoly b = div_exact(g, a);
    SparsePoly d = div_exact(dg, a) - derivative(b);
    for (std::uint64_t i = 1; b.degree() > 0; ++i) {
        const SparsePoly h = gcd(b, d);
        b = div_exact(b, h);
        d = div_exact(d, h) - derivative(b);
        if (h.degree() > 0) out.factors.push_back({i, h});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorBlock& x, const FactorBlock& y) { return coeff_less(x.factor, y.factor); });
    return out;
}

PhiAwareFactorization factor_full(const SparsePoly& f) {
    if (f.is_zero()) throw DomainError("factor_full: zero polynomial");
    const auto ext = extract_cyclotomic_factors(f);
    PhiAwareFactorization out;
    out.x_power = ext.x_power;
    for (const auto& part : ext.decomposition.parts) out.phi_factors.push_back(make_phi_factor(part.k, part.multiplicity));
    auto rest = squarefree_decomposition(ext.cofactor);
    out.content = std::move(rest.content);
    out.other_factors = std::move(rest.factors);
    return out;
}

PhiFactor make_phi_factor(std::uint64_t k, std::uint64_t m) {
    return {m, k, totient(as_signed(k, "make_phi_factor"))};
}

CFactor make_c_factor(std::uint64_t k, std::int64_t m) { return {m, k, factorize(as_signed(k, "make_c_factor"))}; }

CAwareFactorization to_c_aware(const PhiAwareFactorization& pf) {
    validate(pf);
    std::map<std::uint64_t, std::uint64_t> left;
    for (const auto& p : pf.phi_factors) left[p.k] = p.multiplicity;

    std::map<std::uint64_t, std::int64_t> net;
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        const std::uint64_t k = it->first;
        const auto divs = divisors(as_signed(k, "to_c_aware"));
        std::uint64_t g = std::numeric_limits<std::uint64_t>::max();
        for (auto d : divs) {
            auto f = left.find(d);
            g = std::min(g, f == left.end() ? 0 : f->second);
        }
        if (g == 0) continue;
        for (auto d : divs) left[d] -= g;
        net[k] += static_cast<std::int64_t>(g);
    }
    // Leftover Phi_k = prod_{d | k} C_d^mu(k/d).
    for (const auto& [k, m] : left) {
        if (m == 0) continue;
        const auto kk = as_signed(k, "to_c_aware");
        for (auto d : divisors(kk)) {
            const int mu = mobius(kk / static_cast<std::int64_t>(d));
            if (mu != 0) net[d] += mu * static_cast<std::int64_t>(m);
        }
    }

    CAwareFactorization out;
    for (const auto& [k, m] : net) {
        if (m != 0) out.c_factors.push_back(make_c_factor(k, m));
    }
    out.other_factors = pf.other_factors;
    out.content = pf.content;
    out.x_power = pf.x_power;
    return out;
}

PhiAwareFactorization to_phi_aware(const CAwareFactorization& cf) {
    validate(cf);
    PhiAwareFactorization out;
    for (const auto& [d, m] : net_phi(cf.c_factors)) {
        if (m > 0) out.phi_factors.push_back(make_phi_factor(d, static_cast<std::uint64_t>(m)));
    }
    out.other_factors = cf.other_factors;
    out.content = cf.content;
    out.x_power = cf.x_power;
    return out;
}

SparsePoly expand(const PlainFactorization& f) {
    validate(f);
    return scale(expand_blocks(f.factors), f.content);
}

SparsePoly expand(const PhiAwareFactorization& f) {
    validate(f);
    SparsePoly acc = expand_blocks(f.other_factors);
    for (const auto& p : f.phi_factors) acc *= pow(phi_poly(static_cast<std::int64_t>(p.k)), p.multiplicity);
    return shift(scale(acc, f.content), f.x_power);
}

SparsePoly expand(const CAwareFactorization& f) {
    validate(f);
    SparsePoly num = expand_blocks(f.other_factors);
    SparsePoly den = SparsePoly::constant(1);
    for (const auto& c : f.c_factors) {
        const auto m = static_cast<std::uint64_t>(c.multiplicity < 0 ? -c.multiplicity : c.multiplicity);
        (c.multiplicity > 0 ? num : den) *= pow(SparsePoly::binomial(c.k), m);
    }
    auto q = try_div_exact(num, den);
    if (!q) throw InvariantViolation("c-aware expand: negative multiplicities do not divide exactly");
    return shift(scale(*q, f.content), f.x_power);
}

SparsePoly expand(const Factorization& f) {
    return std::visit([](const auto& v) { return expand(v); }, f);
}

std::uint64_t degree(const PlainFactorization& f) {
    validate(f);
    return blocks_degree(f.factors);
}

std::uint64_t degree(const PhiAwareFactorization& f) {
    validate(f);
    std::uint64_t d = blocks_degree(f.other_factors) + f.x_power;
    for (const auto& p : f.phi_factors) d += p.multiplicity * p.degree;
    return d;
}

std::uint64_t degree(const CAwareFactorization& f) {
    validate(f);
    std::int64_t d = 0;
    for (const auto& c : f.c_factors) d += c.multiplicity * static_cast<std::int64_t>(c.k);
    return static_cast<std::uint64_t>(d) + blocks_degree(f.other_factors) + f.x_power;
}

std::uint64_t degree(const Factorization& f) {
    return std::visit([](const auto& v) { return degree(v); }, f);
}

IrreducibleCount num_irreducible_factors(const PlainFactorization& f) {
    validate(f);
    std::set<std::uint64_t> ks;
    bool has_x = false;
    IrreducibleCount out{0, true};
    for (const auto& b : f.factors) {
        const auto ext = extract_cyclotomic_factors(b.factor);
        for (const auto& p : ext.decomposition.parts) ks.insert(p.k);
        has_x = has_x || ext.x_power > 0;
        if (ext.cofactor.degree() > 0) {
            ++out.count;
            out.guaranteed = false;
        }
    }
    out.count += ks.size() + (has_x ? 1 : 0);
    return out;
}

IrreducibleCount num_irreducible_factors(const PhiAwareFactorization& f) {
    validate(f);
    return {f.phi_factors.size() + f.other_factors.size() + (f.x_power > 0 ? 1 : 0), f.other_factors.empty()};
}

IrreducibleCount num_irreducible_factors(const CAwareFactorization& f) {
    validate(f);
    std::uint64_t n = 0;
    for (const auto& [d, m] : net_phi(f.c_factors)) n += m > 0 ? 1 : 0;
    return {n + f.other_factors.size() + (f.x_power > 0 ? 1 : 0), f.other_factors.empty()};
}

IrreducibleCount num_irreducible_factors(const Factorization& f) {
    return std::visit([](const auto& v) { return num_irreducible_factors(v); }, f);
}

std::uint64_t multiplicity_of_phi(const PlainFactorization& f, std::uint64_t k) {
    validate(f);
    std::uint64_t n = 0;
    for (const auto& b : f.factors) n += b.multiplicity * phi_power_in(b.factor, k);
    return n;
}

std::uint64_t multiplicity_of_phi(const PhiAwareFactorization& f, std::uint64_t k) {
    validate(f);
    as_signed(k, "multiplicity_of_phi");
    std::uint64_t n = 0;
    for (const auto& p : f.phi_factors) n += p.k == k ? p.multiplicity : 0;
    // Others are cyclotomic-free when produced by factor_full, but a hand
    // built value may hide a Phi_k inside a block.
    for (const auto& b : f.other_factors) n += b.multiplicity * phi_power_in(b.factor, k);
    return n;
}

std::uint64_t multiplicity_of_phi(const CAwareFactorization& f, std::uint64_t k) {
    validate(f);
    as_signed(k, "multiplicity_of_phi");
    std::int64_t n = 0;
    for (const auto& c : f.c_factors) n += c.k % k == 0 ? c.multiplicity : 0;
    std::uint64_t out = static_cast<std::uint64_t>(n);
    for (const auto& b : f.other_factors) out += b.multiplicity * phi_power_in(b.factor, k);
    return out;
}

std::uint64_t multiplicity_of_phi(const Factorization& f, std::uint64_t k) {
    return std::visit([k](const auto& v) { return multiplicity_of_phi(v, k); }, f);
}

std::string to_string(const PlainFactorization& f) {
    std::string out;
    append_tail(out, f.factors, 0, f.content);
    return out;
}

std::string to_string(const PhiAwareFactorization& f) {
    std::string out;
    for (const auto& p : f.phi_factors) {
        append_item(out, "Phi_" + std::to_string(p.k) + power_suffix(static_cast<std::int64_t>(p.multiplicity)));
    }
    append_tail(out, f.other_factors, f.x_power, f.content);
    return out;
}

std::string to_string(const CAwareFactorization& f) {
    std::string out;
    // Numerator first so x^3+1 reads "C_6 * C_3^-1".
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& c : f.c_factors) {
            if ((c.multiplicity > 0) == (pass == 0)) {
                append_item(out, "C_" + std::to_string(c.k) + power_suffix(c.multiplicity));
            }
        }
    }
    append_tail(out, f.other_factors, f.x_power, f.content);
    return out;
}

std::string to_string(const Factorization& f) {
    return std::visit([](const auto& v) { return to_string(v); }, f);
}

namespace {

class FactorizationParser {
   public:
    explicit FactorizationParser(std::string_view text) : text_(text) {}

    Factorization run() {
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t i = 0; i <= text_.size(); ++i) {
            const char c = i < text_.size() ? text_[i] : '*';
            if (c == '(') ++depth;
            if (c == ')' && --depth < 0) throw ParseError("unbalanced ')'", i);
            if (c == '*' && depth == 0) {
                item(start, i);
                start = i + 1;
            }
        }
        if (depth != 0) throw ParseError("unbalanced '('", text_.size());
        return build();
    }

   private:
    std::string_view text_;
    std::map<std::uint64_t, std::int64_t> phi_, c_;
    std::vector<FactorBlock> blocks_;
    Exponent x_ = 0;
    Integer content_{1};

    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

    std::uint64_t number(std::string_view s, std::size_t pos) const {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size()) throw ParseError("expected an integer", pos);
        return v;
    }

    // "^m" suffix, or 1 when absent.
    std::int64_t power(std::string_view s, std::size_t pos, bool allow_negative) const {
        if (s.empty()) return 1;
        if (s[0] != '^') throw ParseError("expected '^'", pos);
        bool neg = s.size() > 1 && s[1] == '-';
        if (neg && !allow_negative) throw ParseError("negative multiplicity", pos + 1);
        const auto v = number(s.substr(neg ? 2 : 1), pos + (neg ? 2 : 1));
        if (v == 0 || v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            throw ParseError("multiplicity out of range", pos + 1);
        }
        return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    }

    void item(std::size_t begin, std::size_t end) {
        while (begin < end && is_space(text_[begin])) ++begin;
        while (end > begin && is_space(text_[end - 1])) --end;
        if (begin == end) throw ParseError("empty factor", begin);
        const std::string_view s = text_.substr(begin, end - begin);

        auto symbolic = [&](std::size_t prefix, bool allow_negative) {
            std::size_t digits = prefix;
            while (digits < s.size() && s[digits] >= '0' && s[digits] <= '9') ++digits;
            const auto k = number(s.substr(prefix, digits - prefix), begin + prefix);
            if (k == 0) throw ParseError("index must be positive", begin + prefix);
            return std::pair{k, power(s.substr(digits), begin + digits, allow_negative)};
        };

        if (s.starts_with("Phi_")) {
            auto [k, m] = symbolic(4, false);
            phi_[k] += m;
        } else if (s.starts_with("C_")) {
            auto [k, m] = symbolic(2, true);
            c_[k] += m;
        } else if (s[0] == '(') {
            const std::size_t close = s.rfind(')');
            SparsePoly g;
            try {
                g = parse_poly(s.substr(1, close - 1));
            } catch (const ParseError& e) {
                throw ParseError("bad factor", begin + 1 + e.position());
            }
            const auto m = power(s.substr(close + 1), begin + close + 1, false);
            blocks_.push_back({static_cast<std::uint64_t>(m), g});
        } else if (s[0] == 'x') {
            const auto v = power(s.substr(1), begin + 1, false);
            blocks_.push_back({static_cast<std::uint64_t>(v), SparsePoly::monomial(1, 1)});
        } else {
            Integer v;
            if (v.set_str(std::string(s), 10) != 0) throw ParseError("unrecognized factor", begin);
            content_ *= v;
        }
    }

    Factorization build() {
        if (!phi_.empty() && !c_.empty()) throw ParseError("cannot mix Phi_ and C_ factors", 0);
        if (!phi_.empty() || !c_.empty()) {
            // Constants and x-multiples inside brackets move into content and x power.
            std::vector<FactorBlock> others;
            for (auto& b : blocks_) {
                Integer c = content(b.factor);
                if (b.factor.leading_coefficient() < 0) c = -c;
                mpz_class cm;
                mpz_pow_ui(cm.get_mpz_t(), c.get_mpz_t(), b.multiplicity);
                content_ *= cm;
                x_ += b.multiplicity * b.factor.low_degree();
                SparsePoly g = shift_down(primitive_part(b.factor), b.factor.low_degree());
                if (g.degree() > 0) others.push_back({b.multiplicity, std::move(g)});
            }
            if (!c_.empty()) {
                CAwareFactorization out;
                for (const auto& [k, m] : c_) {
                    if (m != 0) out.c_factors.push_back(make_c_factor(k, m));
                }
                out.other_factors = std::move(others);
                out.content = content_;
                out.x_power = x_;
                validate(out);
                return out;
            }
            PhiAwareFactorization out;
            for (const auto& [k, m] : phi_) out.phi_factors.push_back(make_phi_factor(k, static_cast<std::uint64_t>(m)));
            out.other_factors = std::move(others);
            out.content = content_;
            out.x_power = x_;
            validate(out);
            return out;
        }
        PlainFactorization out;
        for (auto& b : blocks_) {
            if (b.factor.degree() == 0) {
                mpz_class cm;
                mpz_pow_ui(cm.get_mpz_t(), b.factor.leading_coefficient().get_mpz_t(), b.multiplicity);
                content_ *= cm;
            } else {
                out.factors.push_back(std::move(b));
            }
        }
        out.content = content_;
        validate(out);
        return out;
    }
};

}  // namespace

Factorization parse_factorization(std::string_view text) {
    try {
        return FactorizationParser(text).run();
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

}  // namespace cyclorep
