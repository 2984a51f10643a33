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

#include "cyclorep/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclorep/errors.hpp"
#include "cyclorep/numtheory.hpp"

namespace cyclorep {

namespace {

using u128 = unsigned __int128;

const SparsePoly& x_poly() {
    static const SparsePoly x = SparsePoly::monomial(1, 1);
    return x;
}

std::uint64_t integer_bits(const Integer& c) {
    if (c == 0 || c == -1) return 0;
    if (c > 0) return mpz_sizeinbase(c.get_mpz_t(), 2);
    const Integer m = -c - 1;
    return mpz_sizeinbase(m.get_mpz_t(), 2);
}

class BitWriter {
   public:
    void put(std::uint64_t v, unsigned width) {
        for (unsigned i = width; i-- > 0;) bit(((v >> i) & 1) != 0);
    }
    // Low `width` bits of c in two's complement.
    void put_signed(const Integer& c, std::uint64_t width) {
        Integer u;
        mpz_fdiv_r_2exp(u.get_mpz_t(), c.get_mpz_t(), width);
        for (std::uint64_t i = width; i-- > 0;) bit(mpz_tstbit(u.get_mpz_t(), i) != 0);
    }
    std::uint64_t bits() const { return bits_; }
    std::vector<std::uint8_t>& bytes() { return bytes_; }

   private:
    void bit(bool b) {
        if (bits_ % 8 == 0) bytes_.push_back(0);
        if (b) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
        ++bits_;
    }
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bits_ = 0;
};

class Encoder {
   public:
    Encoder(unsigned n, unsigned k) : n_(n), k_(k) {}

    void field(std::uint64_t v, const char* name) {
        if (v >> n_) throw CapacityError(name, std::to_string(v) + " does not fit in N=" + std::to_string(n_) + " bits");
        out_.put(v, n_);
    }

    void signed_field(std::int64_t m, const char* name) {
        const std::int64_t hi = (std::int64_t{1} << n_) - 1;
        if (m > hi || m < -hi - 1) {
            throw CapacityError(name, std::to_string(m) + " does not fit in N+1=" + std::to_string(n_ + 1) + " bits");
        }
        out_.put_signed(Integer(static_cast<long>(m)), n_ + 1);
    }

    void k_field(std::uint64_t k) {
        if (k >> k_) throw CapacityError("k", std::to_string(k) + " does not fit in K=" + std::to_string(k_) + " bits");
        out_.put(k, k_);
    }

    void dense(const SparsePoly& f, std::uint64_t k) {
        field(f.degree(), "Degree");
        const auto d = to_dense(f);
        for (const auto& c : d.coefficients()) out_.put_signed(c, k + 1);
    }

    void sparse(const SparsePoly& f, std::uint64_t k) {
        field(f.term_count(), "TermCount");
        for (const auto& t : f.terms()) {
            field(t.exponent, "Degree");
            out_.put_signed(t.coefficient, k + 1);
        }
    }

    void poly(const SparsePoly& f, InnerPoly inner, std::uint64_t k) {
        inner == InnerPoly::Dense ? dense(f, k) : sparse(f, k);
    }

    void plain_block(const std::vector<FactorBlock>& blocks, const Integer& content, Exponent x_power, InnerPoly inner) {
        std::uint64_t k = content != 1 ? integer_bits(content) : 0;
        if (x_power > 0) k = std::max<std::uint64_t>(k, 1);
        for (const auto& b : blocks) k = std::max(k, coefficient_bits(b.factor));
        k_field(k);
        field(blocks.size() + (content != 1 ? 1 : 0) + (x_power > 0 ? 1 : 0), "FactorCount");
        if (content != 1) {
            field(1, "Multiplicity");
            poly(SparsePoly::constant(content), inner, k);
        }
        if (x_power > 0) {
            field(x_power, "Multiplicity");
            poly(x_poly(), inner, k);
        }
        for (const auto& b : blocks) {
            field(b.multiplicity, "Multiplicity");
            poly(b.factor, inner, k);
        }
    }

    BitWriter& out() { return out_; }

   private:
    unsigned n_, k_;
    BitWriter out_;
};

void encode_body(Encoder& e, const Representation& v, InnerPoly inner) {
    struct Visitor {
        Encoder& e;
        InnerPoly inner;
        void operator()(const DensePoly& p) const {
            const auto f = to_sparse(p);
            const auto k = coefficient_bits(f);
            // Degree comes before k in the dense layout.
            e.field(f.degree(), "Degree");
            e.k_field(k);
            for (const auto& c : p.coefficients()) e.out().put_signed(c, k + 1);
        }
        void operator()(const SparsePoly& f) const {
            const auto k = coefficient_bits(f);
            e.k_field(k);
            e.sparse(f, k);
        }
        void operator()(const PlainFactorization& f) const {
            validate(f);
            e.plain_block(f.factors, f.content, 0, inner);
        }
        void operator()(const PhiAwareFactorization& f) const {
            validate(f);
            e.field(f.phi_factors.size(), "PhiFactorCount");
            for (const auto& p : f.phi_factors) {
                e.field(p.multiplicity, "Multiplicity");
                e.field(p.k, "k");
                e.field(p.degree, "Degree");
            }
            e.plain_block(f.other_factors, f.content, f.x_power, inner);
        }
        void operator()(const CAwareFactorization& f) const {
            validate(f);
            e.field(f.c_factors.size(), "CFactorCount");
            for (const auto& c : f.c_factors) {
                e.signed_field(c.multiplicity, "Multiplicity");
                e.field(c.k, "Degree");
                const auto primes = c.k_factorization.with_repetition();
                e.field(primes.size(), "NumFactors");
                for (auto p : primes) e.field(p, "KFactor");
            }
            e.plain_block(f.other_factors, f.content, f.x_power, inner);
        }
    };
    std::visit(Visitor{e, inner}, v);
}

void check_widths(unsigned N, unsigned K) {
    if (N < 1 || N > 63) throw DomainError("codec: N must be in 1..63, got " + std::to_string(N));
    if (K < 1 || K > 63) throw DomainError("codec: K must be in 1..63, got " + std::to_string(K));
}

class BitReader {
   public:
    BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes), limit_(u128{bytes.size()} * 8) {}

    u128 remaining() const { return limit_ - pos_; }

    void need(u128 bits) const {
        if (bits > remaining()) throw MalformedBlob("truncated body");
    }

    std::uint64_t get(unsigned width) {
        need(width);
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i) v = (v << 1) | bit();
        return v;
    }

    Integer get_signed(std::uint64_t width) {
        need(width);
        Integer v = 0;
        const bool negative = bit() != 0;
        for (std::uint64_t i = 1; i < width; ++i) {
            if (bit()) mpz_setbit(v.get_mpz_t(), width - 1 - i);
        }
        if (negative) {
            Integer top;
            mpz_ui_pow_ui(top.get_mpz_t(), 2, width - 1);
            v -= top;
        }
        return v;
    }

    std::uint64_t position() const { return static_cast<std::uint64_t>(pos_); }

    void finish() {
        if (remaining() >= 8) throw MalformedBlob("trailing bytes after body");
        while (remaining() > 0) {
            if (bit()) throw MalformedBlob("nonzero padding bits");
        }
    }

   private:
    unsigned bit() {
        const auto i = static_cast<std::size_t>(pos_ / 8);
        const unsigned b = (bytes_[i] >> (7 - static_cast<unsigned>(pos_ % 8))) & 1u;
        ++pos_;
        return b;
    }
    std::span<const std::uint8_t> bytes_;
    u128 limit_;
    u128 pos_ = 0;
};

class Decoder {
   public:
    Decoder(std::span<const std::uint8_t> body, unsigned n, unsigned k) : in_(body), n_(n), k_(k) {}

    std::uint64_t field() { return in_.get(n_); }
    std::uint64_t k_field() { return in_.get(k_); }

    std::int64_t signed_field() {
        const Integer v = in_.get_signed(n_ + 1);
        return static_cast<std::int64_t>(v.get_si());
    }

    SparsePoly dense(std::uint64_t k) {
        const std::uint64_t deg = field();
        in_.need((u128{deg} + 1) * (u128{k} + 1));
        std::vector<Term> terms;
        for (std::uint64_t e = 0; e <= deg; ++e) {
            Integer c = in_.get_signed(k + 1);
            if (e == deg && c == 0 && deg > 0) throw MalformedBlob("dense polynomial with zero leading coefficient");
            if (c != 0) terms.push_back({e, std::move(c)});
        }
        return SparsePoly::from_terms(std::move(terms));
    }

    SparsePoly sparse(std::uint64_t k) {
        const std::uint64_t count = field();
        in_.need(u128{count} * (n_ + k + 1));
        std::vector<Term> terms;
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t e = field();
            Integer c = in_.get_signed(k + 1);
            if (c == 0) throw MalformedBlob("sparse term with zero coefficient");
            if (!terms.empty() && e >= terms.back().exponent) throw MalformedBlob("sparse terms not strictly descending");
            terms.push_back({e, std::move(c)});
        }
        return SparsePoly::from_terms(std::move(terms));
    }

    SparsePoly poly(InnerPoly inner, std::uint64_t k) { return inner == InnerPoly::Dense ? dense(k) : sparse(k); }

    struct Block {
        std::vector<FactorBlock> blocks;
        Integer content{1};
        Exponent x_power = 0;
    };

    Block plain_block(InnerPoly inner, bool x_separate) {
        Block out;
        const std::uint64_t k = k_field();
        const std::uint64_t count = field();
        in_.need(u128{count} * 2 * n_);
        std::uint64_t seen_k = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t m = field();
            SparsePoly g = poly(inner, k);
            seen_k = std::max(seen_k, coefficient_bits(g));
            if (i == 0 && g.degree() == 0) {
                if (m != 1 || g.is_zero() || g.leading_coefficient() == 1) {
                    throw MalformedBlob("non-canonical content factor");
                }
                out.content = g.leading_coefficient();
            } else if (x_separate && g == x_poly() && out.x_power == 0 && out.blocks.empty()) {
                if (m == 0) throw MalformedBlob("zero multiplicity");
                out.x_power = m;
            } else {
                out.blocks.push_back({m, std::move(g)});
            }
        }
        if (seen_k != k) throw MalformedBlob("coefficient size field is not minimal");
        return out;
    }

    BitReader& in() { return in_; }

   private:
    BitReader in_;
    unsigned n_, k_;
};

Representation decode_body(Decoder& d, Layout layout, InnerPoly inner) {
    switch (layout) {
        case Layout::Dense: {
            const std::uint64_t deg = d.field();
            const std::uint64_t k = d.k_field();
            d.in().need((u128{deg} + 1) * (u128{k} + 1));
            std::vector<Integer> c;
            for (std::uint64_t e = 0; e <= deg; ++e) c.push_back(d.in().get_signed(k + 1));
            if (deg > 0 && c.back() == 0) throw MalformedBlob("dense polynomial with zero leading coefficient");
            DensePoly p(std::move(c));
            if (coefficient_bits(to_sparse(p)) != k) throw MalformedBlob("coefficient size field is not minimal");
            return p;
        }
        case Layout::Sparse: {
            const std::uint64_t k = d.k_field();
            SparsePoly f = d.sparse(k);
            if (coefficient_bits(f) != k) throw MalformedBlob("coefficient size field is not minimal");
            return f;
        }
        case Layout::Plain: {
            auto b = d.plain_block(inner, false);
            PlainFactorization f{std::move(b.blocks), std::move(b.content)};
            validate(f);
            return f;
        }
        case Layout::PhiAware: {
            PhiAwareFactorization f;
            const std::uint64_t count = d.field();
            for (std::uint64_t i = 0; i < count; ++i) {
                PhiFactor p{};
                p.multiplicity = d.field();
                p.k = d.field();
                p.degree = d.field();
                f.phi_factors.push_back(p);
            }
            auto b = d.plain_block(inner, true);
            f.other_factors = std::move(b.blocks);
            f.content = std::move(b.content);
            f.x_power = b.x_power;
            validate(f);
            return f;
        }
        case Layout::CAware: {
            CAwareFactorization f;
            const std::uint64_t count = d.field();
            for (std::uint64_t i = 0; i < count; ++i) {
                CFactor c{};
                c.multiplicity = d.signed_field();
                c.k = d.field();
                const std::uint64_t nf = d.field();
                d.in().need(u128{nf});
                std::vector<std::uint64_t> primes;
                for (std::uint64_t j = 0; j < nf; ++j) primes.push_back(d.field());
                c.k_factorization = PrimeFactorization::from_repeated(primes);
                f.c_factors.push_back(std::move(c));
            }
            auto b = d.plain_block(inner, true);
            f.other_factors = std::move(b.blocks);
            f.content = std::move(b.content);
            f.x_power = b.x_power;
            validate(f);
            return f;
        }
    }
    throw MalformedBlob("unknown layout");
}

std::uint64_t clog(std::uint64_t n) { return ceil_log2(n); }

std::uint64_t inner_formula(const SparsePoly& f, std::uint64_t k, InnerPoly inner) {
    const std::uint64_t n = f.degree();
    if (inner == InnerPoly::Dense) return (k + 1) * (n + 1) + clog(k) + clog(n);
    return clog(n) + f.term_count() * (k + 1 + clog(n));
}

}  // namespace

std::string to_string(Layout l) {
    switch (l) {
        case Layout::Dense: return "dense";
        case Layout::Sparse: return "sparse";
        case Layout::Plain: return "plain";
        case Layout::PhiAware: return "phi";
        case Layout::CAware: return "c";
    }
    return "?";
}

Layout layout_of(const Representation& v) { return static_cast<Layout>(v.index()); }

std::uint64_t coefficient_bits(const SparsePoly& f) {
    std::uint64_t k = 0;
    for (const auto& t : f.terms()) k = std::max(k, integer_bits(t.coefficient));
    return k;
}

std::uint64_t ceil_log2(std::uint64_t n) {
    std::uint64_t b = 0;
    while (b < 64 && (std::uint64_t{1} << b) < n) ++b;
    return b;
}

EncodedBlob encode(const Representation& v, unsigned N, unsigned K, InnerPoly inner) {
    check_widths(N, K);
    const Layout layout = layout_of(v);
    if (layout == Layout::Dense) inner = InnerPoly::Dense;
    if (layout == Layout::Sparse) inner = InnerPoly::Sparse;
    Encoder e(N, K);
    encode_body(e, v, inner);
    EncodedBlob blob;
    blob.body_bits = e.out().bits();
    blob.bytes = {'C',
                  'P',
                  kVersion,
                  static_cast<std::uint8_t>(layout),
                  static_cast<std::uint8_t>(inner),
                  static_cast<std::uint8_t>(N),
                  static_cast<std::uint8_t>(K)};
    const auto& body = e.out().bytes();
    for (auto b : body) blob.bytes.push_back(b);
    return blob;
}

Decoded decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderBytes) throw MalformedBlob("blob shorter than its header");
    if (bytes[0] != 'C' || bytes[1] != 'P') throw MalformedBlob("bad magic");
    if (bytes[2] != kVersion) throw MalformedBlob("unsupported version " + std::to_string(bytes[2]));
    if (bytes[3] > 4) throw MalformedBlob("unknown layout tag " + std::to_string(bytes[3]));
    const auto layout = static_cast<Layout>(bytes[3]);
    InnerPoly inner;
    if (layout == Layout::Dense || layout == Layout::Sparse) {
        inner = layout == Layout::Dense ? InnerPoly::Dense : InnerPoly::Sparse;
    } else {
        if (bytes[4] > 1) throw MalformedBlob("unknown inner polynomial tag " + std::to_string(bytes[4]));
        inner = static_cast<InnerPoly>(bytes[4]);
    }
    const unsigned N = bytes[5];
    const unsigned K = bytes[6];
    if (N < 1 || N > 63 || K < 1 || K > 63) throw MalformedBlob("N and K must lie in 1..63");

    Decoder d(bytes.subspan(kHeaderBytes), N, K);
    Representation value;
    try {
        value = decode_body(d, layout, inner);
    } catch (const MalformedBlob&) {
        throw;
    } catch (const Error& e) {
        throw MalformedBlob(std::string("invalid value: ") + e.what());
    }
    const std::uint64_t body_bits = d.in().position();
    d.in().finish();
    return {std::move(value), inner, N, K, body_bits};
}

std::uint64_t measured_bits(const Representation& v, unsigned N, unsigned K, InnerPoly inner) {
    check_widths(N, K);
    Encoder e(N, K);
    encode_body(e, v, inner);
    return e.out().bits();
}

std::uint64_t paper_size_bits(PaperFormula formula, const PaperParameters& p) {
    if (p.n == 0) throw DomainError("paper_size_bits: n must be positive");
    const std::uint64_t L = clog(p.n);
    switch (formula) {
        case PaperFormula::Dense:
            if (p.k == 0) throw DomainError("paper_size_bits: k must be positive for the dense form");
            return (p.k + 1) * (p.n + 1) + clog(p.k) + L;
        case PaperFormula::Sparse: return L + p.t * (p.k + 1 + L);
        case PaperFormula::FactorOverhead: return (p.f + 1) * L;
        case PaperFormula::PhiOverhead: return (3 * p.l + 1) * L;
    }
    throw DomainError("paper_size_bits: unknown formula");
}

std::string to_string(TableVocab v) {
    switch (v) {
        case TableVocab::Dense: return "dense";
        case TableVocab::Sparse: return "sparse";
        case TableVocab::Phi: return "phi";
        case TableVocab::C: return "c";
    }
    return "?";
}

std::string to_string(TableForm f) {
    switch (f) {
        case TableForm::Expanded: return "expanded";
        case TableForm::SquareFree: return "square-free";
        case TableForm::Factored: return "factored";
    }
    return "?";
}

std::uint64_t table2_formula_bits(TableVocab v, TableForm f, std::uint64_t n) {
    if (n < 3) throw DomainError("table 2 formulas need n >= 3");
    const std::uint64_t L = clog(n);
    // The square-free and factored columns coincide here.
    if (f == TableForm::Expanded) return v == TableVocab::Dense ? 2 * (n + 1) + L : 3 * L;
    switch (v) {
        case TableVocab::Dense:
        case TableVocab::Sparse: {
            const double ln = std::log(static_cast<double>(n));
            const double e = 1.0 + std::log(2.0) / std::log(ln);
            return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n), e) * std::log2(std::exp(1.0))));
        }
        case TableVocab::Phi: return (2 * divisor_count(static_cast<std::int64_t>(n)) + 1) * L;
        case TableVocab::C: return L;
    }
    throw DomainError("table 2: unknown vocabulary");
}

std::uint64_t table3_formula_bits(TableVocab v, TableForm f, std::uint64_t p, std::uint64_t q) {
    if (p == q || !is_prime(p) || !is_prime(q)) throw DomainError("table 3 needs distinct primes p, q");
    const std::uint64_t n = p + q;
    const std::uint64_t L = clog(n);
    switch (v) {
        case TableVocab::Dense:
            if (f == TableForm::Expanded) return 2 * (n + 1) + L;
            if (f == TableForm::SquareFree) return (1 + L) * (n + 2) + 4 * L;
            return 2 * (n + 3) + 6 * L;
        case TableVocab::Sparse:
            if (f == TableForm::Expanded) return 4 * L;
            if (f == TableForm::SquareFree) return (2 * n + 2) * L;
            return (n + 10) * L;
        case TableVocab::Phi: return f == TableForm::Expanded ? 4 * L : 6 * L;
        case TableVocab::C: return f == TableForm::Expanded ? 4 * L : 2 * L;
    }
    throw DomainError("table 3: unknown vocabulary");
}

SizeReport size_report(const Representation& v, unsigned N, unsigned K, InnerPoly inner) {
    SizeReport r{};
    r.layout = layout_of(v);
    r.measured_bits = measured_bits(v, N, K, inner);
    auto& p = r.parameters;

    auto others_bits = [&](const std::vector<FactorBlock>& blocks, const Integer& content, Exponent x_power,
                      std::uint64_t total_degree) {
        std::uint64_t k = content != 1 ? integer_bits(content) : 0;
        for (const auto& b : blocks) k = std::max(k, coefficient_bits(b.factor));
        if (x_power > 0) k = std::max<std::uint64_t>(k, 1);
        p.k = k;
        p.n = std::max<std::uint64_t>(total_degree, 1);
        p.f = blocks.size() + (content != 1 ? 1 : 0) + (x_power > 0 ? 1 : 0);
        std::uint64_t bits = paper_size_bits(PaperFormula::FactorOverhead, p);
        for (const auto& b : blocks) bits += inner_formula(b.factor, k, inner);
        if (content != 1) bits += inner_formula(SparsePoly::constant(content), k, inner);
        if (x_power > 0) bits += inner_formula(x_poly(), k, inner);
        return bits;
    };

    struct Visitor {
        SizeReport& r;
        decltype(others_bits)& others;
        void operator()(const DensePoly& d) const {
            const auto f = to_sparse(d);
            r.parameters = {std::max<std::uint64_t>(f.degree(), 1), f.term_count(), std::max<std::uint64_t>(coefficient_bits(f), 1), 0, 0};
            r.paper_formula_bits = paper_size_bits(PaperFormula::Dense, r.parameters);
        }
        void operator()(const SparsePoly& f) const {
            r.parameters = {std::max<std::uint64_t>(f.degree(), 1), f.term_count(), coefficient_bits(f), 0, 0};
            r.paper_formula_bits = paper_size_bits(PaperFormula::Sparse, r.parameters);
        }
        void operator()(const PlainFactorization& f) const {
            r.paper_formula_bits = others(f.factors, f.content, 0, degree(f));
        }
        void operator()(const PhiAwareFactorization& f) const {
            std::uint64_t bits = others(f.other_factors, f.content, f.x_power, degree(f));
            r.parameters.l = f.phi_factors.size();
            r.paper_formula_bits = bits + paper_size_bits(PaperFormula::PhiOverhead, r.parameters);
        }
        void operator()(const CAwareFactorization& f) const {
            std::uint64_t bits = others(f.other_factors, f.content, f.x_power, degree(f));
            PaperParameters c = r.parameters;
            c.f = f.c_factors.size();
            r.paper_formula_bits = bits + paper_size_bits(PaperFormula::FactorOverhead, c);
        }
    };
    std::visit(Visitor{r, others_bits}, v);
    return r;
}

}  // namespace cyclorep
