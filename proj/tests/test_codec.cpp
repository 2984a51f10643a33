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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "cyclorep/codec.hpp"
#include "cyclorep/cyclotomic.hpp"
#include "fuzz_values.hpp"

using namespace cyclorep;

namespace {

SparsePoly P(const char* text) { return parse_poly(text); }

using namespace fuzz;

std::vector<std::uint8_t> header(std::uint8_t layout, std::uint8_t inner, std::uint8_t n, std::uint8_t k) {
    return {'C', 'P', 1, layout, inner, n, k};
}

}  // namespace

TEST(Codec, PinnedLayoutSums) {
    // k field, TermCount, two (Degree, 2-bit coefficient) pairs.
    EXPECT_EQ(measured_bits(P("x^200-1"), 8, 4), 4u + 8 + 2 * (8 + 2));
    EXPECT_EQ(measured_bits(P("x^105-1"), 8, 6), 34u);
    // Degree, k, two 2-bit coefficients.
    EXPECT_EQ(measured_bits(to_dense(P("x-1")), 4, 4), 12u);
    // PhiFactorCount, eight (Multiplicity, k, Degree) triples, then an empty
    // block of other factors: its k field and a zero FactorCount.
    const Representation phi105 = factor_full(P("x^105-1"));
    for (unsigned K : {4u, 6u, 9u}) EXPECT_EQ(measured_bits(phi105, 8, K), 8u + 8 * 3 * 8 + K + 8);
    // CFactorCount, (N+1)-bit multiplicity, k, NumFactors, three primes, empty block.
    EXPECT_EQ(measured_bits(to_c_aware(factor_full(P("x^105-1"))), 8, 6), 8u + 9 + 8 + 8 + 3 * 8 + 6 + 8);
}

TEST(Codec, MeasuredBitsMatchClosedForms) {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const SparsePoly f = random_poly(rng, 200, 15, 40);
        const auto k = coefficient_bits(f);
        EXPECT_EQ(measured_bits(f, 10, 8), 8 + 10 + f.term_count() * (10 + k + 1));
        EXPECT_EQ(measured_bits(to_dense(f), 10, 8), 10 + 8 + (f.degree() + 1) * (k + 1));
    }
    for (std::int64_t n : {6, 30, 105, 210}) {
        const auto pf = factor_full(c_poly(n));
        const std::uint64_t l = pf.phi_factors.size();
        EXPECT_EQ(measured_bits(pf, 12, 5), 12 + 3 * l * 12 + 12 + 5);
    }
}

TEST(Codec, RoundTripExamples) {
    const auto blob = encode(P("x^105-1"), 8, 6);
    EXPECT_EQ(blob.bytes.size(), kHeaderBytes + 5);
    EXPECT_EQ(blob.body_bits, 34u);
    const auto back = decode(blob.bytes);
    EXPECT_EQ(std::get<SparsePoly>(back.value), P("x^105-1"));
    EXPECT_EQ(back.n_bits, 8u);
    EXPECT_EQ(back.k_bits, 6u);

    CAwareFactorization xk1;
    xk1.c_factors = {make_c_factor(3, -1), make_c_factor(6, 1)};
    const auto c = decode(encode(xk1, 8, 4).bytes);
    const auto& cv = std::get<CAwareFactorization>(c.value);
    EXPECT_EQ(cv, xk1);
    EXPECT_EQ(cv.c_factors[0].multiplicity, -1);
    EXPECT_EQ(expand(cv), P("x^3+1"));

    const auto neg = factor_full(P("-12*x^7+12*x^3"));
    for (auto inner : {InnerPoly::Dense, InnerPoly::Sparse}) {
        const auto d = decode(encode(neg, 8, 4, inner).bytes);
        EXPECT_EQ(std::get<PhiAwareFactorization>(d.value), neg);
        EXPECT_EQ(d.inner, inner);
    }
}

TEST(Codec, HeaderBytes) {
    const auto blob = encode(factor_full(P("x^8+x^5+x^3+1")), 9, 3, InnerPoly::Dense);
    ASSERT_GE(blob.bytes.size(), kHeaderBytes);
    EXPECT_EQ(std::vector<std::uint8_t>(blob.bytes.begin(), blob.bytes.begin() + 7), header(3, 0, 9, 3));
    // MSB first: PhiFactorCount = 3 in 9 bits is 000000011.
    EXPECT_EQ(blob.bytes[7], 0x01);
    EXPECT_EQ(blob.bytes[8] & 0x80, 0x80);
}

TEST(Codec, FuzzRoundTripEveryLayout) {
    Rng rng(32);
    for (auto layout : {Layout::Dense, Layout::Sparse, Layout::Plain, Layout::PhiAware, Layout::CAware}) {
        for (int i = 0; i < 1000; ++i) {
            const Representation v = random_value(rng, layout);
            const unsigned N = 13 + static_cast<unsigned>(rng() % 40);
            const unsigned K = 7 + static_cast<unsigned>(rng() % 50);
            const auto inner = rng() % 2 ? InnerPoly::Dense : InnerPoly::Sparse;
            const auto blob = encode(v, N, K, inner);
            const auto bits = measured_bits(v, N, K, inner);
            ASSERT_EQ(blob.body_bits, bits);
            ASSERT_EQ(blob.bytes.size(), kHeaderBytes + (bits + 7) / 8);
            ASSERT_LT(8 * (blob.bytes.size() - kHeaderBytes) - bits, 8u);
            const auto d = decode(blob.bytes);
            ASSERT_EQ(d.value, v) << to_string(layout) << " case " << i;
            ASSERT_EQ(d.body_bits, bits);
            ASSERT_EQ(encode(d.value, N, K, inner), blob);
        }
    }
}

TEST(Codec, MonotoneInWidths) {
    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        for (auto layout : {Layout::Dense, Layout::Sparse, Layout::Plain, Layout::PhiAware, Layout::CAware}) {
            const Representation v = random_value(rng, layout);
            std::uint64_t prev = 0;
            for (unsigned N = 13; N < 63; N += 7) {
                const auto b = measured_bits(v, N, 8);
                ASSERT_GE(b, prev);
                prev = b;
            }
            prev = 0;
            for (unsigned K = 7; K < 63; K += 5) {
                const auto b = measured_bits(v, 20, K);
                ASSERT_GE(b, prev);
                prev = b;
            }
        }
    }
}

TEST(Codec, CapacityErrors) {
    try {
        encode(P("x^300+1"), 8, 4);
        FAIL();
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.field(), "Degree");
    }
    try {
        encode(P("1000*x+1"), 8, 2);
        FAIL();
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.field(), "k");
    }
    CAwareFactorization big;
    big.c_factors = {make_c_factor(7, 300)};
    try {
        encode(big, 8, 4);
        FAIL();
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.field(), "Multiplicity");
    }
    big.c_factors = {make_c_factor(7, -256), make_c_factor(14, 255), make_c_factor(28, 1)};
    EXPECT_NO_THROW(encode(big, 8, 4));
    big.c_factors = {make_c_factor(257, 1)};
    try {
        encode(big, 8, 4);
        FAIL();
    } catch (const CapacityError& e) {
        EXPECT_EQ(e.field(), "Degree");
    }
    EXPECT_THROW(encode(P("x"), 0, 4), DomainError);
    EXPECT_THROW(encode(P("x"), 8, 64), DomainError);
}

TEST(Codec, MalformedBlobs) {
    auto good = encode(P("x^105-1"), 8, 6).bytes;
    auto bad = good;
    bad[0] = 'X';
    bad[1] = 'X';
    EXPECT_THROW(decode(bad), MalformedBlob);
    bad = good;
    bad[2] = 2;
    EXPECT_THROW(decode(bad), MalformedBlob);
    bad = good;
    bad[3] = 5;
    EXPECT_THROW(decode(bad), MalformedBlob);
    bad = good;
    bad[5] = 0;
    EXPECT_THROW(decode(bad), MalformedBlob);
    bad = good;
    bad.pop_back();
    EXPECT_THROW(decode(bad), MalformedBlob);
    bad = good;
    bad.push_back(0);
    EXPECT_THROW(decode(bad), MalformedBlob);
    bad = good;
    bad.back() |= 0x01;  // 34 bits leave 6 padding bits
    EXPECT_THROW(decode(bad), MalformedBlob);
    EXPECT_THROW(decode(std::vector<std::uint8_t>{'C', 'P'}), MalformedBlob);

    // k = 2 where 1 suffices: sparse "x" with a 3-bit coefficient.
    auto h = header(1, 1, 4, 4);
    // k=0010 count=0001 deg=0001 coeff=001 -> 0010 0001 0001 001(0 0000)
    for (std::uint8_t b : {0x21, 0x12, 0x00}) h.push_back(b);
    EXPECT_THROW(decode(h), MalformedBlob);
    h = header(1, 1, 4, 4);
    // Same with k=1, coefficient 01: 0001 0001 0001 01(00)
    for (std::uint8_t b : {0x11, 0x14}) h.push_back(b);
    EXPECT_EQ(std::get<SparsePoly>(decode(h).value), P("x"));

    // A C-aware value whose net multiplicities go negative.
    h = header(4, 1, 4, 4);
    // count=1, mult=-1 (11111), k=1 (0001), NumFactors=0, then block k=0 count=0.
    // 0001 11111 0001 0000 0000 0000 -> 0001 1111 1000 1000 0000 0000 0000
    for (std::uint8_t b : {0x1F, 0x88, 0x00, 0x00}) h.push_back(b);
    EXPECT_THROW(decode(h), MalformedBlob);
}

TEST(Codec, SizeShapeForBinomials) {
    for (std::int64_t n : {105, 1365, 2805}) {
        const unsigned N = 16, K = 16;
        const std::uint64_t L = ceil_log2(static_cast<std::uint64_t>(n));
        EXPECT_LT(measured_bits(c_poly(n), N, K), 8 * L + K + 16);
        const auto pf = factor_full(c_poly(n));
        PlainFactorization expanded;
        for (const auto& p : pf.phi_factors) {
            expanded.factors.push_back({p.multiplicity, phi_poly(static_cast<std::int64_t>(p.k))});
        }
        EXPECT_GT(measured_bits(expanded, N, K, InnerPoly::Dense), static_cast<std::uint64_t>(n));
        // Four N-bit fields, the (N+1)-bit multiplicity, K, and one field per prime.
        const std::uint64_t omega = make_c_factor(static_cast<std::uint64_t>(n), 1).k_factorization.with_repetition().size();
        EXPECT_EQ(measured_bits(to_c_aware(pf), N, K), 5 * N + 1 + K + omega * N);
    }
}

TEST(Codec, BinomialPlusOneCostIndependentOfK) {
    auto cost = [](std::uint64_t k) {
        CAwareFactorization f;
        f.c_factors = {make_c_factor(k, -1), make_c_factor(2 * k, 1)};
        return measured_bits(f, 16, 8);
    };
    EXPECT_EQ(cost(3), cost(5));
    EXPECT_EQ(cost(3), cost(9973));
    EXPECT_EQ(cost(9) - cost(3), 2u * 16);  // one more prime in each list
}

TEST(ClosedFormSize, Formulas) {
    EXPECT_EQ(paper_size_bits(PaperFormula::Dense, {105, 0, 1, 0, 0}), 219u);
    EXPECT_EQ(paper_size_bits(PaperFormula::Sparse, {105, 2, 1, 0, 0}), 7u + 2 * (2 + 7));
    EXPECT_EQ(paper_size_bits(PaperFormula::FactorOverhead, {105, 0, 0, 3, 0}), 4u * 7);
    EXPECT_EQ(paper_size_bits(PaperFormula::PhiOverhead, {105, 0, 0, 0, 8}), 25u * 7);
    EXPECT_THROW(paper_size_bits(PaperFormula::Sparse, {}), DomainError);
    EXPECT_THROW(paper_size_bits(PaperFormula::Dense, {10, 0, 0, 0, 0}), DomainError);

    EXPECT_EQ(table2_formula_bits(TableVocab::Sparse, TableForm::Expanded, 105), 21u);
    EXPECT_EQ(table2_formula_bits(TableVocab::Dense, TableForm::Expanded, 105), 2u * 106 + 7);
    EXPECT_EQ(table2_formula_bits(TableVocab::C, TableForm::Factored, 105), 7u);
    EXPECT_EQ(table2_formula_bits(TableVocab::Phi, TableForm::SquareFree, 105), 17u * 7);
    EXPECT_GT(table2_formula_bits(TableVocab::Dense, TableForm::Factored, 105), 105u);
    EXPECT_EQ(table3_formula_bits(TableVocab::Phi, TableForm::SquareFree, 5, 7), 24u);
    EXPECT_EQ(table3_formula_bits(TableVocab::Phi, TableForm::Factored, 3, 5), 6u * 3);
    EXPECT_EQ(table3_formula_bits(TableVocab::Sparse, TableForm::Factored, 5, 7), 22u * 4);
    EXPECT_THROW(table3_formula_bits(TableVocab::C, TableForm::Factored, 5, 5), DomainError);
    EXPECT_THROW(table3_formula_bits(TableVocab::C, TableForm::Factored, 4, 5), DomainError);

    EXPECT_EQ(ceil_log2(1), 0u);
    EXPECT_EQ(ceil_log2(2), 1u);
    EXPECT_EQ(ceil_log2(105), 7u);
    EXPECT_EQ(ceil_log2(128), 7u);
    EXPECT_EQ(ceil_log2(129), 8u);
}

TEST(ClosedFormSize, ReportPairsMeasuredWithFormula) {
    const auto r = size_report(P("x^105-1"), 8, 6);
    EXPECT_EQ(r.measured_bits, 34u);
    EXPECT_EQ(r.layout, Layout::Sparse);
    EXPECT_EQ(r.paper_formula_bits, 7u + 2 * (1 + 1 + 7));
    const auto d = size_report(to_dense(P("x^105-1")), 8, 6);
    EXPECT_EQ(d.paper_formula_bits, 219u);
    const auto p = size_report(factor_full(P("x^105-1")), 8, 6);
    EXPECT_EQ(p.parameters.l, 8u);
    EXPECT_EQ(p.paper_formula_bits, 25u * 7 + 7);
}
