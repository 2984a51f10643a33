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

#include <random>

#include "cyclorep/cyclotomic.hpp"
#include "cyclorep/numtheory.hpp"
#include "oracles.hpp"

using namespace cyclorep;

namespace {

SparsePoly P(const char* text) { return parse_poly(text); }

SparsePoly from_vec(const oracle::Vec& v) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i) terms.push_back({i, v[i]});
    return SparsePoly::from_terms(std::move(terms));
}

const char* kVanHoeij = "x^128-x^112+x^80-x^64+x^48-x^16+1";

}  // namespace

TEST(PhiPoly, Examples) {
    EXPECT_EQ(phi_poly(1), P("x-1"));
    EXPECT_EQ(phi_poly(15), P("x^8-x^7+x^5-x^4+x^3-x+1"));
    const auto p105 = phi_poly(105);
    EXPECT_EQ(p105.degree(), 48u);
    EXPECT_EQ(p105.coefficient(7), -2);
    EXPECT_EQ(p105.coefficient(41), -2);
    EXPECT_THROW(phi_poly(0), DomainError);
    EXPECT_THROW(compute_phi_poly(-3), DomainError);
}

TEST(PhiPoly, AgreesWithRecursiveDivisionOracle) {
    for (std::int64_t n = 1; n <= 120; ++n) {
        ASSERT_EQ(phi_poly(n), from_vec(oracle::cyclotomic(static_cast<std::uint64_t>(n)))) << n;
    }
}

TEST(PhiPoly, Identities) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        const auto phi = phi_poly(n);
        ASSERT_EQ(phi.leading_coefficient(), 1) << n;
        ASSERT_EQ(phi.degree(), totient(n)) << n;
        SparsePoly prod = SparsePoly::constant(1);
        for (auto d : divisors(n)) prod *= phi_poly(static_cast<std::int64_t>(d));
        ASSERT_EQ(prod, c_poly(n)) << n;
        if (n >= 2) ASSERT_EQ(reverse(phi), phi) << n;
        if (is_prime(static_cast<std::uint64_t>(n))) {
            std::vector<Term> ones;
            for (std::int64_t i = 0; i < n; ++i) ones.push_back({static_cast<Exponent>(i), Integer(1)});
            ASSERT_EQ(phi, SparsePoly::from_terms(ones)) << n;
        }
    }
    for (std::int64_t k = 3; k <= 199; k += 2) ASSERT_EQ(phi_poly(2 * k), negate_x(phi_poly(k))) << k;
}

TEST(PhiPoly, CacheAgreesWithDirectComputation) {
    for (std::int64_t k : {1, 2, 105, 385, 1001}) EXPECT_EQ(phi_poly(k), compute_phi_poly(k));
}

TEST(CPoly, Examples) {
    EXPECT_EQ(c_poly(1), P("x-1"));
    EXPECT_EQ(c_poly(105), P("x^105-1"));
    EXPECT_EQ(mul(phi_poly(1), phi_poly(7)), c_poly(7));
    EXPECT_THROW(c_poly(0), DomainError);
}

TEST(SubstitutionSplit, Examples) {
    const auto s = substitution_split(P(kVanHoeij));
    EXPECT_EQ(s.base, P("x^8-x^7+x^5-x^4+x^3-x+1"));
    EXPECT_EQ(s.m, 16u);
    const auto b = substitution_split(P("x^2-1"));
    EXPECT_EQ(b.base, P("x-1"));
    EXPECT_EQ(b.m, 2u);
    EXPECT_EQ(substitution_split(P("x^2+x+1")).m, 1u);
    EXPECT_EQ(substitution_split(P("5")).m, 1u);
    EXPECT_THROW(substitution_split(SparsePoly()), DomainError);
    EXPECT_THROW(substitution_split(P("x^2+x")), DomainError);
}

TEST(QuickTest, Examples) {
    EXPECT_EQ(is_cyclotomic_quick(P("x^2-x-1")), Verdict::NotCyclotomic);
    EXPECT_EQ(is_cyclotomic_quick(P(kVanHoeij)), Verdict::Cyclotomic);
    EXPECT_EQ(is_cyclotomic_quick(P("x-1")), Verdict::Cyclotomic);
    EXPECT_EQ(is_cyclotomic_quick(P("2*x-1")), Verdict::NotCyclotomic);
    EXPECT_EQ(is_cyclotomic_quick(P("x^3")), Verdict::Cyclotomic);
    EXPECT_EQ(is_cyclotomic_quick(P("3*x^5-3*x^2")), Verdict::Cyclotomic);
    EXPECT_THROW(is_cyclotomic_quick(SparsePoly()), DomainError);
}

TEST(Decompose, Examples) {
    const auto d105 = cyclotomic_decompose(P("x^105-1"));
    ASSERT_EQ(d105.parts.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(d105.parts[i].k, divisors(105)[i]);
        EXPECT_EQ(d105.parts[i].multiplicity, 1u);
    }
    EXPECT_EQ(cyclotomic_decompose(P(kVanHoeij)),
              (CyclotomicDecomposition{{{15, 1}, {30, 1}, {60, 1}, {120, 1}, {240, 1}}}));
    try {
        cyclotomic_decompose(P("x^2-x-1"));
        FAIL();
    } catch (const NotPureCyclotomic& e) {
        EXPECT_EQ(e.residual(), P("x^2-x-1"));
    }
    EXPECT_THROW(cyclotomic_decompose(SparsePoly()), DomainError);
    EXPECT_THROW(cyclotomic_decompose(P("x^2-x")), DomainError);
    EXPECT_THROW(cyclotomic_decompose(P("2*x-2")), DomainError);
    EXPECT_TRUE(cyclotomic_decompose(P("1")).parts.empty());
    EXPECT_EQ(cyclotomic_decompose(P("-x+1")), (CyclotomicDecomposition{{{1, 1}}}));
    EXPECT_EQ(cyclotomic_decompose(P("x^2-2*x+1")), (CyclotomicDecomposition{{{1, 2}}}));
}

TEST(Decompose, DegreeMatchesInput) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> pick(1, 60);
    for (int i = 0; i < 50; ++i) {
        SparsePoly f = SparsePoly::constant(1);
        for (int j = 0; j < 3; ++j) f *= phi_poly(pick(rng));
        const auto d = cyclotomic_decompose(f);
        ASSERT_EQ(d.degree(), f.degree());
        ASSERT_EQ(d.expand(), f);
    }
}

TEST(Extract, Examples) {
    const auto e = extract_cyclotomic_factors(mul(P("x^5-1"), P("x^7-1")));
    EXPECT_EQ(e.decomposition, (CyclotomicDecomposition{{{1, 2}, {5, 1}, {7, 1}}}));
    EXPECT_EQ(e.x_power, 0u);
    EXPECT_EQ(e.cofactor, P("1"));

    // (x-2)(x-1)(x+1) expands to x^3-2x^2-x+2.
    EXPECT_EQ(mul(mul(P("x-2"), P("x-1")), P("x+1")), P("x^3-2*x^2-x+2"));
    const auto m = extract_cyclotomic_factors(P("x^3-2*x^2-x+2"));
    EXPECT_EQ(m.decomposition, (CyclotomicDecomposition{{{1, 1}, {2, 1}}}));
    EXPECT_EQ(m.cofactor, P("x-2"));

    const auto x2 = extract_cyclotomic_factors(P("x^2"));
    EXPECT_TRUE(x2.decomposition.parts.empty());
    EXPECT_EQ(x2.x_power, 2u);
    EXPECT_EQ(x2.cofactor, P("1"));
    EXPECT_THROW(extract_cyclotomic_factors(SparsePoly()), DomainError);
}

TEST(Extract, ReassemblesRandomInputs) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> k(1, 40), count(0, 3), xp(0, 3);
    for (int i = 0; i < 500; ++i) {
        SparsePoly f = from_vec(oracle::random_vec(rng, 5, 9));
        if (f.is_zero()) continue;
        for (int j = count(rng); j > 0; --j) f *= phi_poly(k(rng));
        f = shift(f, static_cast<Exponent>(xp(rng)));
        const auto e = extract_cyclotomic_factors(f);
        ASSERT_EQ(shift(mul(e.decomposition.expand(), e.cofactor), e.x_power), f);
        for (auto kk : totient_at_most(e.cofactor.degree())) ASSERT_FALSE(phi_divides(e.cofactor, kk)) << f;
    }
}

TEST(PhiDivides, AgreesWithDivision) {
    for (std::uint64_t k = 1; k <= 60; ++k) {
        for (std::uint64_t n = 1; n <= 60; ++n) {
            ASSERT_EQ(phi_divides(c_poly(static_cast<std::int64_t>(n)), k), n % k == 0) << k << " " << n;
        }
    }
}

TEST(QuickTest, NeverContradictsDecomposition) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> pick_k(1, 120);
    int unknown = 0;
    for (int i = 0; i < 200; ++i) {
        SparsePoly f = SparsePoly::constant(1);
        while (true) {
            const auto k = pick_k(rng);
            if (f.degree() + totient(k) > 48) break;
            f *= phi_poly(k);
        }
        if (f.degree() == 0) f = phi_poly(1);
        const auto v = is_cyclotomic_quick(f);
        ASSERT_NE(v, Verdict::NotCyclotomic) << f;
        ASSERT_NO_THROW(cyclotomic_decompose(f));
        if (v == Verdict::Unknown) ++unknown;
    }
    for (int i = 0; i < 200; ++i) {
        auto r = from_vec(oracle::random_vec(rng, 10, 9));
        if (r.is_zero()) r = P("1");
        const auto f = mul(P("x^2-x-1"), r);
        const auto v = is_cyclotomic_quick(f);
        ASSERT_NE(v, Verdict::Cyclotomic) << f;
        if (f.trailing_coefficient() != 0 && content(f) == 1) {
            ASSERT_THROW(cyclotomic_decompose(f), NotPureCyclotomic);
        }
    }
    RecordProperty("cyclotomic_unknown", unknown);
}

TEST(HeightRecords, SmallScans) {
    const auto r200 = height_records(200);
    ASSERT_FALSE(r200.empty());
    EXPECT_EQ(r200.back(), (HeightRecord{Integer(2), 105, 48}));
    const auto r400 = height_records(400, 3);
    ASSERT_GE(r400.size(), 2u);
    EXPECT_EQ(r400[r400.size() - 2], (HeightRecord{Integer(2), 105, 48}));
    EXPECT_EQ(r400.back(), (HeightRecord{Integer(3), 385, 240}));
    EXPECT_EQ(height_records(400, 1), r400);
    EXPECT_THROW(height_records(0), DomainError);
    for (std::size_t i = 1; i < r400.size(); ++i) {
        EXPECT_GT(r400[i].height, r400[i - 1].height);
        EXPECT_GT(r400[i].first_k, r400[i - 1].first_k);
    }
    for (const auto& rec : r400) {
        EXPECT_EQ(rec.phi_of_k, totient(static_cast<std::int64_t>(rec.first_k)));
        EXPECT_EQ(height(phi_poly(static_cast<std::int64_t>(rec.first_k))), rec.height);
    }
}
