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

#include "cyclorep/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>

#include "cyclorep/numtheory.hpp"

namespace cyclorep {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t checked_positive(std::int64_t k, const char* op) {
    if (k <= 0) throw DomainError(std::string(op) + ": index must be >= 1, got " + std::to_string(k));
    return static_cast<std::uint64_t>(k);
}

// Coefficients of Phi_k, ascending. Multiplies the mu = +1 binomials, then
// divides by the mu = -1 binomials in ascending d.
std::vector<Integer> phi_coefficients(std::uint64_t k) {
    const auto pf = factorize(static_cast<std::int64_t>(k));
    std::vector<std::uint64_t> plus, minus;
    for (std::uint64_t d : divisors(pf)) {
        const int mu = mobius(static_cast<std::int64_t>(k / d));
        if (mu > 0) plus.push_back(d);
        if (mu < 0) minus.push_back(d);
    }
    std::uint64_t top = 0;
    for (auto d : plus) top += d;
    std::vector<Integer> a(top + 1);
    a[0] = 1;
    std::uint64_t deg = 0;
    for (std::uint64_t d : plus) {
        // a <- a * (x^d - 1)
        deg += d;
        for (std::uint64_t i = deg + 1; i-- > 0;) {
            if (i >= d) {
                mpz_sub(a[i].get_mpz_t(), a[i - d].get_mpz_t(), a[i].get_mpz_t());
            } else {
                mpz_neg(a[i].get_mpz_t(), a[i].get_mpz_t());
            }
        }
    }
    for (std::uint64_t d : minus) {
        // a = q * (x^d - 1) gives q_i = q_{i-d} - a_i, then the top d
        // coefficients must match q shifted up.
        const std::uint64_t qdeg = deg - d;
        for (std::uint64_t i = 0; i <= qdeg; ++i) {
            if (i >= d) {
                mpz_sub(a[i].get_mpz_t(), a[i - d].get_mpz_t(), a[i].get_mpz_t());
            } else {
                mpz_neg(a[i].get_mpz_t(), a[i].get_mpz_t());
            }
        }
        for (std::uint64_t i = qdeg + 1; i <= deg; ++i) {
            if (i >= d ? a[i] != a[i - d] : a[i] != 0) {
                throw InvariantViolation("phi_poly(" + std::to_string(k) + "): inexact division by x^" +
                                         std::to_string(d) + "-1");
            }
            a[i] = 0;
        }
        deg = qdeg;
    }
    a.resize(deg + 1);
    return a;
}

SparsePoly sparse_from(const std::vector<Integer>& a) {
    std::vector<Term> terms;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != 0) terms.push_back({i, a[i]});
    }
    return SparsePoly::from_terms(std::move(terms));
}

struct RootOfUnity {
    std::uint64_t prime;
    std::uint64_t omega;  // exact multiplicative order k modulo prime
};

RootOfUnity root_of_unity(std::uint64_t k) {
    static std::mutex mutex;
    static std::unordered_map<std::uint64_t, RootOfUnity> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
    }
    // Primes near 2^40 keep accidental zeros rare while products stay in 128 bits.
    std::uint64_t m = std::max<std::uint64_t>(1, (std::uint64_t{1} << 40) / k);
    std::uint64_t p = m * k + 1;
    while (!is_prime(p)) p += k;
    const auto pf = factorize(static_cast<std::int64_t>(k));
    RootOfUnity r{p, 1};
    for (std::uint64_t a = 2;; ++a) {
        const std::uint64_t w = powmod(a, (p - 1) / k, p);
        bool exact = true;
        for (const auto& [q, e] : pf.pairs()) {
            if (powmod(w, k / q, p) == 1) {
                exact = false;
                break;
            }
        }
        if (exact) {
            r.omega = w;
            break;
        }
    }
    std::lock_guard lock(mutex);
    memo.emplace(k, r);
    return r;
}

// f(omega) mod p for omega of exact order k; zero whenever Phi_k | f.
bool vanishes_at_root_of_unity(const SparsePoly& f, std::uint64_t k) {
    const auto [p, omega] = root_of_unity(k);
    std::uint64_t acc = 0;
    for (const auto& t : f.terms()) {
        const std::uint64_t c = mpz_fdiv_ui(t.coefficient.get_mpz_t(), p);
        if (c == 0) continue;
        acc = (acc + mulmod(c, powmod(omega, t.exponent % k, p), p)) % p;
    }
    return acc == 0;
}

std::optional<SparsePoly> divide_by_phi(const SparsePoly& f, std::uint64_t k) {
    if (f.is_zero() || f.degree() < totient(static_cast<std::int64_t>(k))) return std::nullopt;
    if (!vanishes_at_root_of_unity(f, k)) return std::nullopt;
    return try_div_exact(f, phi_poly(static_cast<std::int64_t>(k)));
}

// Divides every Phi_k with phi(k) <= deg g out of g, ascending in k.
CyclotomicDecomposition strip_cyclotomic(SparsePoly& g) {
    CyclotomicDecomposition out;
    if (g.degree() == 0) return out;
    for (std::uint64_t k : totient_at_most(g.degree())) {
        std::uint64_t mult = 0;
        while (auto q = divide_by_phi(g, k)) {
            g = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.parts.push_back({k, mult});
        if (g.degree() == 0) break;
    }
    return out;
}

unsigned ceil_log2(std::uint64_t n) {
    unsigned r = 0;
    while ((std::uint64_t{1} << r) < n) ++r;
    return r;
}

}  // namespace

std::uint64_t CyclotomicDecomposition::degree() const {
    std::uint64_t d = 0;
    for (const auto& part : parts) d += part.multiplicity * totient(static_cast<std::int64_t>(part.k));
    return d;
}

SparsePoly CyclotomicDecomposition::expand() const {
    SparsePoly out = SparsePoly::constant(1);
    for (const auto& part : parts) out *= pow(phi_poly(static_cast<std::int64_t>(part.k)), part.multiplicity);
    return out;
}

std::string CyclotomicDecomposition::to_string() const {
    if (parts.empty()) return "1";
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += " * ";
        out += "Phi_" + std::to_string(part.k);
        if (part.multiplicity != 1) out += "^" + std::to_string(part.multiplicity);
    }
    return out;
}

NotPureCyclotomic::NotPureCyclotomic(CyclotomicDecomposition found, SparsePoly residual)
    : Error("not a product of cyclotomic polynomials; residual " + format_poly(residual)),
      found_(std::move(found)),
      residual_(std::move(residual)) {}

SparsePoly compute_phi_poly(std::int64_t k) {
    return sparse_from(phi_coefficients(checked_positive(k, "phi_poly")));
}

SparsePoly phi_poly(std::int64_t k) {
    const std::uint64_t key = checked_positive(k, "phi_poly");
    static std::mutex mutex;
    static std::unordered_map<std::uint64_t, SparsePoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SparsePoly phi = compute_phi_poly(k);
    std::lock_guard lock(mutex);
    cache.emplace(key, phi);
    return phi;
}

SparsePoly c_poly(std::int64_t n) { return SparsePoly::binomial(checked_positive(n, "c_poly")); }

SubstitutionSplit substitution_split(const SparsePoly& f) {
    if (f.is_zero()) throw DomainError("substitution_split: zero polynomial");
    if (f.trailing_coefficient() == 0) throw DomainError("substitution_split: f(0) = 0, strip x^v first");
    Exponent m = 0;
    for (const auto& t : f.terms()) m = std::gcd(m, t.exponent);
    if (m <= 1) return {f, 1};
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.exponent /= m;
    return {SparsePoly::from_terms(std::move(terms)), m};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Cyclotomic:
            return "cyclotomic";
        case Verdict::NotCyclotomic:
            return "not-cyclotomic";
        case Verdict::Unknown:
            return "unknown";
    }
    return "unknown";
}

Verdict is_cyclotomic_quick(const SparsePoly& f) {
    if (f.is_zero()) throw DomainError("is_cyclotomic_quick: zero polynomial");
    SparsePoly g = primitive_part(shift_down(f, f.low_degree()));
    const Exponent n = g.degree();
    if (n == 0) return Verdict::Cyclotomic;
    if (abs(g.leading_coefficient()) != 1 || abs(g.trailing_coefficient()) != 1) return Verdict::NotCyclotomic;

    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, n);
    std::vector<SparsePoly> seen{squarefree_part(g)};
    const unsigned cap = ceil_log2(n) + 2;
    for (unsigned j = 0; j < cap; ++j) {
        const SparsePoly squared = graeffe(seen.back());
        if (height(squared) > bound) return Verdict::NotCyclotomic;
        SparsePoly h = squarefree_part(squared);
        for (const auto& prev : seen) {
            if (h == prev || h == primitive_part(negate_x(prev))) return Verdict::Cyclotomic;
        }
        seen.push_back(std::move(h));
    }
    return Verdict::Unknown;
}

CyclotomicDecomposition cyclotomic_decompose(const SparsePoly& f) {
    if (f.is_zero()) throw DomainError("cyclotomic_decompose: zero polynomial");
    if (f.trailing_coefficient() == 0) throw DomainError("cyclotomic_decompose: f(0) = 0");
    if (content(f) != 1) throw DomainError("cyclotomic_decompose: content must be 1");
    SparsePoly residual = f;
    CyclotomicDecomposition d = strip_cyclotomic(residual);
    if (residual.degree() != 0 || abs(residual.leading_coefficient()) != 1) {
        throw NotPureCyclotomic(std::move(d), std::move(residual));
    }
    return d;
}

CyclotomicExtraction extract_cyclotomic_factors(const SparsePoly& f) {
    if (f.is_zero()) throw DomainError("extract_cyclotomic_factors: zero polynomial");
    CyclotomicExtraction out;
    out.x_power = f.low_degree();
    out.cofactor = shift_down(f, out.x_power);
    out.decomposition = strip_cyclotomic(out.cofactor);
    return out;
}

bool phi_divides(const SparsePoly& f, std::uint64_t k) {
    if (k == 0) throw DomainError("phi_divides: index must be >= 1");
    if (f.is_zero()) return true;
    return divide_by_phi(f, k).has_value();
}

std::vector<HeightRecord> height_records(std::int64_t k_max, unsigned threads) {
    const std::uint64_t top = checked_positive(k_max, "height_records");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Integer> heights(top + 1);
    std::atomic<std::uint64_t> next{1};
    auto worker = [&] {
        for (std::uint64_t k = next++; k <= top; k = next++) {
            Integer h = 0;
            for (const auto& a : phi_coefficients(k)) {
                if (mpz_cmpabs(a.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(a);
            }
            heights[k] = std::move(h);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<HeightRecord> records;
    Integer best = 0;
    for (std::uint64_t k = 1; k <= top; ++k) {
        if (heights[k] > best) {
            best = heights[k];
            records.push_back({best, k, totient(static_cast<std::int64_t>(k))});
        }
    }
    return records;
}

}  // namespace cyclorep
