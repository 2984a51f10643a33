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

#include "cyclorep/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cyclorep/errors.hpp"

namespace cyclorep {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

std::uint64_t require_positive(std::int64_t n, const char* op) {
    if (n <= 0) {
        throw DomainError(std::string(op) + ": argument must be >= 1, got " + std::to_string(n));
    }
    return static_cast<std::uint64_t>(n);
}

u128 isqrt128(u128 n) {
    if (n < 2) return n;
    // Start above the root; Newton decreases monotonically from there.
    unsigned bits = 0;
    for (u128 t = n; t != 0; t >>= 1) ++bits;
    u128 x = u128{1} << ((bits + 1) / 2);
    while (true) {
        u128 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    if (x * x > n || (x + 1) * (x + 1) <= n) {
        throw InvariantViolation("isqrt: Newton iteration failed to converge");
    }
    return x;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace

PrimeFactorization::PrimeFactorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
    std::uint64_t prev = 0;
    for (const auto& [p, e] : pairs_) {
        if (e == 0) throw DomainError("prime factorization: zero exponent");
        if (p <= prev) throw DomainError("prime factorization: primes must be strictly increasing");
        if (!is_prime(p)) throw DomainError("prime factorization: " + std::to_string(p) + " is not prime");
        prev = p;
    }
}

std::uint64_t PrimeFactorization::value() const {
    std::uint64_t v = 1;
    for (const auto& [p, e] : pairs_) {
        for (unsigned i = 0; i < e; ++i) {
            if (v > std::numeric_limits<std::uint64_t>::max() / p) {
                throw DomainError("prime factorization: value overflows 64 bits");
            }
            v *= p;
        }
    }
    return v;
}

std::vector<std::uint64_t> PrimeFactorization::with_repetition() const {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : pairs_) out.insert(out.end(), e, p);
    return out;
}

PrimeFactorization PrimeFactorization::from_repeated(const std::vector<std::uint64_t>& primes) {
    std::vector<PrimePower> pairs;
    for (std::uint64_t p : primes) {
        if (!pairs.empty() && pairs.back().prime == p) {
            ++pairs.back().exponent;
        } else {
            if (!pairs.empty() && p < pairs.back().prime) {
                throw DomainError("prime factorization: repeated primes must be nondecreasing");
            }
            pairs.push_back({p, 1});
        }
    }
    return PrimeFactorization(std::move(pairs));
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin; these bases cover all 64-bit inputs.
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(u128{a} * b % n); };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= n;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeFactorization factorize(std::int64_t n) {
    std::uint64_t m = require_positive(n, "factorize");
    std::vector<PrimePower> pairs;
    for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        pairs.push_back({p, e});
    }
    if (m > 1) pairs.push_back({m, 1});
    return PrimeFactorization(std::move(pairs));
}

std::vector<std::uint64_t> divisors(const PrimeFactorization& pf) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : pf.pairs()) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    return divisors(factorize(n));
}

int mobius(std::int64_t n) {
    require_positive(n, "mobius");
    int sign = 1;
    const auto pf = factorize(n);
    for (const auto& [p, e] : pf.pairs()) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t totient(std::int64_t n) {
    std::uint64_t phi = require_positive(n, "totient");
    const auto pf = factorize(n);
    for (const auto& [p, e] : pf.pairs()) phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t divisor_count(std::int64_t n) {
    require_positive(n, "divisor_count");
    std::uint64_t count = 1;
    const auto pf = factorize(n);
    for (const auto& [p, e] : pf.pairs()) count *= e + 1;
    return count;
}

std::vector<std::uint64_t> totient_at_most(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound == 0) return out;
    // Every prime p dividing such a k has p - 1 <= bound.
    const auto primes = primes_up_to(bound + 1);
    // Depth-first over ascending prime powers; phi is multiplicative.
    auto walk = [&](auto&& self, std::size_t from, std::uint64_t k, std::uint64_t phi) -> void {
        out.push_back(k);
        for (std::size_t i = from; i < primes.size(); ++i) {
            const std::uint64_t p = primes[i];
            if (phi * (p - 1) > bound) break;
            std::uint64_t kk = k * p;
            std::uint64_t ph = phi * (p - 1);
            while (ph <= bound) {
                self(self, i + 1, kk, ph);
                if (ph > bound / p) break;
                kk *= p;
                ph *= p;
            }
        }
    };
    walk(walk, 0, 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t isqrt(std::uint64_t n) { return static_cast<std::uint64_t>(isqrt128(n)); }

std::pair<std::uint64_t, std::uint64_t> recover_pq(std::int64_t k, std::int64_t phi) {
    if (k <= 0 || phi <= 0) throw InconsistencyError("recover_pq: k and phi must be positive");
    const i128 kk = k;
    const i128 ph = phi;
    const i128 disc = kk * kk - 2 * kk - 2 * kk * ph + (ph - 1) * (ph - 1);
    if (disc < 0) throw InconsistencyError("recover_pq: negative discriminant");
    const u128 root = isqrt128(static_cast<u128>(disc));
    if (static_cast<i128>(root * root) != disc) {
        throw InconsistencyError("recover_pq: discriminant is not a perfect square");
    }
    const i128 sum = kk + 1 - ph;  // p + q
    const i128 r = static_cast<i128>(root);
    if (((sum - r) & 1) != 0 || sum - r <= 0) {
        throw InconsistencyError("recover_pq: recovered values are not positive integers");
    }
    const auto p = static_cast<std::uint64_t>((sum - r) / 2);
    const auto q = static_cast<std::uint64_t>((sum + r) / 2);
    if (p == q || !is_prime(p) || !is_prime(q) || static_cast<i128>(p) * q != kk) {
        throw InconsistencyError("recover_pq: (" + std::to_string(k) + ", " + std::to_string(phi) +
                                 ") is not a product of two distinct primes with its totient");
    }
    return {p, q};
}

}  // namespace cyclorep
