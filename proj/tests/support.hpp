// Copyright 2026 The localroots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared helpers for the test binaries: small constructors, seeded random
// generators and slow reference computations that do not go through the
// code under test.

#ifndef LOCALROOTS_TESTS_SUPPORT_HPP
#define LOCALROOTS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "localroots/hensel.hpp"
#include "localroots/regular.hpp"

namespace lrtest {

using namespace localroots;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
    }
    bool chance(double prob) { return std::bernoulli_distribution(prob)(gen_); }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// coefficients listed from the constant term up
inline Poly int_poly(const FieldContext& F, const std::vector<long>& coeffs) {
    Poly f(F);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            f = f + Poly::monomial(F, F.from_integer(coeffs[i]), static_cast<int>(i));
    return f;
}

inline Poly from_roots(const FieldContext& F, const std::vector<KElement>& roots) {
    Poly f = Poly::constant(F, F.one());
    for (const auto& a : roots) f = f * (Poly::x(F) - Poly::constant(F, a));
    return f;
}

// A random element of A/pi^k lifted to A.
inline KElement random_integral(const FieldContext& F, Rng& rng, int k) {
    KElement acc = F.zero();
    for (int i = 0; i < k; ++i) {
        const auto d = static_cast<std::uint32_t>(rng.uniform(0, F.q() - 1));
        if (d) acc = F.add(acc, F.mul(F.from_residue({d}), F.pi_power(i)));
    }
    return acc;
}

inline KElement random_unit(const FieldContext& F, Rng& rng, int k = 4) {
    const auto d = static_cast<std::uint32_t>(rng.uniform(1, F.q() - 1));
    KElement u = F.add(F.from_residue({d}), F.mul(F.uniformizer(), random_integral(F, rng, k - 1)));
    return rng.chance(0.5) && F.mode() == Characteristic::Mixed ? F.neg(u) : u;
}

// Roots of f in A/pi^N by evaluating f exactly at one representative of
// every class; indices are the digit encodings sum d_i q^i.
inline std::vector<mpz_class> naive_roots_mod(const Poly& f, int N) {
    const FieldContext& F = f.field();
    std::vector<mpz_class> out;
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(N), 0);
    mpz_class size;
    mpz_ui_pow_ui(size.get_mpz_t(), F.q(), static_cast<unsigned long>(N));
    for (mpz_class index = 0; index < size; ++index) {
        KElement x = F.zero();
        for (int i = 0; i < N; ++i)
            if (digits[i]) x = F.add(x, F.mul(F.from_residue({digits[i]}), F.pi_power(i)));
        const KElement y = f.evaluate(x);
        if (F.is_zero(y) || F.int_valuation(y) >= N) out.push_back(index);
        for (int i = 0; i < N; ++i) {
            if (++digits[i] < F.q()) break;
            digits[i] = 0;
        }
    }
    return out;
}

struct CorpusEntry {
    Poly f;
    std::int64_t r = 0;
};

// Monic squarefree regular polynomials over Q_p, p in {2, 3, 5}, degree at
// most 5, nonzero coefficients of valuation at most 3, with q^(2r+1) at most
// max_residues.
inline std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count,
                                              std::uint64_t max_residues = 10'000'000) {
    Rng rng(seed);
    const std::uint32_t primes[] = {2, 3, 5};
    std::vector<CorpusEntry> out;
    while (out.size() < count) {
        const FieldContext F = FieldContext::padic(primes[out.size() % 3]);
        const int deg = static_cast<int>(rng.uniform(1, 5));
        Poly f = Poly::monomial(F, F.one(), deg);
        for (int i = 0; i < deg; ++i) {
            if (rng.chance(0.35)) continue;
            const int v = static_cast<int>(rng.uniform(0, 3));
            f = f + Poly::monomial(F, F.mul(random_unit(F, rng, 3), F.pi_power(v)), i);
        }
        if (!is_regular(f).regular) continue;
        std::int64_t r;
        try {
            r = discriminant_valuation(f).r;
        } catch (const Error&) {
            continue;
        }
        mpz_class need;
        mpz_ui_pow_ui(need.get_mpz_t(), F.q(), static_cast<unsigned long>(2 * r + 1));
        if (need > mpz_class(static_cast<unsigned long>(max_residues))) continue;
        out.push_back({std::move(f), r});
    }
    return out;
}

}  // namespace lrtest

#endif  // LOCALROOTS_TESTS_SUPPORT_HPP
