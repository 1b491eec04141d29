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

#include <gtest/gtest.h>

#include <algorithm>

#include "localroots/oracle.hpp"
#include "support.hpp"

using namespace localroots;
using lrtest::int_poly;
using lrtest::Rng;

namespace {

std::vector<long> indices(const ResidueRootSet& s) {
    std::vector<long> out;
    for (const auto& x : s.roots) out.push_back(x.index.get_si());
    return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidField;
}

Poly random_monic(const FieldContext& F, Rng& rng, int deg, int digits) {
    Poly f = Poly::monomial(F, F.one(), deg);
    for (int i = 0; i < deg; ++i) f = f + Poly::monomial(F, lrtest::random_integral(F, rng, digits), i);
    return f;
}

}  // namespace

TEST(RootsModTest, Examples) {
    const FieldContext Q5 = FieldContext::padic(5), Q3 = FieldContext::padic(3);
    EXPECT_EQ(indices(roots_mod(int_poly(Q5, {1, 0, 1}), 1)), (std::vector<long>{2, 3}));
    for (const FieldContext& F : {Q3, Q5, FieldContext::laurent(2, 2)})
        EXPECT_EQ(indices(roots_mod(Poly::x(F), 3)), (std::vector<long>{0}));
    // squares mod 9 are 0, 1, 4, 7
    EXPECT_TRUE(roots_mod(int_poly(Q3, {-3, 0, 1}), 2).roots.empty());
    const ResidueRootSet s = roots_mod(int_poly(Q3, {0, -3, 1}), 5);
    EXPECT_EQ(indices(s), (std::vector<long>{0, 3, 81, 84, 162, 165}));
    EXPECT_EQ(s.N, 5);
    ASSERT_TRUE(s.r.has_value());
    EXPECT_EQ(*s.r, 2);
}

TEST(RootsModTest, MatchesDirectEvaluation) {
    Rng rng(61);
    for (const FieldContext& F : {FieldContext::padic(2), FieldContext::padic(3), FieldContext::padic(7),
                                  FieldContext::laurent(3), FieldContext::laurent(2, 2)}) {
        for (int trial = 0; trial < 15; ++trial) {
            Poly f(F);
            const int deg = static_cast<int>(rng.uniform(1, 4));
            for (int i = 0; i <= deg; ++i)
                f = f + Poly::monomial(F, lrtest::random_integral(F, rng, 4), i);
            if (f.is_zero()) continue;
            const int N = static_cast<int>(rng.uniform(1, F.q() <= 3 ? 5 : 3));
            std::vector<mpz_class> got;
            for (const auto& x : roots_mod(f, N).roots) got.push_back(x.index);
            EXPECT_EQ(got, lrtest::naive_roots_mod(f, N)) << F.describe();
        }
    }
}

TEST(RootsModTest, Errors) {
    const FieldContext F = FieldContext::padic(3);
    EXPECT_EQ(code_of([&] { roots_mod(int_poly(F, {1, 1}), 15, 1000); }), ErrorCode::BudgetExceeded);
    EXPECT_EQ(code_of([&] { roots_mod(Poly::constant(F, F.from_rational(mpq_class(1, 3))) + Poly::x(F), 2); }),
              ErrorCode::NotIntegral);
    EXPECT_EQ(code_of([&] { roots_mod(Poly(F), 2); }), ErrorCode::ZeroPolynomial);
    try {
        roots_mod(int_poly(F, {1, 1}), 10, 1000);
        FAIL();
    } catch (const BudgetExceededError& e) {
        EXPECT_EQ(e.needed(), 59049);
        EXPECT_EQ(e.edge(), -1);
    }
    // a repeated root leaves r undefined
    EXPECT_FALSE(roots_mod(int_poly(F, {1, 2, 1}), 2).r.has_value());
    EXPECT_EQ(code_of([&] { partition(roots_mod(int_poly(F, {1, 2, 1}), 2), Relation::Approx); }),
              ErrorCode::VanishingDiscriminant);
}

TEST(PartitionTest, Examples) {
    const FieldContext Q5 = FieldContext::padic(5), Q3 = FieldContext::padic(3);
    EXPECT_EQ(partition(roots_mod(int_poly(Q5, {1, 0, 1}), 1), Relation::Approx).classes.size(), 2u);
    EXPECT_EQ(partition(roots_mod(int_poly(Q5, {-1, 1}), 3), Relation::Approx).classes.size(), 1u);

    const ClassPartition p = partition(roots_mod(int_poly(Q3, {0, -3, 1}), 5), Relation::Approx);
    ASSERT_EQ(p.classes.size(), 2u);
    std::vector<long> first, second;
    for (const auto& x : p.classes[0]) first.push_back(x.index.get_si());
    for (const auto& x : p.classes[1]) second.push_back(x.index.get_si());
    EXPECT_EQ(first, (std::vector<long>{0, 81, 162}));
    EXPECT_EQ(second, (std::vector<long>{3, 84, 165}));
    EXPECT_EQ(to_string(p.relation), "approx");
}

TEST(PartitionTest, SmallPrecisionUsesEquality) {
    const FieldContext Q3 = FieldContext::padic(3);
    // r = 2, N = 2: S_2 = {0, 3, 6}
    const ResidueRootSet s = roots_mod(int_poly(Q3, {0, -3, 1}), 2);
    EXPECT_EQ(partition(s, Relation::Approx).classes.size(), 3u);
    EXPECT_EQ(partition(s, Relation::Fine).classes.size(), 1u);
}

TEST(OracleCountTest, Examples) {
    const FieldContext Q3 = FieldContext::padic(3), Q5 = FieldContext::padic(5);
    EXPECT_EQ(count_roots_oracle(int_poly(Q3, {0, -3, 1})), 2);
    EXPECT_EQ(count_roots_oracle(int_poly(Q3, {1, 0, 1})), 0);
    EXPECT_EQ(count_roots_oracle(int_poly(Q5, {1, 0, 1})), 2);
    const FieldContext L = FieldContext::laurent(3);
    EXPECT_EQ(count_roots_oracle(Poly::x(L) * (Poly::x(L) - Poly::constant(L, L.uniformizer()))), 2);
}

TEST(OracleCountTest, Preconditions) {
    const FieldContext F = FieldContext::padic(3);
    EXPECT_EQ(code_of([&] { count_roots_oracle(int_poly(F, {1, 0, 2})); }), ErrorCode::NotMonic);
    EXPECT_EQ(code_of([&] { count_roots_oracle(Poly::monomial(F, F.one(), 2) +
                                               Poly::constant(F, F.from_rational(mpq_class(1, 3)))); }),
              ErrorCode::NotIntegral);
    EXPECT_EQ(code_of([&] { count_roots_oracle(int_poly(F, {0, 0, 1})); }), ErrorCode::VanishingDiscriminant);
    EXPECT_EQ(code_of([&] { count_roots_oracle(int_poly(F, {-59049, 0, 1}), 100); }),
              ErrorCode::BudgetExceeded);
}

TEST(BoundsTest, Examples) {
    const FieldContext Q5 = FieldContext::padic(5), Q3 = FieldContext::padic(3);
    const BoundsReport a = check_bounds(int_poly(Q5, {1, 0, 1}));
    EXPECT_TRUE(a.all_passed);
    EXPECT_EQ(a.r, 0);
    int sweeps = 0;
    for (const auto& c : a.checks) {
        if (c.name != "|S_N| == classes") continue;
        ++sweeps;
        EXPECT_EQ(c.observed, 2);
    }
    EXPECT_EQ(sweeps, 4);

    const BoundsReport b = check_bounds(int_poly(Q3, {0, -3, 1}));
    EXPECT_TRUE(b.all_passed);
    EXPECT_EQ(b.class_count, 2);
    bool saw = false;
    for (const auto& c : b.checks) {
        if (c.N != 5) continue;
        if (c.name == "|S_N| <= q^r * classes") {
            EXPECT_EQ(c.observed, 6);
            EXPECT_EQ(c.limit, 18);
            saw = true;
        }
        if (c.name == "|S_N| <= q^(r+floor(r/2)+1)") EXPECT_EQ(c.limit, 81);
    }
    EXPECT_TRUE(saw);
}

TEST(BoundsTest, RandomMonicPolynomials) {
    Rng rng(62);
    int checked = 0;
    for (const FieldContext& F : {FieldContext::padic(2), FieldContext::padic(3), FieldContext::laurent(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const Poly f = random_monic(F, rng, static_cast<int>(rng.uniform(1, 4)), 3);
            std::int64_t r;
            try {
                r = discriminant_valuation(f).r;
            } catch (const Error&) {
                continue;
            }
            if (r > 4) continue;
            EXPECT_TRUE(check_bounds(f, 2'000'000).all_passed);
            ++checked;
        }
    }
    EXPECT_GT(checked, 30);
}

TEST(EquivalenceTest, Examples) {
    EXPECT_TRUE(equivalence_agreement(int_poly(FieldContext::padic(3), {0, -3, 1})));
    EXPECT_TRUE(equivalence_agreement(int_poly(FieldContext::padic(5), {1, 0, 1})));
}

TEST(EquivalenceTest, RandomCubicsOverQ3) {
    Rng rng(63);
    const FieldContext F = FieldContext::padic(3);
    int checked = 0;
    while (checked < 50) {
        const Poly f = random_monic(F, rng, 3, 3);
        std::int64_t r;
        try {
            r = discriminant_valuation(f).r;
        } catch (const Error&) {
            continue;
        }
        if (r > 3) continue;
        EXPECT_TRUE(equivalence_agreement(f));
        ++checked;
    }
}

TEST(OracleProperties, PerturbationKeepsTheCount) {
    Rng rng(64);
    for (const auto& entry : lrtest::random_corpus(65, 30, 200000)) {
        const FieldContext& F = entry.f.field();
        Poly g = entry.f;
        for (int i = 0; i < entry.f.degree(); ++i)
            g = g + Poly::monomial(F, F.mul(lrtest::random_unit(F, rng), F.pi_power(2 * entry.r + 1)), i);
        EXPECT_EQ(count_roots_oracle(entry.f), count_roots_oracle(g));
    }
}

TEST(OracleProperties, LiftedRootsReduceIntoTheRootSet) {
    for (const auto& entry : lrtest::random_corpus(66, 30, 200000)) {
        const FieldContext& F = entry.f.field();
        const int N = static_cast<int>(2 * entry.r + 1);
        const ResidueRootSet s = roots_mod(entry.f, N);
        const ResidueRing R(F, N);
        const RootSet rs = find_roots(entry.f, N + 2);
        for (const auto& root : rs.roots) {
            const auto x = R.reduce(F.exact(root.value));
            EXPECT_TRUE(std::binary_search(s.roots.begin(), s.roots.end(), x));
        }
        const std::int64_t zero = rs.zero_root_multiplicity > 0 ? 1 : 0;
        EXPECT_EQ(static_cast<std::int64_t>(rs.roots.size()) + zero,
                  static_cast<std::int64_t>(partition(s, Relation::Approx).classes.size()));
    }
}
