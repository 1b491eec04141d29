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

#include "support.hpp"

using namespace localroots;
using lrtest::int_poly;
using lrtest::Rng;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidField;
}

std::vector<std::uint32_t> digits_of(const ApproxRoot& r) { return r.value.truncated().digits; }

}  // namespace

TEST(ResultantTest, LinearFactors) {
    const FieldContext F = FieldContext::padic(5);
    // lc(f)^deg(g) * prod g(roots of f): g(1) = 1 - 2
    EXPECT_EQ(resultant(int_poly(F, {-1, 1}), int_poly(F, {-2, 1})), F.from_integer(-1));
    EXPECT_EQ(resultant(int_poly(F, {-2, 1}), int_poly(F, {-1, 1})), F.from_integer(1));
}

TEST(ResultantTest, MatchesProductOverRoots) {
    Rng rng(51);
    for (const FieldContext& F : {FieldContext::padic(3), FieldContext::laurent(5), FieldContext::laurent(2, 2)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<KElement> roots;
            const int m = static_cast<int>(rng.uniform(1, 4));
            for (int i = 0; i < m; ++i) roots.push_back(lrtest::random_integral(F, rng, 3));
            const KElement lead = F.mul(lrtest::random_unit(F, rng, 2), F.pi_power(rng.uniform(0, 2)));
            const Poly f = lrtest::from_roots(F, roots).scale(lead);
            Poly g(F);
            const int n = static_cast<int>(rng.uniform(0, 4));
            for (int i = 0; i <= n; ++i) g = g + Poly::monomial(F, lrtest::random_integral(F, rng, 3), i);
            g = g + Poly::monomial(F, F.one(), n + 1);
            KElement expect = F.pow(lead, g.degree());
            for (const auto& a : roots) expect = F.mul(expect, g.evaluate(a));
            EXPECT_EQ(resultant(f, g), expect) << F.describe();
        }
    }
}

TEST(ResultantTest, ConstantsAndSpecialCases) {
    const FieldContext F = FieldContext::padic(3);
    EXPECT_EQ(resultant(int_poly(F, {5}), int_poly(F, {1, 0, 1})), F.from_integer(25));
    EXPECT_EQ(resultant(int_poly(F, {1, 0, 1}), int_poly(F, {3})), F.from_integer(9));
    // common root
    EXPECT_TRUE(F.is_zero(resultant(int_poly(F, {-1, 0, 1}), int_poly(F, {1, 1}))));
    EXPECT_EQ(code_of([&] { resultant(Poly(F), int_poly(F, {1, 1})); }), ErrorCode::ZeroPolynomial);
    // Res(X^2 + c, 2X) = 4c
    EXPECT_EQ(resultant(int_poly(F, {7, 0, 1}), int_poly(F, {0, 2})), F.from_integer(28));
}

TEST(DiscriminantTest, XTimesXMinusP) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const FieldContext F = FieldContext::padic(p);
        const Poly f = int_poly(F, {0, -static_cast<long>(p), 1});
        const DiscriminantInfo info = discriminant_valuation(f);
        EXPECT_EQ(info.r, 2);
        EXPECT_EQ(info.res_f_fprime, F.from_integer(-static_cast<long>(p * p)));
    }
    const FieldContext L = FieldContext::laurent(3);
    const Poly g = Poly::x(L) * (Poly::x(L) - Poly::constant(L, L.uniformizer()));
    EXPECT_EQ(discriminant_valuation(g).r, 2);
}

TEST(DiscriminantTest, UnitBinomialsAreUnramified) {
    EXPECT_EQ(discriminant_valuation(int_poly(FieldContext::padic(5), {1, 0, 1})).r, 0);
    Rng rng(52);
    for (const FieldContext& F : {FieldContext::padic(7), FieldContext::laurent(5)}) {
        for (int n = 1; n <= 6; ++n) {
            if (n % F.p() == 0) continue;
            const Poly f = Poly::monomial(F, F.one(), n) + Poly::constant(F, lrtest::random_unit(F, rng));
            EXPECT_EQ(discriminant_valuation(f).r, 0);
        }
    }
}

TEST(DiscriminantTest, Vanishing) {
    const FieldContext F = FieldContext::padic(3);
    EXPECT_EQ(code_of([&] { discriminant_valuation(int_poly(F, {1, -2, 1})); }), ErrorCode::VanishingDiscriminant);
    EXPECT_EQ(code_of([&] { discriminant_valuation(int_poly(F, {4})); }), ErrorCode::VanishingDiscriminant);
    const FieldContext L = FieldContext::laurent(3);
    EXPECT_EQ(code_of([&] { discriminant_valuation(int_poly(L, {1, 0, 0, 1})); }),
              ErrorCode::VanishingDiscriminant);
}

TEST(DiscriminantTest, BinomialClosedForm) {
    const FieldContext F = FieldContext::padic(5);
    const KElement c = F.from_integer(11);
    EXPECT_EQ(binomial_discriminant(2, c, F), F.from_integer(-44));
    EXPECT_EQ(binomial_discriminant(3, F.one(), F), F.from_integer(-27));
    EXPECT_EQ(binomial_discriminant(1, c, F), F.one());
    EXPECT_EQ(code_of([&] { binomial_discriminant(2, F.zero(), F); }), ErrorCode::ZeroElement);
}

TEST(DiscriminantTest, BinomialMatchesResultant) {
    Rng rng(53);
    for (const FieldContext& F : {FieldContext::padic(3), FieldContext::padic(5), FieldContext::laurent(7)}) {
        for (int n = 1; n <= 8; ++n) {
            if (F.mode() == Characteristic::Equal && n % F.p() == 0) continue;  // n X^(n-1) = 0
            for (int trial = 0; trial < 5; ++trial) {
                const KElement a0 = F.mul(lrtest::random_unit(F, rng), F.pi_power(rng.uniform(-2, 4)));
                const Poly f = Poly::monomial(F, F.one(), n) + Poly::constant(F, a0);
                const Poly g = Poly::monomial(F, F.from_integer(n), n - 1);
                KElement expect = resultant(f, g);
                if ((n * (n - 1) / 2) % 2) expect = F.neg(expect);
                EXPECT_EQ(binomial_discriminant(n, a0, F), expect) << F.describe() << " n=" << n;
            }
        }
    }
}

TEST(HenselTest, SquareRootOfMinusOneModFivePowers) {
    const FieldContext F = FieldContext::padic(5);
    const ApproxRoot r = hensel_lift(int_poly(F, {1, 0, 1}), F.from_integer(2), 4);
    EXPECT_EQ(digits_of(r), (std::vector<std::uint32_t>{2, 1, 2, 1}));
    EXPECT_EQ(F.exact(r.value), F.from_integer(182));
    EXPECT_GE(r.residual_valuation, ExtendedRational(4));
    EXPECT_FALSE(r.class_id.has_value());
}

TEST(HenselTest, SquareRootOfTwoModSeven) {
    const FieldContext F = FieldContext::padic(7);
    const ApproxRoot r = hensel_lift(int_poly(F, {-2, 0, 1}), F.from_integer(3), 2);
    EXPECT_EQ(digits_of(r), (std::vector<std::uint32_t>{3, 1}));
}

TEST(HenselTest, LinearIsExact) {
    const FieldContext F = FieldContext::padic(3);
    const ApproxRoot r = hensel_lift(int_poly(F, {-100, 1}), F.from_integer(1), 6);
    EXPECT_EQ(F.exact(r.value), F.from_integer(100 % 729));
    const ApproxRoot exact = hensel_lift(int_poly(F, {-100, 1}), F.from_integer(100), 3);
    EXPECT_TRUE(exact.residual_valuation.is_infinite());
    EXPECT_EQ(F.exact(exact.value), F.from_integer(100 % 27));
}

TEST(HenselTest, NonUnitDerivative) {
    // X^2 - 17 over Q_2 from 1: v(f) = 4, v(f') = 1, so the root is 1 + O(2^3)
    const FieldContext F = FieldContext::padic(2);
    const Poly f = int_poly(F, {-17, 0, 1});
    const ApproxRoot r = hensel_lift(f, F.one(), 20);
    const KElement xi = F.exact(r.value);
    EXPECT_EQ(F.int_valuation(F.sub(xi, F.one())), 3);
    EXPECT_GE(r.residual_valuation, ExtendedRational(20));
}

TEST(HenselTest, RejectsBadInput) {
    const FieldContext F = FieldContext::padic(5);
    const Poly f = int_poly(F, {1, 0, 1});
    EXPECT_EQ(code_of([&] { hensel_lift(f, F.one(), 4); }), ErrorCode::HenselHypothesisFailed);
    EXPECT_EQ(code_of([&] { hensel_lift(f, F.from_rational(mpq_class(1, 5)), 4); }), ErrorCode::NotIntegral);
    EXPECT_EQ(code_of([&] { hensel_lift(f.scale(F.from_rational(mpq_class(1, 5))), F.from_integer(2), 4); }),
              ErrorCode::NotIntegral);
    EXPECT_EQ(code_of([&] { hensel_lift(f, F.from_integer(2), 0); }), ErrorCode::BadFieldElement);
    // f'(gamma) = 0 with f(gamma) != 0
    EXPECT_EQ(code_of([&] { hensel_lift(int_poly(F, {5, 0, 1}), F.zero(), 4); }),
              ErrorCode::HenselHypothesisFailed);
}

TEST(HenselTest, ContractOnRandomStartingPoints) {
    Rng rng(54);
    int checked = 0;
    for (const FieldContext& F : {FieldContext::padic(2), FieldContext::padic(3), FieldContext::padic(5),
                                  FieldContext::laurent(3), FieldContext::laurent(2, 2)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<KElement> roots;
            const int deg = static_cast<int>(rng.uniform(1, 4));
            for (int i = 0; i < deg; ++i) roots.push_back(lrtest::random_integral(F, rng, 4));
            Poly f = lrtest::from_roots(F, roots);
            f = f + Poly::monomial(F, F.pi_power(6), deg + 1);  // keeps f integral, moves the roots
            const KElement gamma = F.add(roots[0], F.mul(lrtest::random_unit(F, rng), F.pi_power(rng.uniform(1, 5))));
            const KElement fg = f.evaluate(gamma), dg = f.derivative().evaluate(gamma);
            if (F.is_zero(fg) || F.is_zero(dg)) continue;
            const std::int64_t e = F.int_valuation(fg), d = F.int_valuation(dg);
            if (e <= 2 * d) continue;
            const int T = static_cast<int>(e - d + rng.uniform(1, 12));
            const ApproxRoot r = hensel_lift(f, gamma, T);
            const KElement xi = F.exact(r.value);
            EXPECT_EQ(F.int_valuation(F.sub(xi, gamma)), e - d);
            EXPECT_GE(r.residual_valuation, ExtendedRational(T));
            // a second lift from the result lands on the same root
            const ApproxRoot again = hensel_lift(f, xi, T);
            EXPECT_EQ(F.exact(again.value), xi);
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(FindRootsTest, SquareRootsOfMinusOne) {
    const FieldContext F = FieldContext::padic(5);
    const RootSet rs = find_roots(int_poly(F, {1, 0, 1}), 6);
    EXPECT_EQ(rs.zero_root_multiplicity, 0);
    ASSERT_EQ(rs.roots.size(), 2u);
    const KElement sum = F.add(F.exact(rs.roots[0].value), F.exact(rs.roots[1].value));
    EXPECT_GE(F.int_valuation(sum), 6);
    for (const auto& r : rs.roots) {
        EXPECT_EQ(r.value.truncated().precision(), 6);
        EXPECT_GE(r.residual_valuation, ExtendedRational(6));
        EXPECT_TRUE(r.class_id.has_value());
    }
}

TEST(FindRootsTest, RamifiedBinomialHasNoRoots) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const FieldContext F = FieldContext::padic(p);
        const RootSet rs = find_roots(int_poly(F, {-static_cast<long>(p), 0, 1}), 5);
        EXPECT_EQ(rs.zero_root_multiplicity, 0);
        EXPECT_TRUE(rs.roots.empty());
    }
}

TEST(FindRootsTest, XTimesXMinusP) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const FieldContext F = FieldContext::padic(p);
        const RootSet rs = find_roots(int_poly(F, {0, -static_cast<long>(p), 1}), 5);
        EXPECT_EQ(rs.zero_root_multiplicity, 1);
        ASSERT_EQ(rs.roots.size(), 1u);
        EXPECT_EQ(F.exact(rs.roots[0].value), F.from_integer(p));
        EXPECT_EQ(rs.roots[0].value.truncated().base_valuation, 1);
        EXPECT_TRUE(rs.roots[0].residual_valuation.is_infinite());
    }
}

TEST(FindRootsTest, WidelySeparatedSlopes) {
    // (X - 1)(X - 3^5): two edges, and each scaled edge polynomial is searched
    const FieldContext F = FieldContext::padic(3);
    const RootSet rs = find_roots(int_poly(F, {243, -244, 1}), 4);
    ASSERT_EQ(rs.roots.size(), 2u);
    EXPECT_EQ(F.exact(rs.roots[0].value), F.one());
    EXPECT_EQ(F.exact(rs.roots[1].value), F.from_integer(243));
}

TEST(FindRootsTest, NonMonicAndNonIntegral) {
    const FieldContext F = FieldContext::padic(3);
    // X^2 / 3 - 3 has roots +-3; 1/9 + X has the root -1/9
    const Poly f = Poly::monomial(F, F.from_rational(mpq_class(1, 3)), 2) + int_poly(F, {-3});
    EXPECT_EQ(find_roots(f, 4).roots.size(), 2u);
    const RootSet g = find_roots(Poly::constant(F, F.from_rational(mpq_class(1, 9))) + Poly::x(F), 4);
    ASSERT_EQ(g.roots.size(), 1u);
    EXPECT_EQ(g.roots[0].value.truncated().base_valuation, -2);
    EXPECT_TRUE(g.roots[0].residual_valuation.is_infinite() ||
                g.roots[0].residual_valuation >= ExtendedRational(2));
}

TEST(FindRootsTest, EqualCharacteristic) {
    const FieldContext F = FieldContext::laurent(3);
    const Poly f = Poly::monomial(F, F.pi_power(2), 2) + Poly::x(F) + Poly::constant(F, F.one());
    const RootSet rs = find_roots(f, 5);
    ASSERT_EQ(rs.roots.size(), 2u);
    EXPECT_EQ(rs.roots[0].value.truncated().base_valuation, -2);
    EXPECT_EQ(rs.roots[1].value.truncated().base_valuation, 0);
    for (int t = 1; t <= 3; ++t) {
        const Poly s = sharp_family(t, FieldContext::laurent(2, 2));
        EXPECT_EQ(find_roots(s, 4).roots.size(), static_cast<std::size_t>(3 * t));
    }
}

TEST(FindRootsTest, Errors) {
    const FieldContext F = FieldContext::padic(3);
    EXPECT_EQ(code_of([&] { find_roots(int_poly(F, {0, 0, -1, 1}), 4); }), ErrorCode::VanishingDiscriminant);
    EXPECT_EQ(code_of([&] { find_roots(Poly(F), 4); }), ErrorCode::ZeroPolynomial);
    try {
        find_roots(sharp_family(3, F), 4, 50);
        FAIL();
    } catch (const BudgetExceededError& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
        EXPECT_GE(e.edge(), 0);
        EXPECT_GT(e.needed(), 50);
    }
}

TEST(FindRootsTest, AgreesWithCountsAndSeparates) {
    for (const auto& entry : lrtest::random_corpus(55, 40, 200000)) {
        const FieldContext& F = entry.f.field();
        const RootSet rs = find_roots(entry.f, static_cast<int>(2 * entry.r + 6));
        EXPECT_EQ(static_cast<std::int64_t>(rs.roots.size()), count_roots(entry.f).total_nonzero);
        std::vector<KElement> all;
        if (rs.zero_root_multiplicity) all.push_back(F.zero());
        for (const auto& r : rs.roots) {
            const KElement xi = F.exact(r.value);
            EXPECT_GE(F.int_valuation(xi), 0);
            // any gamma close to a root: v(f(gamma)) > r forces v(f'(gamma)) <= r
            const KElement gamma = F.add(xi, F.pi_power(entry.r + 1));
            EXPECT_GT(F.int_valuation(entry.f.evaluate(gamma)), entry.r);
            EXPECT_LE(F.int_valuation(entry.f.derivative().evaluate(gamma)), entry.r);
            all.push_back(xi);
        }
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                EXPECT_LE(2 * F.int_valuation(F.sub(all[i], all[j])), entry.r);
    }
}
