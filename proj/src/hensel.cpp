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

#include "localroots/hensel.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "localroots/newton.hpp"

namespace localroots {

BudgetExceededError::BudgetExceededError(int edge, mpz_class needed, std::uint64_t budget)
    : Error(ErrorCode::BudgetExceeded,
            "residue enumeration needs more than the budget of " + std::to_string(budget) +
                " evaluations",
            "edge=" + std::to_string(edge) + " needed=" + needed.get_str()),
      edge_(edge),
      needed_(std::move(needed)) {}

KElement resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
    const FieldContext& F = f.field();
    const int m = f.degree(), n = g.degree();
    if (m == 0) return F.pow(f.leading_coefficient(), n);
    if (n == 0) return F.pow(g.leading_coefficient(), m);

    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<KElement>> M(size, std::vector<KElement>(size, F.zero()));
    for (int i = 0; i < n; ++i)
        for (const auto& [k, c] : f.terms()) M[i][static_cast<std::size_t>(i + m - k)] = c;
    for (int i = 0; i < m; ++i)
        for (const auto& [k, c] : g.terms()) M[n + i][static_cast<std::size_t>(i + n - k)] = c;

    // Bareiss: every division below is exact in the coefficient ring.
    KElement prev = F.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (F.is_zero(M[k][k])) {
            std::size_t r = k + 1;
            while (r < size && F.is_zero(M[r][k])) ++r;
            if (r == size) return F.zero();
            std::swap(M[k], M[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                KElement t = F.sub(F.mul(M[i][j], M[k][k]), F.mul(M[i][k], M[k][j]));
                M[i][j] = F.exact_div(t, prev);
            }
        }
        prev = M[k][k];
    }
    KElement det = M[size - 1][size - 1];
    return negate ? F.neg(det) : det;
}

DiscriminantInfo discriminant_valuation(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "discriminant of the zero polynomial");
    Poly df = f.derivative();
    if (df.is_zero())
        throw Error(ErrorCode::VanishingDiscriminant, "derivative vanishes identically");
    DiscriminantInfo info{resultant(f, df), 0};
    if (f.field().is_zero(info.res_f_fprime))
        throw Error(ErrorCode::VanishingDiscriminant, "polynomial has a repeated root");
    info.r = f.field().int_valuation(info.res_f_fprime);
    return info;
}

KElement binomial_discriminant(int n, const KElement& a0, const FieldContext& field) {
    if (n < 1) throw Error(ErrorCode::BadFieldElement, "binomial degree must be positive");
    if (field.is_zero(a0)) throw Error(ErrorCode::ZeroElement, "binomial constant term is zero");
    mpz_class nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) nn = -nn;
    return field.mul(field.from_integer(nn), field.pow(a0, n - 1));
}

ApproxRoot hensel_lift(const Poly& f, const KElement& gamma, int target_precision) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot lift a root of zero");
    if (target_precision < 1)
        throw Error(ErrorCode::BadFieldElement, "target precision must be at least 1");
    if (!f.is_integral()) throw Error(ErrorCode::NotIntegral, "polynomial is not integral");
    const FieldContext& F = f.field();
    const KElement g0 = F.exact(gamma);
    if (!F.is_zero(g0) && F.int_valuation(g0) < 0)
        throw Error(ErrorCode::NotIntegral, "starting point is not integral", F.to_string(g0));

    const ResidueRing out(F, target_precision);
    const Poly df = f.derivative();
    const KElement fv = f.evaluate(g0);
    if (F.is_zero(fv))
        return {KElement(out.expansion(out.reduce(g0))), ExtendedRational::infinity(), std::nullopt};
    const KElement dv = df.evaluate(g0);
    if (F.is_zero(dv))
        throw Error(ErrorCode::HenselHypothesisFailed, "f'(gamma) = 0");
    const std::int64_t e = F.int_valuation(fv);
    const std::int64_t d = F.int_valuation(dv);
    if (e <= 2 * d)
        throw Error(ErrorCode::HenselHypothesisFailed, "v(f(gamma)/f'(gamma)^2) <= 0",
                    "v(f)=" + std::to_string(e) + " v(f')=" + std::to_string(d));

    const int T = target_precision;
    const int dd = static_cast<int>(d);
    // x is congruent to the root modulo pi^k throughout
    int k = static_cast<int>(e - d);
    ResidueRingElement x = ResidueRing(F, std::min(k, T)).reduce(g0);
    while (k < T) {
        const int W = std::min(2 * k, T + dd);
        const ResidueRing ring(F, W);
        const ResidueRingElement xw = ring.embed(x);
        const ResidueRingElement fx = f.evaluate(ring, xw);
        const ResidueRingElement dx = df.evaluate(ring, xw);
        if (ring.valuation(dx) != dd || ring.valuation(fx) < dd)
            throw Error(ErrorCode::NonConvergence, "Newton iteration lost the derivative valuation");
        const ResidueRing coarse(F, W - dd);
        const ResidueRingElement step =
            coarse.mul(ring.divide_by_pi(fx, dd), coarse.unit_inverse(ring.divide_by_pi(dx, dd)));
        x = coarse.sub(ring.truncate(xw, W - dd), step);
        k = W - dd;
    }
    x = ResidueRing(F, k).truncate(x, T);

    if (e - d < T) {
        const ResidueRingElement moved = out.sub(x, out.reduce(g0));
        if (out.valuation(moved) != e - d)
            throw Error(ErrorCode::NonConvergence, "lifted root left the predicted disc");
    }
    KElement value(out.expansion(x));
    ExtendedRational residual = F.valuation(f.evaluate(F.exact(value)));
    return {std::move(value), std::move(residual), std::nullopt};
}

namespace {

using ResidueTerms = std::vector<std::pair<int, ResidueRingElement>>;

ResidueRingElement evaluate_terms(const ResidueRing& ring, const ResidueTerms& terms,
                                  const ResidueRingElement& x) {
    // terms are sorted by decreasing exponent
    ResidueRingElement acc = ring.zero();
    if (terms.empty()) return acc;
    int prev = terms.front().first;
    auto power = [&](int e) {
        ResidueRingElement r = ring.from_index(1);
        ResidueRingElement b = x;
        while (e) {
            if (e & 1) r = ring.mul(r, b);
            e >>= 1;
            if (e) b = ring.mul(b, b);
        }
        return r;
    };
    for (const auto& [exp, c] : terms) {
        acc = ring.add(ring.mul(acc, power(prev - exp)), ring.from_index(mpz_class(c.index % ring.size())));
        prev = exp;
    }
    return ring.mul(acc, power(prev));
}

// Unit roots of g modulo pi^N, grown one digit at a time: x is a root modulo
// pi^(k+1) only if its truncation is a root modulo pi^k.
std::vector<ResidueRingElement> unit_roots_mod(const Poly& g, int N, int edge,
                                               std::uint64_t budget, std::uint64_t& spent) {
    const FieldContext& F = g.field();
    const ResidueRing top(F, N);
    ResidueTerms terms;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it)
        terms.emplace_back(it->first, top.reduce(it->second));

    auto charge = [&] {
        if (++spent > budget) throw BudgetExceededError(edge, mpz_class(spent), budget);
    };

    std::vector<ResidueRingElement> level;
    const ResidueRing first(F, 1);
    for (std::uint32_t d = 1; d < F.q(); ++d) {
        charge();
        ResidueRingElement x = first.from_index(d);
        if (first.is_zero(evaluate_terms(first, terms, x))) level.push_back(x);
    }
    mpz_class digit_weight = 1;
    for (int k = 1; k < N && !level.empty(); ++k) {
        digit_weight *= F.q();
        const ResidueRing ring(F, k + 1);
        std::vector<ResidueRingElement> next;
        for (const auto& x : level) {
            for (std::uint32_t d = 0; d < F.q(); ++d) {
                charge();
                ResidueRingElement y = ring.from_index(x.index + digit_weight * d);
                if (ring.is_zero(evaluate_terms(ring, terms, y))) next.push_back(std::move(y));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

RootSet find_roots(const Poly& f, int target_precision, std::uint64_t budget) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot find roots of zero");
    const FieldContext& F = f.field();
    RootSet out;
    out.zero_root_multiplicity = f.order();
    const Poly g0 = f.divide_by_x_power(f.order());
    if (g0.degree() == 0) return out;
    discriminant_valuation(f);

    struct Found {
        std::int64_t valuation;
        ApproxRoot root;
    };
    std::vector<Found> found;
    const auto edges = lower_edges(newton_polygon(g0));
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        const LowerEdge& edge = edges[idx];
        const EdgeRootData data = edge_root_data(edge);
        if (data.root_valuation.get_den() != 1) continue;  // no roots of K on this edge
        const long m = data.root_valuation.get_num().get_si();
        const std::int64_t c = edge.left.y + m * edge.left.x;
        const Poly g = g0.scale_variable(static_cast<int>(m)).shift_valuation(static_cast<int>(-c));

        const std::int64_t r = discriminant_valuation(g).r;
        const int N = static_cast<int>(2 * r + 1);
        const ResidueRing ring(F, N);
        auto roots = unit_roots_mod(g, N, static_cast<int>(idx), budget, out.evaluations);

        std::map<mpz_class, ResidueRingElement> classes;  // key: index mod pi^(r+1)
        for (const auto& x : roots) {
            ResidueRingElement key = ring.truncate(x, static_cast<int>(r + 1));
            classes.try_emplace(key.index, x);
        }
        for (const auto& [key, rep] : classes) {
            ApproxRoot eta = hensel_lift(g, ring.lift(rep), target_precision);
            KElement xi = F.shift(eta.value, m);
            ExtendedRational residual = F.valuation(f.evaluate(F.exact(xi)));
            found.push_back({m, {std::move(xi), std::move(residual),
                                 ring.truncate(rep, static_cast<int>(r + 1))}});
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        return a.valuation < b.valuation;
    });
    for (auto& fr : found) out.roots.push_back(std::move(fr.root));
    return out;
}

}  // namespace localroots
