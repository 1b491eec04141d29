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

#include "localroots/oracle.hpp"

#include <algorithm>
#include <map>

namespace localroots {

namespace {

mpz_class q_power(const FieldContext& F, std::int64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), F.q(), static_cast<unsigned long>(std::max<std::int64_t>(e, 0)));
    return r;
}

// Dense coefficients a_0..a_d reduced into the ring.
std::vector<ResidueRingElement> dense_residues(const Poly& f, const ResidueRing& ring) {
    std::vector<ResidueRingElement> c(static_cast<std::size_t>(f.degree()) + 1, ring.zero());
    for (const auto& [e, a] : f.terms()) c[static_cast<std::size_t>(e)] = ring.reduce(a);
    return c;
}

// p^N < 2^62: walk x = 0, 1, 2, ... keeping the forward differences of f(x)
// mod p^N, so each step costs deg(f) additions.
std::vector<ResidueRingElement> scan_small_mixed(const std::vector<ResidueRingElement>& coeffs,
                                                 const ResidueRing& ring) {
    const std::uint64_t M = ring.size().get_ui();
    const std::size_t d = coeffs.size() - 1;
    std::vector<std::uint64_t> c(coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs[i].index.get_ui();

    std::vector<std::uint64_t> v(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        unsigned __int128 acc = 0;
        for (std::size_t i = d + 1; i-- > 0;) acc = (acc * (k % M) + c[i]) % M;
        v[k] = static_cast<std::uint64_t>(acc);
    }
    for (std::size_t level = 1; level <= d; ++level)
        for (std::size_t k = d; k >= level; --k) v[k] = (v[k] + M - v[k - 1]) % M;

    std::vector<ResidueRingElement> roots;
    for (std::uint64_t x = 0; x < M; ++x) {
        if (v[0] == 0) roots.push_back({mpz_class(static_cast<unsigned long>(x)), ring.precision()});
        for (std::size_t i = 0; i < d; ++i) {
            v[i] += v[i + 1];
            if (v[i] >= M) v[i] -= M;
        }
    }
    return roots;
}

// Equal characteristic: elements of F_q[t]/t^N as digit vectors, visited in
// index order by an odometer on the low digit.
std::vector<ResidueRingElement> scan_equal(const std::vector<ResidueRingElement>& coeffs,
                                           const ResidueRing& ring) {
    const FieldContext& F = ring.field();
    const std::size_t N = static_cast<std::size_t>(ring.precision());
    std::vector<std::vector<std::uint32_t>> c;
    for (const auto& a : coeffs) c.push_back(ring.digits(a));

    std::vector<std::uint32_t> x(N, 0), acc(N), prod(N);
    std::vector<ResidueRingElement> roots;
    mpz_class index = 0;
    const mpz_class& size = ring.size();
    for (; index < size; ++index) {
        acc = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            std::fill(prod.begin(), prod.end(), 0u);
            for (std::size_t a = 0; a < N; ++a) {
                if (acc[a] == 0) continue;
                for (std::size_t b = 0; a + b < N; ++b) {
                    if (x[b] == 0) continue;
                    prod[a + b] = F.residue_add({prod[a + b]}, F.residue_mul({acc[a]}, {x[b]})).value;
                }
            }
            for (std::size_t a = 0; a < N; ++a) acc[a] = F.residue_add({prod[a]}, {c[i][a]}).value;
        }
        if (std::all_of(acc.begin(), acc.end(), [](std::uint32_t v) { return v == 0; }))
            roots.push_back({index, ring.precision()});
        for (std::size_t k = 0; k < N; ++k) {
            if (++x[k] < F.q()) break;
            x[k] = 0;
        }
    }
    return roots;
}

std::vector<ResidueRingElement> scan_generic(const std::vector<ResidueRingElement>& coeffs,
                                             const ResidueRing& ring) {
    std::vector<ResidueRingElement> roots;
    for (mpz_class index = 0; index < ring.size(); ++index) {
        const ResidueRingElement x = ring.from_index(index);
        ResidueRingElement acc = coeffs.back();
        for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = ring.add(ring.mul(acc, x), coeffs[i]);
        if (ring.is_zero(acc)) roots.push_back(x);
    }
    return roots;
}

void require_monic_integral(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the oracle needs a nonzero polynomial");
    if (!f.is_integral()) throw Error(ErrorCode::NotIntegral, "the oracle needs coefficients in A");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "the oracle needs a monic polynomial");
}

std::int64_t class_count(const ResidueRootSet& s) {
    return static_cast<std::int64_t>(partition(s, Relation::Approx).classes.size());
}

bool fits(const FieldContext& F, std::int64_t N, std::uint64_t budget) {
    return q_power(F, N) <= mpz_class(static_cast<unsigned long>(budget));
}

}  // namespace

std::string_view to_string(Relation relation) noexcept {
    return relation == Relation::Approx ? "approx" : "fine";
}

ResidueRootSet roots_mod(const Poly& f, int N, std::uint64_t budget) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "every residue is a root of zero");
    if (N < 1) throw Error(ErrorCode::BadFieldElement, "precision N must be at least 1");
    if (!f.is_integral()) throw Error(ErrorCode::NotIntegral, "coefficients must lie in A");
    const FieldContext& F = f.field();
    const mpz_class need = q_power(F, N);
    if (need > mpz_class(static_cast<unsigned long>(budget))) throw BudgetExceededError(-1, need, budget);

    ResidueRootSet out;
    out.N = N;
    out.q = F.q();
    try {
        out.r = discriminant_valuation(f).r;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::VanishingDiscriminant) throw;
    }

    const ResidueRing ring(F, N);
    const auto coeffs = dense_residues(f, ring);
    if (F.mode() == Characteristic::Equal)
        out.roots = scan_equal(coeffs, ring);
    else if (mpz_sizeinbase(ring.size().get_mpz_t(), 2) <= 62)
        out.roots = scan_small_mixed(coeffs, ring);
    else
        out.roots = scan_generic(coeffs, ring);
    return out;
}

ClassPartition partition(const ResidueRootSet& roots, Relation relation) {
    if (!roots.r)
        throw Error(ErrorCode::VanishingDiscriminant, "classes need a nonzero discriminant");
    const std::int64_t r = *roots.r;
    ClassPartition out;
    out.relation = relation;

    std::int64_t k;  // congruence modulo pi^k; k = N is equality
    if (relation == Relation::Approx)
        k = roots.N > r ? r + 1 : roots.N;
    else
        k = std::max<std::int64_t>(roots.N - r, 0);
    k = std::min<std::int64_t>(k, roots.N);
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), roots.q, static_cast<unsigned long>(k));

    std::map<mpz_class, std::size_t> slot;
    for (const auto& x : roots.roots) {
        const mpz_class key = x.index % modulus;
        auto [it, fresh] = slot.try_emplace(key, out.classes.size());
        if (fresh) out.classes.emplace_back();
        out.classes[it->second].push_back(x);
    }
    // roots arrive sorted, so classes are already ordered by smallest member
    return out;
}

std::int64_t count_roots_oracle(const Poly& f, std::uint64_t budget) {
    require_monic_integral(f);
    const std::int64_t r = discriminant_valuation(f).r;
    return class_count(roots_mod(f, static_cast<int>(2 * r + 1), budget));
}

BoundsReport check_bounds(const Poly& f, std::uint64_t budget, int sweep_max) {
    require_monic_integral(f);
    const FieldContext& F = f.field();
    BoundsReport rep;
    rep.r = discriminant_valuation(f).r;
    const std::int64_t r = rep.r;
    const int N0 = static_cast<int>(2 * r + 1);

    const ResidueRootSet base = roots_mod(f, N0, budget);
    rep.class_count = class_count(base);
    auto add = [&](std::string name, int N, mpz_class observed, mpz_class limit, bool passed) {
        rep.all_passed = rep.all_passed && passed;
        rep.checks.push_back({std::move(name), N, std::move(observed), std::move(limit), passed});
    };

    const mpz_class classes(static_cast<long>(rep.class_count));
    const mpz_class class_limit = q_power(F, r / 2 + 1);
    add("classes <= q^(floor(r/2)+1)", N0, classes, class_limit, classes <= class_limit);

    for (int N : {N0, N0 + 1}) {
        if (N != N0 && !fits(F, N, budget)) continue;
        const ResidueRootSet s = N == N0 ? base : roots_mod(f, N, budget);
        const mpz_class size(static_cast<unsigned long>(s.roots.size()));
        const mpz_class by_classes = q_power(F, r) * classes;
        add("|S_N| <= q^r * classes", N, size, by_classes, size <= by_classes);
        const mpz_class absolute = q_power(F, r + r / 2 + 1);
        add("|S_N| <= q^(r+floor(r/2)+1)", N, size, absolute, size <= absolute);
    }

    if (r == 0) {
        const int top = sweep_max >= 1 ? sweep_max : std::max<int>(N0 + 1, 4);
        for (int N = 1; N <= top; ++N) {
            if (N != N0 && !fits(F, N, budget)) continue;
            const ResidueRootSet s = N == N0 ? base : roots_mod(f, N, budget);
            const mpz_class size(static_cast<unsigned long>(s.roots.size()));
            add("|S_N| == classes", N, size, classes, size == classes);
        }
    }
    return rep;
}

bool equivalence_agreement(const Poly& f, std::uint64_t budget) {
    require_monic_integral(f);
    const std::int64_t r = discriminant_valuation(f).r;
    const ResidueRootSet s = roots_mod(f, static_cast<int>(2 * r + 1), budget);
    const ClassPartition a = partition(s, Relation::Approx);
    const ClassPartition b = partition(s, Relation::Fine);
    // both list classes by smallest member, so equal partitions compare equal
    return a.classes == b.classes;
}

}  // namespace localroots
