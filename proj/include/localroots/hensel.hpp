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

#ifndef LOCALROOTS_HENSEL_HPP
#define LOCALROOTS_HENSEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "localroots/poly.hpp"

namespace localroots {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceededError : public Error {
public:
    BudgetExceededError(int edge, mpz_class needed, std::uint64_t budget);
    /// Index of the lower edge being processed, or -1 outside root finding.
    int edge() const noexcept { return edge_; }
    const mpz_class& needed() const noexcept { return needed_; }

private:
    int edge_;
    mpz_class needed_;
};

/// Determinant of the Sylvester matrix (rows of f first), by fraction-free
/// Gaussian elimination. Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the
/// roots alpha of f.
KElement resultant(const Poly& f, const Poly& g);

struct DiscriminantInfo {
    KElement res_f_fprime;  // Res(f, f'), without the (-1)^(n(n-1)/2) sign
    std::int64_t r = 0;     // v(Res(f, f'))
};

/// Throws ZeroPolynomial, or VanishingDiscriminant when f has a repeated
/// root (or is constant).
DiscriminantInfo discriminant_valuation(const Poly& f);

/// Closed form (-1)^(n(n-1)/2) n^n a0^(n-1) for the discriminant of X^n + a0.
KElement binomial_discriminant(int n, const KElement& a0, const FieldContext& field);

struct ApproxRoot {
    KElement value;                        // truncated expansion
    ExtendedRational residual_valuation;   // exact v(f(value))
    std::optional<ResidueRingElement> class_id;
};

/// Newton iteration from gamma in A with v(f(gamma)) > 2 v(f'(gamma)) on an
/// integral f. The result agrees with the root xi modulo pi^target_precision
/// and satisfies v(xi - gamma) = v(f(gamma) / f'(gamma)).
ApproxRoot hensel_lift(const Poly& f, const KElement& gamma, int target_precision);

struct RootSet {
    std::int64_t zero_root_multiplicity = 0;
    std::vector<ApproxRoot> roots;  // nonzero roots, by (valuation, class)
    std::uint64_t evaluations = 0;  // residue evaluations spent on the search
};

/// All roots of f in K. Each nonzero root carries target_precision
/// significant digits. For every lower edge with integral root valuation m,
/// the primitive integral polynomial g(Y) = pi^-c f(pi^m Y) is searched for
/// unit roots modulo pi^(2r+1), r = v(Res(g, g')); each congruence class
/// modulo pi^(r+1) is lifted once and mapped back by Y -> pi^m Y.
RootSet find_roots(const Poly& f, int target_precision, std::uint64_t budget = kDefaultBudget);

}  // namespace localroots

#endif  // LOCALROOTS_HENSEL_HPP
