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

/*
 * Brute-force root enumeration in A/pi^N.
 *
 * Nothing here looks at Newton polygons or lifts roots: every residue class
 * modulo pi^N is evaluated. For a monic f in A[X] with r = v(Res(f, f')) and
 * N > 2r, the roots of f in K are in bijection with the classes of the
 * residue roots S_N modulo pi^(r+1).
 */

#ifndef LOCALROOTS_ORACLE_HPP
#define LOCALROOTS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localroots/hensel.hpp"

namespace localroots {

struct ResidueRootSet {
    int N = 0;
    std::uint32_t q = 0;
    std::vector<ResidueRingElement> roots;  // S_N in increasing index order
    std::optional<std::int64_t> r;          // empty when Res(f, f') = 0
};

/// Approx: x ~ y iff x = y mod pi^(r+1) when N > r, and x = y otherwise.
/// Fine: x ~ y iff x = y mod pi^(N-r).
enum class Relation { Approx, Fine };

std::string_view to_string(Relation relation) noexcept;

struct ClassPartition {
    Relation relation = Relation::Approx;
    std::vector<std::vector<ResidueRingElement>> classes;  // ordered by smallest member
};

/// Every x in A/pi^N with f(x) = 0, by exhaustive scan. f must be integral
/// (not necessarily monic). Throws BudgetExceeded when q^N > budget.
ResidueRootSet roots_mod(const Poly& f, int N, std::uint64_t budget = kDefaultBudget);

/// Throws VanishingDiscriminant when the root set carries no r.
ClassPartition partition(const ResidueRootSet& roots, Relation relation);

/// |S_N / Approx| at N = 2r + 1. f must be monic and integral.
std::int64_t count_roots_oracle(const Poly& f, std::uint64_t budget = kDefaultBudget);

struct BoundCheck {
    std::string name;
    int N = 0;
    mpz_class observed;
    mpz_class limit;  // for "equal" checks, the value observed must match
    bool passed = false;
};

struct BoundsReport {
    std::int64_t r = 0;
    std::int64_t class_count = 0;  // at N = 2r + 1
    std::vector<BoundCheck> checks;
    bool all_passed = true;
};

/// Class count <= q^(floor(r/2)+1); |S_N| <= q^r * class count and
/// |S_N| <= q^(r+floor(r/2)+1) for N = 2r+1 and 2r+2; when r = 0, |S_N| equals
/// the class count for N = 1..sweep_max. Precisions beyond the budget are
/// skipped, except N = 2r + 1 which must fit. sweep_max < 1 means
/// max(2r + 2, 4).
BoundsReport check_bounds(const Poly& f, std::uint64_t budget = kDefaultBudget, int sweep_max = 0);

/// True iff the Approx and Fine partitions of S_(2r+1) coincide.
bool equivalence_agreement(const Poly& f, std::uint64_t budget = kDefaultBudget);

}  // namespace localroots

#endif  // LOCALROOTS_ORACLE_HPP
