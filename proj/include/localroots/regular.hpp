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
 * Root counting in K^* for regular polynomials.
 *
 * f is regular when every lower edge of its Newton polygon carries exactly
 * two support points and its horizontal length is prime to char(F_q). For
 * such f the number of nonzero roots in K is the sum, over lower edges, of
 * the number of nonzero roots of the binomial a_s' X^s' + a_s X^s built from
 * the edge endpoints. That binomial has roots in K^* iff n = s - s' divides
 * l = v(a_s'/a_s) and -delta(a_s'/a_s) is an n-th power in F_q, in which case
 * it has exactly gcd(n, q - 1) of them.
 */

#ifndef LOCALROOTS_REGULAR_HPP
#define LOCALROOTS_REGULAR_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "localroots/newton.hpp"

namespace localroots {

enum class EdgeFailure { None, TooManySupportPoints, CharDividesLength };

std::string_view to_string(EdgeFailure failure) noexcept;

struct EdgeVerdict {
    LowerEdge edge;
    bool passes = true;
    EdgeFailure failure = EdgeFailure::None;
};

struct RegularityReport {
    bool regular = true;
    std::vector<EdgeVerdict> per_edge;
};

class NotRegularError : public Error {
public:
    explicit NotRegularError(RegularityReport report);
    const RegularityReport& report() const noexcept { return report_; }

private:
    RegularityReport report_;
};

struct LowerBinomial {
    std::int64_t s_prime = 0;
    KElement a_s_prime;
    std::int64_t s = 0;
    KElement a_s;
    LowerEdge edge;
};

struct BinomialRootCount {
    std::int64_t count = 0;
    mpq_class root_valuation;
};

struct SlopeCount {
    mpq_class root_valuation;
    std::int64_t count = 0;
};

struct RootCount {
    std::int64_t zero_root_multiplicity = 0;
    std::vector<SlopeCount> per_slope;  // one entry per lower edge, left to right
    std::int64_t total_nonzero = 0;
    std::int64_t bound = 0;  // (#lower edges) * (q - 1)
};

RegularityReport is_regular(const Poly& f);

/// One binomial per lower edge. Throws NotRegularError.
std::vector<LowerBinomial> lower_binomials(const Poly& f);

/// Throws NotRegularError if p divides s - s'.
BinomialRootCount count_binomial_roots(const LowerBinomial& b, const FieldContext& field);

/// Throws ZeroPolynomial or NotRegularError.
RootCount count_roots(const Poly& f);

/// sum_{i=0}^{t} (-1)^i pi^(i^2 (q-1)) X^(i (q-1)); regular with exactly
/// t (q - 1) roots in K^*.
Poly sharp_family(int t, const FieldContext& field);

}  // namespace localroots

#endif  // LOCALROOTS_REGULAR_HPP
