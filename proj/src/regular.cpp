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

#include "localroots/regular.hpp"

#include <numeric>

namespace localroots {

std::string_view to_string(EdgeFailure failure) noexcept {
    switch (failure) {
    case EdgeFailure::None: return "none";
    case EdgeFailure::TooManySupportPoints: return "TooManySupportPoints";
    case EdgeFailure::CharDividesLength: return "CharDividesLength";
    }
    return "none";
}

NotRegularError::NotRegularError(RegularityReport report)
    : Error(ErrorCode::NotRegular, "polynomial is not regular"), report_(std::move(report)) {}

RegularityReport is_regular(const Poly& f) {
    RegularityReport report;
    if (f.term_count() < 2) return report;
    for (auto& edge : lower_edges(newton_polygon(f))) {
        EdgeVerdict v;
        if (edge.support_on_edge.size() != 2) {
            v.failure = EdgeFailure::TooManySupportPoints;
        } else if (edge.length % f.field().p() == 0) {
            v.failure = EdgeFailure::CharDividesLength;
        }
        v.passes = v.failure == EdgeFailure::None;
        report.regular = report.regular && v.passes;
        v.edge = std::move(edge);
        report.per_edge.push_back(std::move(v));
    }
    return report;
}

std::vector<LowerBinomial> lower_binomials(const Poly& f) {
    RegularityReport report = is_regular(f);
    if (!report.regular) throw NotRegularError(std::move(report));
    std::vector<LowerBinomial> out;
    out.reserve(report.per_edge.size());
    for (auto& v : report.per_edge) {
        LowerBinomial b;
        b.s_prime = v.edge.left.x;
        b.s = v.edge.right.x;
        b.a_s_prime = f.coeff(static_cast<int>(b.s_prime));
        b.a_s = f.coeff(static_cast<int>(b.s));
        b.edge = std::move(v.edge);
        out.push_back(std::move(b));
    }
    return out;
}

BinomialRootCount count_binomial_roots(const LowerBinomial& b, const FieldContext& field) {
    const std::int64_t n = b.s - b.s_prime;
    if (n <= 0 || n % field.p() == 0) {
        RegularityReport report;
        report.regular = false;
        report.per_edge.push_back({b.edge, false, EdgeFailure::CharDividesLength});
        throw NotRegularError(std::move(report));
    }
    // X^n + a0 with a0 = a_s' / a_s; only v(a0) and delta(a0) matter.
    const std::int64_t l = field.int_valuation(b.a_s_prime) - field.int_valuation(b.a_s);
    const ResidueElement delta =
        field.residue_mul(field.first_digit(b.a_s_prime), field.residue_inv(field.first_digit(b.a_s)));

    BinomialRootCount r;
    r.root_valuation = mpq_class(mpz_class(static_cast<long>(l)), mpz_class(static_cast<long>(n)));
    r.root_valuation.canonicalize();
    if (l % n != 0) return r;
    if (field.is_nth_power(field.residue_neg(delta), n))
        r.count = std::gcd(n, static_cast<std::int64_t>(field.q()) - 1);
    return r;
}

RootCount count_roots(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot count roots of the zero polynomial");
    RootCount rc;
    rc.zero_root_multiplicity = f.order();
    for (const auto& b : lower_binomials(f)) {
        BinomialRootCount c = count_binomial_roots(b, f.field());
        rc.per_slope.push_back({c.root_valuation, c.count});
        rc.total_nonzero += c.count;
    }
    rc.bound = static_cast<std::int64_t>(rc.per_slope.size()) * (f.field().q() - 1);
    return rc;
}

Poly sharp_family(int t, const FieldContext& field) {
    if (t < 1) throw Error(ErrorCode::BadFieldElement, "sharp family needs t >= 1");
    const std::int64_t qm1 = field.q() - 1;
    Poly f(field);
    for (int i = 0; i <= t; ++i) {
        KElement c = field.pi_power(static_cast<std::int64_t>(i) * i * qm1);
        if (i % 2) c = field.neg(c);
        f = f + Poly::monomial(field, c, static_cast<int>(i * qm1));
    }
    return f;
}

}  // namespace localroots
