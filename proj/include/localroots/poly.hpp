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

#ifndef LOCALROOTS_POLY_HPP
#define LOCALROOTS_POLY_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "localroots/field.hpp"

namespace localroots {

/// Sparse univariate polynomial over K. Only nonzero coefficients are stored.
class Poly {
public:
    using Terms = std::map<int, KElement>;

    explicit Poly(FieldContext field) : field_(std::move(field)) {}
    Poly(FieldContext field, const Terms& terms);

    static Poly constant(const FieldContext& field, const KElement& c);
    static Poly monomial(const FieldContext& field, const KElement& c, int exponent);
    static Poly x(const FieldContext& field) { return monomial(field, field.one(), 1); }

    const FieldContext& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Throws ZeroPolynomial on the zero polynomial.
    int degree() const;
    /// Least exponent with a nonzero coefficient; throws ZeroPolynomial.
    int order() const;
    KElement coeff(int exponent) const;
    const KElement& leading_coefficient() const;

    bool is_monic() const;
    /// Every coefficient lies in the valuation ring.
    bool is_integral() const;

    Poly derivative() const;
    KElement evaluate(const KElement& x) const;
    /// f(x) in A/pi^N; requires an integral polynomial.
    ResidueRingElement evaluate(const ResidueRing& ring, const ResidueRingElement& x) const;

    /// f(pi^m X)
    Poly scale_variable(int m) const;
    /// pi^c f(X)
    Poly shift_valuation(int c) const;
    Poly scale(const KElement& c) const;
    /// f / X^k; requires k <= order().
    Poly divide_by_x_power(int k) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    void insert(int exponent, const KElement& c);

    FieldContext field_;
    Terms terms_;
};

}  // namespace localroots

#endif  // LOCALROOTS_POLY_HPP
