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

#include "localroots/poly.hpp"

namespace localroots {

namespace {

ResidueRingElement ring_pow(const ResidueRing& ring, ResidueRingElement base, int e) {
    ResidueRingElement r = ring.reduce(ring.field().one());
    while (e) {
        if (e & 1) r = ring.mul(r, base);
        e >>= 1;
        if (e) base = ring.mul(base, base);
    }
    return r;
}

}  // namespace

Poly::Poly(FieldContext field, const Terms& terms) : field_(std::move(field)) {
    for (const auto& [e, c] : terms) insert(e, c);
}

void Poly::insert(int exponent, const KElement& c) {
    if (exponent < 0) throw Error(ErrorCode::NonIntegerExponent, "negative exponent in polynomial");
    auto it = terms_.find(exponent);
    KElement sum = it == terms_.end() ? field_.exact(c) : field_.add(it->second, c);
    if (field_.is_zero(sum)) {
        if (it != terms_.end()) terms_.erase(it);
        return;
    }
    terms_.insert_or_assign(exponent, std::move(sum));
}

Poly Poly::constant(const FieldContext& field, const KElement& c) { return monomial(field, c, 0); }

Poly Poly::monomial(const FieldContext& field, const KElement& c, int exponent) {
    Poly f(field);
    f.insert(exponent, c);
    return f;
}

int Poly::degree() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return terms_.rbegin()->first;
}

int Poly::order() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "order of the zero polynomial");
    return terms_.begin()->first;
}

KElement Poly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? field_.zero() : it->second;
}

const KElement& Poly::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
    return terms_.rbegin()->second;
}

bool Poly::is_monic() const {
    return !terms_.empty() && leading_coefficient() == field_.one();
}

bool Poly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (field_.int_valuation(c) < 0) return false;
    return true;
}

Poly Poly::derivative() const {
    Poly d(field_);
    for (const auto& [e, c] : terms_)
        if (e > 0) d.insert(e - 1, field_.mul(field_.from_integer(e), c));
    return d;
}

KElement Poly::evaluate(const KElement& x) const {
    if (terms_.empty()) return field_.zero();
    KElement acc = field_.zero();
    int prev = terms_.rbegin()->first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        acc = field_.mul(acc, field_.pow(x, prev - it->first));
        acc = field_.add(acc, it->second);
        prev = it->first;
    }
    return field_.mul(acc, field_.pow(x, prev));
}

ResidueRingElement Poly::evaluate(const ResidueRing& ring, const ResidueRingElement& x) const {
    ResidueRingElement acc = ring.zero();
    if (terms_.empty()) return acc;
    int prev = terms_.rbegin()->first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        acc = ring.mul(acc, ring_pow(ring, x, prev - it->first));
        acc = ring.add(acc, ring.reduce(it->second));
        prev = it->first;
    }
    return ring.mul(acc, ring_pow(ring, x, prev));
}

Poly Poly::scale_variable(int m) const {
    Poly g(field_);
    for (const auto& [e, c] : terms_)
        g.terms_.emplace(e, field_.shift(c, static_cast<std::int64_t>(m) * e));
    return g;
}

Poly Poly::shift_valuation(int c) const {
    Poly g(field_);
    for (const auto& [e, a] : terms_) g.terms_.emplace(e, field_.shift(a, c));
    return g;
}

Poly Poly::scale(const KElement& c) const {
    Poly g(field_);
    for (const auto& [e, a] : terms_) g.insert(e, field_.mul(a, c));
    return g;
}

Poly Poly::divide_by_x_power(int k) const {
    if (!terms_.empty() && k > order())
        throw Error(ErrorCode::InexactDivision, "polynomial is not divisible by X^k");
    Poly g(field_);
    for (const auto& [e, a] : terms_) g.terms_.emplace(e - k, a);
    return g;
}

Poly Poly::operator-() const {
    Poly g(field_);
    for (const auto& [e, a] : terms_) g.terms_.emplace(e, field_.neg(a));
    return g;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.insert(e, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.field_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_) r.insert(e1 + e2, a.field_.mul(c1, c2));
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error(ErrorCode::NonIntegerExponent, "negative power of a polynomial");
    Poly r = constant(field_, field_.one());
    Poly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

}  // namespace localroots
