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
 * Exact arithmetic for a complete discretely valued field K with finite
 * residue field F_q. Two families are supported:
 *
 *   - mixed characteristic, K = Q_p: elements are exact rationals and the
 *     uniformizer is p;
 *   - equal characteristic, K = F_q((t)), q = p^f: elements are finite
 *     Laurent polynomials over F_q and the uniformizer is t.
 *
 * Elements of A/pi^N (A the valuation ring) are stored by a canonical index
 * in [0, q^N): the integer itself for Q_p, and sum d_k q^k for the digit
 * vector (d_0, ..., d_{N-1}) over F_q. In both cases truncation to A/pi^k is
 * "index mod q^k" and division by pi^k is "index / q^k".
 */

#ifndef LOCALROOTS_FIELD_HPP
#define LOCALROOTS_FIELD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "localroots/error.hpp"

namespace localroots {

enum class Characteristic { Mixed, Equal };

/// An element of F_q. For q = p^f with f > 1 the value packs the coefficients
/// c_0 + c_1 y + ... of its representative modulo the defining polynomial as
/// the base-p number c_0 + c_1 p + ...
struct ResidueElement {
    std::uint32_t value = 0;

    friend bool operator==(ResidueElement, ResidueElement) = default;
    friend auto operator<=>(ResidueElement, ResidueElement) = default;
};

/// A rational number or +infinity. Used for valuations (v(0) = +inf) and
/// for the slopes of Newton polygons.
class ExtendedRational {
public:
    ExtendedRational() = default;
    ExtendedRational(long v) : value_(v) {}
    ExtendedRational(const mpz_class& v) : value_(v) {}
    ExtendedRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    static ExtendedRational infinity();

    bool is_infinite() const noexcept { return infinite_; }
    bool is_integer() const;
    /// Throws ZeroElement when infinite.
    const mpq_class& value() const;

    std::string to_string() const;

    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
    mpq_class value_{0};
    bool infinite_ = false;
};

/// Finitely supported Laurent polynomial over F_q: exponent -> nonzero digit.
struct Laurent {
    std::map<std::int64_t, std::uint32_t> terms;

    friend bool operator==(const Laurent&, const Laurent&) = default;
};

/// Digits d_0 .. d_{N-1} of an expansion sum d_k pi^(base + k), known modulo
/// pi^(base + N). Canonical form has d_0 != 0 unless every digit is zero.
struct Truncated {
    std::int64_t base_valuation = 0;
    std::vector<std::uint32_t> digits;

    std::int64_t precision() const noexcept { return static_cast<std::int64_t>(digits.size()); }

    friend bool operator==(const Truncated&, const Truncated&) = default;
};

class KElement {
public:
    using Repr = std::variant<mpq_class, Laurent, Truncated>;

    KElement() : repr_(mpq_class(0)) {}
    explicit KElement(mpq_class q);
    explicit KElement(Laurent l);
    explicit KElement(Truncated t);

    const Repr& repr() const noexcept { return repr_; }
    bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(repr_); }
    bool is_laurent() const noexcept { return std::holds_alternative<Laurent>(repr_); }
    bool is_truncated() const noexcept { return std::holds_alternative<Truncated>(repr_); }
    const mpq_class& rational() const { return std::get<mpq_class>(repr_); }
    const Laurent& laurent() const { return std::get<Laurent>(repr_); }
    const Truncated& truncated() const { return std::get<Truncated>(repr_); }

    friend bool operator==(const KElement& a, const KElement& b) { return a.repr_ == b.repr_; }

private:
    Repr repr_;
};

/// A canonical element of A/pi^N; see the file comment for the encoding.
struct ResidueRingElement {
    mpz_class index{0};
    int precision = 1;

    friend bool operator==(const ResidueRingElement& a, const ResidueRingElement& b) {
        return a.precision == b.precision && a.index == b.index;
    }
    friend std::strong_ordering operator<=>(const ResidueRingElement& a,
                                            const ResidueRingElement& b) {
        if (auto c = a.precision <=> b.precision; c != 0) return c;
        int c = cmp(a.index, b.index);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

/// The base field K together with its residue field. Cheap to copy; all copies
/// share the same immutable tables.
class FieldContext {
public:
    /// Q_p. Throws InvalidField unless p is a prime below 2^31.
    static FieldContext padic(std::uint32_t p);
    /// F_q((t)) with q = p^f. For f > 1, F_q = F_p[y]/(m(y)) where m is the
    /// lexicographically smallest monic irreducible of degree f, comparing
    /// coefficients from the constant term upward. q is limited to 2^16 when
    /// f > 1.
    static FieldContext laurent(std::uint32_t p, unsigned f = 1);

    Characteristic mode() const noexcept;
    std::uint32_t p() const noexcept;
    unsigned residue_degree() const noexcept;
    std::uint32_t q() const noexcept;
    /// Coefficients of m, constant term first; empty when f == 1.
    const std::vector<std::uint32_t>& modulus() const noexcept;
    std::string describe() const;

    friend bool operator==(const FieldContext& a, const FieldContext& b) noexcept;

    // --- residue field F_q ---------------------------------------------------
    ResidueElement residue(std::int64_t n) const;
    ResidueElement residue_add(ResidueElement a, ResidueElement b) const;
    ResidueElement residue_sub(ResidueElement a, ResidueElement b) const;
    ResidueElement residue_neg(ResidueElement a) const;
    ResidueElement residue_mul(ResidueElement a, ResidueElement b) const;
    ResidueElement residue_pow(ResidueElement a, std::int64_t e) const;
    ResidueElement residue_inv(ResidueElement a) const;
    /// c in (F_q)^* is an n-th power iff c^((q-1)/gcd(n, q-1)) == 1.
    bool is_nth_power(ResidueElement c, std::int64_t n) const;

    // --- the field K -----------------------------------------------------------
    KElement zero() const;
    KElement one() const;
    KElement from_integer(const mpz_class& n) const;
    KElement from_rational(const mpq_class& q) const;
    /// The digit c placed at pi^0 (in Q_p its integer representative in [0, p)).
    KElement from_residue(ResidueElement c) const;
    KElement uniformizer() const;
    KElement pi_power(std::int64_t k) const;

    bool is_zero(const KElement& x) const;
    KElement add(const KElement& a, const KElement& b) const;
    KElement sub(const KElement& a, const KElement& b) const;
    KElement neg(const KElement& a) const;
    KElement mul(const KElement& a, const KElement& b) const;
    /// a^e; negative e requires an invertible base (any nonzero rational, or
    /// a Laurent monomial).
    KElement pow(const KElement& a, std::int64_t e) const;
    /// a / b when the quotient exists in the representation of K (always for
    /// Q_p; for Laurent polynomials only when b divides a).
    KElement exact_div(const KElement& a, const KElement& b) const;
    /// x * pi^k.
    KElement shift(const KElement& x, std::int64_t k) const;

    ExtendedRational valuation(const KElement& x) const;
    /// valuation as an integer; throws ZeroElement for x == 0.
    std::int64_t int_valuation(const KElement& x) const;
    /// delta(x) = residue of x / pi^v(x); throws ZeroElement.
    ResidueElement first_digit(const KElement& x) const;

    /// Exact representative of a truncated expansion; other elements unchanged.
    KElement exact(const KElement& x) const;

    std::string to_string(const KElement& x) const;
    std::string residue_to_string(ResidueElement c) const;

    struct Impl;

private:
    explicit FieldContext(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    void check_repr(const KElement& x) const;

    std::shared_ptr<const Impl> impl_;
};

/// The ring A/pi^N.
class ResidueRing {
public:
    ResidueRing(FieldContext field, int precision);

    const FieldContext& field() const noexcept { return field_; }
    int precision() const noexcept { return precision_; }
    /// q^N
    const mpz_class& size() const noexcept { return size_; }

    /// Canonical image of x in A/pi^N; throws NotIntegral when v(x) < 0.
    ResidueRingElement reduce(const KElement& x) const;
    ResidueRingElement from_index(const mpz_class& index) const;
    ResidueRingElement from_digits(std::span<const std::uint32_t> digits) const;
    std::vector<std::uint32_t> digits(const ResidueRingElement& x) const;
    /// x as the canonical expansion d_0 + d_1 pi + ... known modulo pi^N.
    Truncated expansion(const ResidueRingElement& x) const;
    /// Representative of x in A (an integer in [0, p^N), or a polynomial in t).
    KElement lift(const ResidueRingElement& x) const;

    ResidueRingElement zero() const { return {0, precision_}; }
    ResidueRingElement add(const ResidueRingElement& a, const ResidueRingElement& b) const;
    ResidueRingElement sub(const ResidueRingElement& a, const ResidueRingElement& b) const;
    ResidueRingElement neg(const ResidueRingElement& a) const;
    ResidueRingElement mul(const ResidueRingElement& a, const ResidueRingElement& b) const;
    /// Throws ZeroInverse unless x is a unit.
    ResidueRingElement unit_inverse(const ResidueRingElement& x) const;

    /// Largest k <= N with pi^k | x.
    int valuation(const ResidueRingElement& x) const;
    bool is_zero(const ResidueRingElement& x) const { return x.index == 0; }
    /// Image in A/pi^k for k <= N.
    ResidueRingElement truncate(const ResidueRingElement& x, int k) const;
    /// x / pi^k as an element of A/pi^(N-k); requires valuation(x) >= k.
    ResidueRingElement divide_by_pi(const ResidueRingElement& x, int k) const;
    /// Re-read an element of a coarser ring through its index.
    ResidueRingElement embed(const ResidueRingElement& x) const;

    std::string to_string(const ResidueRingElement& x) const;

private:
    void check(const ResidueRingElement& x) const;

    FieldContext field_;
    int precision_;
    mpz_class size_;
};

}  // namespace localroots

#endif  // LOCALROOTS_FIELD_HPP
