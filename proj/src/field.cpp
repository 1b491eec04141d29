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

#include "localroots/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace localroots {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::BadFieldElement: return "BadFieldElement";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::VanishingDiscriminant: return "VanishingDiscriminant";
    case ErrorCode::HenselHypothesisFailed: return "HenselHypothesisFailed";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// ExtendedRational

ExtendedRational ExtendedRational::infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
}

bool ExtendedRational::is_integer() const {
    return !infinite_ && value_.get_den() == 1;
}

const mpq_class& ExtendedRational::value() const {
    if (infinite_) throw Error(ErrorCode::ZeroElement, "valuation is +infinity");
    return value_;
}

std::string ExtendedRational::to_string() const {
    return infinite_ ? std::string("inf") : value_.get_str();
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return ExtendedRational::infinity();
    return ExtendedRational(mpq_class(a.value_ + b.value_));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------
// KElement

KElement::KElement(mpq_class q) : repr_(std::move(q)) {
    std::get<mpq_class>(repr_).canonicalize();
}

KElement::KElement(Laurent l) {
    std::erase_if(l.terms, [](const auto& kv) { return kv.second == 0; });
    repr_ = std::move(l);
}

KElement::KElement(Truncated t) {
    if (t.digits.empty())
        throw Error(ErrorCode::BadFieldElement, "truncated expansion needs at least one digit");
    auto first = std::find_if(t.digits.begin(), t.digits.end(), [](auto d) { return d != 0; });
    if (first != t.digits.end() && first != t.digits.begin()) {
        t.base_valuation += first - t.digits.begin();
        t.digits.erase(t.digits.begin(), first);
    }
    repr_ = std::move(t);
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[y], only used to set up F_{p^f}.

namespace {

using FpPoly = std::vector<std::uint32_t>;

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (r != 1) throw Error(ErrorCode::ZeroInverse, "element is not invertible");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly poly_rem(FpPoly a, const FpPoly& m, std::uint32_t p) {
    trim(a);
    std::uint32_t lead_inv = invmod(m.back(), p);
    std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
        trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    return poly_rem(std::move(c), m, p);
}

FpPoly poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
    FpPoly r{1};
    base = poly_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const FpPoly& m, std::uint32_t p) {
    std::size_t f = m.size() - 1;
    FpPoly x{0, 1};
    FpPoly h = x;
    for (std::size_t i = 1; i <= f / 2; ++i) {
        h = poly_powmod(h, p, m, p);
        FpPoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if (poly_gcd(m, diff, p).size() > 1) return false;
    }
    return true;
}

FpPoly unpack(std::uint32_t v, std::uint32_t p, unsigned f) {
    FpPoly a(f);
    for (unsigned i = 0; i < f; ++i) {
        a[i] = v % p;
        v /= p;
    }
    trim(a);
    return a;
}

std::uint32_t pack(const FpPoly& a, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldContext

struct FieldContext::Impl {
    Characteristic mode = Characteristic::Mixed;
    std::uint32_t p = 2;
    unsigned f = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp_table;  // g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_table;  // log_g(x), x in [1, q)
};

FieldContext FieldContext::padic(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31))
        throw Error(ErrorCode::InvalidField, "p must be a prime below 2^31",
                    std::to_string(p));
    auto impl = std::make_shared<Impl>();
    impl->mode = Characteristic::Mixed;
    impl->p = impl->q = p;
    return FieldContext(std::move(impl));
}

FieldContext FieldContext::laurent(std::uint32_t p, unsigned f) {
    if (!is_prime(p) || p >= (1u << 31))
        throw Error(ErrorCode::InvalidField, "p must be a prime below 2^31",
                    std::to_string(p));
    if (f == 0) throw Error(ErrorCode::InvalidField, "residue degree must be at least 1");
    auto impl = std::make_shared<Impl>();
    impl->mode = Characteristic::Equal;
    impl->p = p;
    impl->f = f;
    if (f == 1) {
        impl->q = p;
        return FieldContext(std::move(impl));
    }

    std::uint64_t q = 1;
    for (unsigned i = 0; i < f; ++i) {
        q *= p;
        if (q > (1u << 16))
            throw Error(ErrorCode::InvalidField, "q = p^f must not exceed 2^16 when f > 1");
    }
    impl->q = static_cast<std::uint32_t>(q);

    // Candidates ordered lexicographically by (c_0, c_1, ..., c_{f-1}).
    std::uint64_t candidates = q;
    for (std::uint64_t idx = 0; idx < candidates; ++idx) {
        FpPoly m(f + 1, 0);
        std::uint64_t rest = idx;
        for (unsigned i = f; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        m[f] = 1;
        if (m[0] != 0 && is_irreducible(m, p)) {
            impl->modulus = m;
            break;
        }
    }

    // exp/log tables from the first generator of the multiplicative group
    const std::uint32_t order = impl->q - 1;
    for (std::uint32_t g = 2; g < impl->q; ++g) {
        std::vector<std::uint32_t> powers;
        powers.reserve(order);
        FpPoly gp = unpack(g, p, f);
        FpPoly cur{1};
        do {
            powers.push_back(pack(cur, p));
            cur = poly_mulmod(cur, gp, impl->modulus, p);
        } while (pack(cur, p) != 1 && powers.size() <= order);
        if (powers.size() == order) {
            impl->exp_table = std::move(powers);
            break;
        }
    }
    impl->log_table.assign(impl->q, 0);
    for (std::uint32_t i = 0; i < order; ++i) impl->log_table[impl->exp_table[i]] = i;
    return FieldContext(std::move(impl));
}

Characteristic FieldContext::mode() const noexcept { return impl_->mode; }
std::uint32_t FieldContext::p() const noexcept { return impl_->p; }
unsigned FieldContext::residue_degree() const noexcept { return impl_->f; }
std::uint32_t FieldContext::q() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& FieldContext::modulus() const noexcept { return impl_->modulus; }

std::string FieldContext::describe() const {
    std::ostringstream os;
    if (mode() == Characteristic::Mixed) {
        os << "Q_" << p();
    } else {
        os << "F_" << q() << "((t))";
    }
    return os.str();
}

bool operator==(const FieldContext& a, const FieldContext& b) noexcept {
    return a.impl_ == b.impl_ ||
           (a.mode() == b.mode() && a.p() == b.p() && a.residue_degree() == b.residue_degree());
}

// --- residue field ---------------------------------------------------------

ResidueElement FieldContext::residue(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p());
    if (r < 0) r += p();
    return {static_cast<std::uint32_t>(r)};
}

ResidueElement FieldContext::residue_add(ResidueElement a, ResidueElement b) const {
    const auto P = p();
    if (impl_->f == 1) return {static_cast<std::uint32_t>((std::uint64_t(a.value) + b.value) % P)};
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < impl_->f; ++i) {
        r += ((a.value % P + b.value % P) % P) * scale;
        a.value /= P;
        b.value /= P;
        scale *= P;
    }
    return {r};
}

ResidueElement FieldContext::residue_neg(ResidueElement a) const {
    const auto P = p();
    if (impl_->f == 1) return {a.value == 0 ? 0 : P - a.value};
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < impl_->f; ++i) {
        std::uint32_t d = a.value % P;
        r += (d == 0 ? 0 : P - d) * scale;
        a.value /= P;
        scale *= P;
    }
    return {r};
}

ResidueElement FieldContext::residue_sub(ResidueElement a, ResidueElement b) const {
    return residue_add(a, residue_neg(b));
}

ResidueElement FieldContext::residue_mul(ResidueElement a, ResidueElement b) const {
    if (impl_->f == 1) return {mulmod(a.value, b.value, p())};
    if (a.value == 0 || b.value == 0) return {0};
    const std::uint32_t order = q() - 1;
    return {impl_->exp_table[(impl_->log_table[a.value] + impl_->log_table[b.value]) % order]};
}

ResidueElement FieldContext::residue_inv(ResidueElement a) const {
    if (a.value == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse in the residue field");
    if (impl_->f == 1) return {invmod(a.value, p())};
    const std::uint32_t order = q() - 1;
    return {impl_->exp_table[(order - impl_->log_table[a.value]) % order]};
}

ResidueElement FieldContext::residue_pow(ResidueElement a, std::int64_t e) const {
    if (e < 0) {
        a = residue_inv(a);
        e = -e;
    }
    ResidueElement r{1};
    while (e) {
        if (e & 1) r = residue_mul(r, a);
        a = residue_mul(a, a);
        e >>= 1;
    }
    return r;
}

bool FieldContext::is_nth_power(ResidueElement c, std::int64_t n) const {
    if (c.value == 0) throw Error(ErrorCode::ZeroElement, "power-residue test on zero");
    if (n < 1) throw Error(ErrorCode::BadFieldElement, "exponent must be positive");
    const std::int64_t order = q() - 1;
    const std::int64_t d = std::gcd(n, order);
    return residue_pow(c, order / d) == ResidueElement{1};
}

// --- K ---------------------------------------------------------------------

void FieldContext::check_repr(const KElement& x) const {
    if (x.is_truncated()) return;
    bool ok = mode() == Characteristic::Mixed ? x.is_rational() : x.is_laurent();
    if (!ok)
        throw Error(ErrorCode::BadFieldElement,
                    "element representation does not belong to " + describe());
}

KElement FieldContext::zero() const {
    return mode() == Characteristic::Mixed ? KElement(mpq_class(0)) : KElement(Laurent{});
}

KElement FieldContext::one() const { return from_integer(1); }

KElement FieldContext::from_integer(const mpz_class& n) const {
    if (mode() == Characteristic::Mixed) return KElement(mpq_class(n));
    Laurent l;
    std::uint32_t r = static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p()));
    if (r != 0) l.terms[0] = r;
    return KElement(std::move(l));
}

KElement FieldContext::from_rational(const mpq_class& q) const {
    if (mode() == Characteristic::Mixed) return KElement(q);
    return exact_div(from_integer(q.get_num()), from_integer(q.get_den()));
}

KElement FieldContext::from_residue(ResidueElement c) const {
    if (c.value >= q()) throw Error(ErrorCode::BadFieldElement, "residue out of range");
    if (mode() == Characteristic::Mixed) return KElement(mpq_class(c.value));
    Laurent l;
    if (c.value != 0) l.terms[0] = c.value;
    return KElement(std::move(l));
}

KElement FieldContext::uniformizer() const { return pi_power(1); }

KElement FieldContext::pi_power(std::int64_t k) const {
    if (mode() == Characteristic::Equal) {
        Laurent l;
        l.terms[k] = 1;
        return KElement(std::move(l));
    }
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p(), static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? KElement(mpq_class(pk)) : KElement(mpq_class(mpz_class(1), pk));
}

KElement FieldContext::exact(const KElement& x) const {
    check_repr(x);
    if (!x.is_truncated()) return x;
    const Truncated& t = x.truncated();
    if (mode() == Characteristic::Mixed) {
        mpz_class acc = 0;
        for (std::size_t i = t.digits.size(); i-- > 0;) acc = acc * p() + t.digits[i];
        return mul(KElement(mpq_class(acc)), pi_power(t.base_valuation));
    }
    Laurent l;
    for (std::size_t i = 0; i < t.digits.size(); ++i)
        if (t.digits[i] != 0) l.terms[t.base_valuation + static_cast<std::int64_t>(i)] = t.digits[i];
    return KElement(std::move(l));
}

bool FieldContext::is_zero(const KElement& x) const {
    KElement e = exact(x);
    return e.is_rational() ? e.rational() == 0 : e.laurent().terms.empty();
}

KElement FieldContext::add(const KElement& a, const KElement& b) const {
    KElement x = exact(a), y = exact(b);
    if (x.is_rational()) return KElement(mpq_class(x.rational() + y.rational()));
    Laurent r = x.laurent();
    for (const auto& [e, c] : y.laurent().terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms.emplace(e, c);
        } else {
            it->second = residue_add({it->second}, {c}).value;
        }
    }
    return KElement(std::move(r));
}

KElement FieldContext::neg(const KElement& a) const {
    KElement x = exact(a);
    if (x.is_rational()) return KElement(mpq_class(-x.rational()));
    Laurent r = x.laurent();
    for (auto& [e, c] : r.terms) c = residue_neg({c}).value;
    return KElement(std::move(r));
}

KElement FieldContext::sub(const KElement& a, const KElement& b) const { return add(a, neg(b)); }

KElement FieldContext::mul(const KElement& a, const KElement& b) const {
    KElement x = exact(a), y = exact(b);
    if (x.is_rational()) return KElement(mpq_class(x.rational() * y.rational()));
    Laurent r;
    for (const auto& [e1, c1] : x.laurent().terms) {
        for (const auto& [e2, c2] : y.laurent().terms) {
            auto& slot = r.terms[e1 + e2];
            slot = residue_add({slot}, residue_mul({c1}, {c2})).value;
        }
    }
    return KElement(std::move(r));
}

KElement FieldContext::pow(const KElement& a, std::int64_t e) const {
    KElement base = exact(a);
    if (e < 0) {
        if (is_zero(base)) throw Error(ErrorCode::ZeroInverse, "negative power of zero");
        if (base.is_rational()) {
            base = KElement(mpq_class(1 / base.rational()));
        } else {
            const auto& terms = base.laurent().terms;
            if (terms.size() != 1)
                throw Error(ErrorCode::InexactDivision,
                            "only Laurent monomials are invertible in this representation",
                            to_string(base));
            Laurent inv;
            inv.terms[-terms.begin()->first] = residue_inv({terms.begin()->second}).value;
            base = KElement(std::move(inv));
        }
        e = -e;
    }
    KElement r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

KElement FieldContext::exact_div(const KElement& a, const KElement& b) const {
    KElement x = exact(a), y = exact(b);
    if (is_zero(y)) throw Error(ErrorCode::ZeroInverse, "division by zero");
    if (x.is_rational()) return KElement(mpq_class(x.rational() / y.rational()));
    if (is_zero(x)) return zero();

    // dense long division of t^-va x by t^-vb y, both with nonzero constant term
    const auto& xt = x.laurent().terms;
    const auto& yt = y.laurent().terms;
    const std::int64_t va = xt.begin()->first, vb = yt.begin()->first;
    std::vector<ResidueElement> num(static_cast<std::size_t>(xt.rbegin()->first - va + 1));
    std::vector<ResidueElement> den(static_cast<std::size_t>(yt.rbegin()->first - vb + 1));
    for (const auto& [e, c] : xt) num[static_cast<std::size_t>(e - va)] = {c};
    for (const auto& [e, c] : yt) den[static_cast<std::size_t>(e - vb)] = {c};
    if (num.size() < den.size())
        throw Error(ErrorCode::InexactDivision, "Laurent division is not exact");
    const ResidueElement lead_inv = residue_inv(den.back());
    std::vector<ResidueElement> quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        ResidueElement c = residue_mul(num[k + den.size() - 1], lead_inv);
        quot[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[k + i] = residue_sub(num[k + i], residue_mul(c, den[i]));
    }
    for (const auto& c : num)
        if (c.value != 0) throw Error(ErrorCode::InexactDivision, "Laurent division is not exact");
    Laurent r;
    for (std::size_t k = 0; k < quot.size(); ++k)
        if (quot[k].value != 0) r.terms[va - vb + static_cast<std::int64_t>(k)] = quot[k].value;
    return KElement(std::move(r));
}

KElement FieldContext::shift(const KElement& x, std::int64_t k) const {
    check_repr(x);
    if (x.is_truncated()) {
        Truncated t = x.truncated();
        t.base_valuation += k;
        return KElement(std::move(t));
    }
    if (x.is_rational()) return mul(x, pi_power(k));
    Laurent r;
    for (const auto& [e, c] : x.laurent().terms) r.terms.emplace(e + k, c);
    return KElement(std::move(r));
}

ExtendedRational FieldContext::valuation(const KElement& x) const {
    if (is_zero(x)) return ExtendedRational::infinity();
    return ExtendedRational(static_cast<long>(int_valuation(x)));
}

std::int64_t FieldContext::int_valuation(const KElement& x) const {
    check_repr(x);
    if (x.is_truncated()) {
        const Truncated& t = x.truncated();
        if (t.digits.front() == 0) throw Error(ErrorCode::ZeroElement, "valuation of zero");
        return t.base_valuation;
    }
    if (is_zero(x)) throw Error(ErrorCode::ZeroElement, "valuation of zero");
    if (x.is_laurent()) return x.laurent().terms.begin()->first;
    mpz_class rest;
    mpz_class prime = p();
    std::int64_t vn = static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), x.rational().get_num_mpz_t(), prime.get_mpz_t()));
    std::int64_t vd = static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), x.rational().get_den_mpz_t(), prime.get_mpz_t()));
    return vn - vd;
}

ResidueElement FieldContext::first_digit(const KElement& x) const {
    check_repr(x);
    if (x.is_truncated()) {
        const Truncated& t = x.truncated();
        if (t.digits.front() == 0) throw Error(ErrorCode::ZeroElement, "first digit of zero");
        return {t.digits.front()};
    }
    if (is_zero(x)) throw Error(ErrorCode::ZeroElement, "first digit of zero");
    if (x.is_laurent()) return {x.laurent().terms.begin()->second};
    mpz_class num, den;
    mpz_class prime = p();
    mpz_remove(num.get_mpz_t(), x.rational().get_num_mpz_t(), prime.get_mpz_t());
    mpz_remove(den.get_mpz_t(), x.rational().get_den_mpz_t(), prime.get_mpz_t());
    std::uint32_t n = static_cast<std::uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p()));
    std::uint32_t d = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p()));
    return {mulmod(n, invmod(d, p()), p())};
}

std::string FieldContext::residue_to_string(ResidueElement c) const {
    if (impl_->f == 1) return std::to_string(c.value);
    std::ostringstream os;
    os << '[';
    std::uint32_t v = c.value;
    for (unsigned i = 0; i < impl_->f; ++i) {
        if (i) os << ',';
        os << v % p();
        v /= p();
    }
    os << ']';
    return os.str();
}

std::string FieldContext::to_string(const KElement& x) const {
    check_repr(x);
    if (x.is_rational()) return x.rational().get_str();
    std::ostringstream os;
    auto term = [&](std::uint32_t c, std::int64_t e) {
        std::string coeff = residue_to_string({c});
        if (mode() == Characteristic::Mixed) {
            os << coeff;
            if (e != 0) os << '*' << p() << '^' << e;
            return;
        }
        if (e == 0) {
            os << coeff;
            return;
        }
        if (c != 1) os << coeff << '*';
        os << 't';
        if (e != 1) os << '^' << e;
    };
    if (x.is_laurent()) {
        const auto& terms = x.laurent().terms;
        if (terms.empty()) return "0";
        bool first = true;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            term(it->second, it->first);
        }
        return os.str();
    }
    const Truncated& t = x.truncated();
    bool any = false;
    for (std::size_t i = 0; i < t.digits.size(); ++i) {
        if (t.digits[i] == 0) continue;
        if (any) os << " + ";
        any = true;
        term(t.digits[i], t.base_valuation + static_cast<std::int64_t>(i));
    }
    if (!any) os << '0';
    std::int64_t top = t.base_valuation + t.precision();
    os << " + O(" << (mode() == Characteristic::Mixed ? std::to_string(p()) : std::string("t"))
       << '^' << top << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// ResidueRing

ResidueRing::ResidueRing(FieldContext field, int precision)
    : field_(std::move(field)), precision_(precision) {
    if (precision < 1) throw Error(ErrorCode::BadFieldElement, "residue ring precision must be >= 1");
    mpz_ui_pow_ui(size_.get_mpz_t(), field_.q(), static_cast<unsigned long>(precision));
}

void ResidueRing::check(const ResidueRingElement& x) const {
    if (x.index < 0 || x.index >= size_)
        throw Error(ErrorCode::BadFieldElement, "residue ring element out of range");
}

ResidueRingElement ResidueRing::reduce(const KElement& x) const {
    KElement e = field_.exact(x);
    if (field_.is_zero(e)) return zero();
    if (field_.int_valuation(e) < 0)
        throw Error(ErrorCode::NotIntegral, "element is not in the valuation ring",
                    field_.to_string(e));
    if (e.is_rational()) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), e.rational().get_den_mpz_t(), size_.get_mpz_t());
        mpz_class v = e.rational().get_num() * inv;
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), size_.get_mpz_t());
        return {v, precision_};
    }
    std::vector<std::uint32_t> d(static_cast<std::size_t>(precision_), 0);
    for (const auto& [k, c] : e.laurent().terms)
        if (k < precision_) d[static_cast<std::size_t>(k)] = c;
    return from_digits(d);
}

ResidueRingElement ResidueRing::from_index(const mpz_class& index) const {
    ResidueRingElement x{index, precision_};
    check(x);
    return x;
}

ResidueRingElement ResidueRing::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() > static_cast<std::size_t>(precision_))
        throw Error(ErrorCode::BadFieldElement, "too many digits for residue ring");
    mpz_class idx = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= field_.q()) throw Error(ErrorCode::BadFieldElement, "digit out of range");
        idx = idx * field_.q() + digits[i];
    }
    return {idx, precision_};
}

std::vector<std::uint32_t> ResidueRing::digits(const ResidueRingElement& x) const {
    check(x);
    std::vector<std::uint32_t> d(static_cast<std::size_t>(precision_));
    mpz_class rest = x.index;
    for (auto& digit : d)
        digit = static_cast<std::uint32_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), field_.q()));
    return d;
}

Truncated ResidueRing::expansion(const ResidueRingElement& x) const {
    return KElement(Truncated{0, digits(x)}).truncated();
}

KElement ResidueRing::lift(const ResidueRingElement& x) const {
    check(x);
    if (field_.mode() == Characteristic::Mixed) return KElement(mpq_class(x.index));
    Laurent l;
    auto d = digits(x);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) l.terms[static_cast<std::int64_t>(i)] = d[i];
    return KElement(std::move(l));
}

ResidueRingElement ResidueRing::add(const ResidueRingElement& a, const ResidueRingElement& b) const {
    if (field_.mode() == Characteristic::Mixed) {
        mpz_class v = a.index + b.index;
        if (v >= size_) v -= size_;
        return {v, precision_};
    }
    auto da = digits(a), db = digits(b);
    for (std::size_t i = 0; i < da.size(); ++i) da[i] = field_.residue_add({da[i]}, {db[i]}).value;
    return from_digits(da);
}

ResidueRingElement ResidueRing::neg(const ResidueRingElement& a) const {
    if (a.index == 0) return a;
    if (field_.mode() == Characteristic::Mixed) return {size_ - a.index, precision_};
    auto da = digits(a);
    for (auto& d : da) d = field_.residue_neg({d}).value;
    return from_digits(da);
}

ResidueRingElement ResidueRing::sub(const ResidueRingElement& a, const ResidueRingElement& b) const {
    return add(a, neg(b));
}

ResidueRingElement ResidueRing::mul(const ResidueRingElement& a, const ResidueRingElement& b) const {
    if (field_.mode() == Characteristic::Mixed) {
        mpz_class v = a.index * b.index;
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), size_.get_mpz_t());
        return {v, precision_};
    }
    auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> dc(da.size(), 0);
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (da[i] == 0) continue;
        for (std::size_t j = 0; i + j < dc.size(); ++j) {
            if (db[j] == 0) continue;
            dc[i + j] = field_.residue_add({dc[i + j]}, field_.residue_mul({da[i]}, {db[j]})).value;
        }
    }
    return from_digits(dc);
}

ResidueRingElement ResidueRing::unit_inverse(const ResidueRingElement& x) const {
    check(x);
    if (valuation(x) != 0) throw Error(ErrorCode::ZeroInverse, "element is not a unit");
    if (field_.mode() == Characteristic::Mixed) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), x.index.get_mpz_t(), size_.get_mpz_t());
        return {inv, precision_};
    }
    auto a = digits(x);
    std::vector<std::uint32_t> b(a.size(), 0);
    const ResidueElement a0_inv = field_.residue_inv({a[0]});
    b[0] = a0_inv.value;
    for (std::size_t k = 1; k < a.size(); ++k) {
        ResidueElement acc{0};
        for (std::size_t j = 1; j <= k; ++j)
            acc = field_.residue_add(acc, field_.residue_mul({a[j]}, {b[k - j]}));
        b[k] = field_.residue_neg(field_.residue_mul(a0_inv, acc)).value;
    }
    return from_digits(b);
}

int ResidueRing::valuation(const ResidueRingElement& x) const {
    check(x);
    if (x.index == 0) return precision_;
    int k = 0;
    mpz_class rest = x.index;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), field_.q())) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), field_.q());
        ++k;
    }
    return k;
}

ResidueRingElement ResidueRing::truncate(const ResidueRingElement& x, int k) const {
    check(x);
    if (k < 1 || k > precision_) throw Error(ErrorCode::BadFieldElement, "bad truncation precision");
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), field_.q(), static_cast<unsigned long>(k));
    mpz_class v;
    mpz_fdiv_r(v.get_mpz_t(), x.index.get_mpz_t(), m.get_mpz_t());
    return {v, k};
}

ResidueRingElement ResidueRing::divide_by_pi(const ResidueRingElement& x, int k) const {
    if (k < 0 || k >= precision_ || valuation(x) < k)
        throw Error(ErrorCode::InexactDivision, "element is not divisible by the requested power of pi");
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), field_.q(), static_cast<unsigned long>(k));
    mpz_class v;
    mpz_divexact(v.get_mpz_t(), x.index.get_mpz_t(), m.get_mpz_t());
    return {v, precision_ - k};
}

ResidueRingElement ResidueRing::embed(const ResidueRingElement& x) const {
    return from_index(x.index);
}

std::string ResidueRing::to_string(const ResidueRingElement& x) const {
    if (field_.mode() == Characteristic::Mixed) return x.index.get_str();
    std::ostringstream os;
    os << '(';
    auto d = digits(x);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ' ';
        os << field_.residue_to_string({d[i]});
    }
    os << ')';
    return os.str();
}

}  // namespace localroots
