/*
   Copyright 2026 The qgwa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qgwa/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qgwa/errors.hpp"

namespace qgwa {

Field::Field(int cyclotomic_order) : ctx_(cyclotomic_context(cyclotomic_order)) {}

FieldElement Field::zero() const { return FieldElement(*this); }
FieldElement Field::one() const { return FieldElement(*this, Rational(1)); }
FieldElement Field::rational(const Rational& r) const { return FieldElement(*this, r); }
FieldElement Field::constant(const Cyclotomic& c) const { return FieldElement(*this, c); }

FieldElement Field::q() const {
    return FieldElement(*this, QPoly::monomial(Cyclotomic(ctx_, Rational(1)), 1), QPoly(Cyclotomic(ctx_, Rational(1))));
}

FieldElement Field::zeta() const { return FieldElement(*this, Cyclotomic::zeta_power(ctx_, 1)); }

FieldElement::FieldElement(const Field& f) : field_(f), den_(Cyclotomic(f.context(), Rational(1))) {}

FieldElement::FieldElement(const Field& f, const Rational& r)
    : field_(f), num_(Cyclotomic(f.context(), r)), den_(Cyclotomic(f.context(), Rational(1))) {}

FieldElement::FieldElement(const Field& f, const Cyclotomic& c)
    : field_(f), num_(c), den_(Cyclotomic(f.context(), Rational(1))) {
    if (c.context()->order != f.cyclotomic_order()) throw ModulusMismatch("constant from a different cyclotomic field");
}

FieldElement::FieldElement(const Field& f, QPoly num, QPoly den) : field_(f), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void FieldElement::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    const Cyclotomic one(field_.context(), Rational(1));
    if (num_.is_zero()) {
        den_ = QPoly(one);
        return;
    }
    if (den_.degree() > 0) {
        if (den_.is_monomial() || num_.is_monomial()) {
            std::size_t m = std::min(num_.valuation(), den_.valuation());
            num_ = num_.unshifted(m);
            den_ = den_.unshifted(m);
        } else {
            QPoly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
    }
    if (!den_.lead().is_one()) {
        Cyclotomic inv = den_.lead().inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw ModulusMismatch("operands built under cyclotomic orders " + std::to_string(field_.cyclotomic_order()) +
                              " and " + std::to_string(o.field_.cyclotomic_order()));
}

bool FieldElement::is_one() const noexcept { return den_.degree() == 0 && num_.degree() == 0 && num_[0].is_one(); }

std::optional<Cyclotomic> FieldElement::as_constant() const {
    if (num_.is_zero()) return Cyclotomic(field_.context());
    if (den_.degree() != 0 || num_.degree() != 0) return std::nullopt;
    return num_[0];
}

std::optional<Rational> FieldElement::as_rational() const {
    auto c = as_constant();
    if (!c || !c->is_rational()) return std::nullopt;
    return c->constant_term();
}

std::optional<QMonomial> FieldElement::as_q_monomial() const {
    if (num_.is_zero() || !num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    return QMonomial{num_.lead(), static_cast<long>(num_.degree()) - static_cast<long>(den_.degree())};
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return FieldElement(field_, den_, num_);
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same(o);
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same(o);
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
}

namespace {

std::strong_ordering compare_qpoly(const QPoly& a, const QPoly& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = canonical_compare(a[i], b[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b) {
    if (auto c = compare_qpoly(a.denominator(), b.denominator()); c != 0) return c;
    return compare_qpoly(a.numerator(), b.numerator());
}

FieldElement int_pow(const FieldElement& x, long k) {
    if (k < 0) {
        if (x.is_zero()) throw DivisionByZero("negative power of zero");
        return int_pow(x.inverse(), -k);
    }
    FieldElement result = x.field().one();
    FieldElement base = x;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

std::vector<FieldElement> roots_of_unity(int t, const Field& field) {
    if (t < 1) throw PreconditionError("roots_of_unity needs t >= 1");
    const int m = field.roots_of_unity_order();
    const int count = std::gcd(t, m);
    const int step = m / count;
    const FieldElement gen = field.cyclotomic_order() % 2 == 0 ? field.zeta() : -field.zeta();

    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count % 2 == 0) {
        for (int j = 0; j < count / 2; ++j) {
            FieldElement w = int_pow(gen, static_cast<long>(j) * step);
            out.push_back(w);
            out.push_back(-w);
        }
    } else {
        for (int j = 0; j < count; ++j) out.push_back(int_pow(gen, static_cast<long>(j) * step));
    }
    return out;
}

std::optional<std::vector<FieldElement>> monomial_roots(const FieldElement& c, int g) {
    if (g < 1) throw PreconditionError("root order must be positive");
    const Field& field = c.field();
    if (c.is_zero()) return std::vector<FieldElement>{c};
    if (g == 1) return std::vector<FieldElement>{c};

    auto mono = c.as_q_monomial();
    if (!mono) return std::nullopt;
    if (mono->exponent % g != 0) return std::vector<FieldElement>{};

    // gamma = omega^g * r^g with omega a root of unity of Q(zeta_N), r rational.
    std::optional<FieldElement> base;
    const FieldElement gamma = field.constant(mono->coeff);
    for (const auto& omega : roots_of_unity(field.roots_of_unity_order(), field)) {
        auto rest = (gamma / int_pow(omega, g)).as_rational();
        if (!rest) continue;
        if (auto r = rational_root(*rest, static_cast<unsigned>(g))) {
            base = omega * field.rational(*r);
            break;
        }
    }
    if (!base) {
        if (field.extension_degree() == 1) return std::vector<FieldElement>{};
        return std::nullopt;
    }

    const FieldElement shift = int_pow(field.q(), mono->exponent / g);
    std::vector<FieldElement> out;
    for (const auto& w : roots_of_unity(g, field)) out.push_back(*base * shift * w);
    return out;
}

namespace {

bool qpoly_is_sum(const QPoly& p) {
    int terms = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        ++terms;
        if (k == 0 && p[k].term_count() > 1) ++terms;
    }
    return terms > 1;
}

}  // namespace

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Cyclotomic& c = p[k];
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = to_string(c);
        } else {
            std::string power = k == 1 ? "q" : "q^" + std::to_string(k);
            if (c.is_one())
                term = power;
            else if ((-c).is_one())
                term = "-" + power;
            else if (c.term_count() == 1)
                term = to_string(c) + "*" + power;
            else
                term = "(" + to_string(c) + ")*" + power;
        }
        if (!first && term.front() != '-') os << '+';
        os << term;
        first = false;
    }
    return os.str();
}

bool renders_as_sum(const FieldElement& x) { return x.denominator().degree() == 0 && qpoly_is_sum(x.numerator()); }

std::string to_string(const FieldElement& x) {
    std::string num = to_string(x.numerator());
    if (x.denominator().degree() == 0) return num;
    if (qpoly_is_sum(x.numerator())) num = "(" + num + ")";
    std::string den = to_string(x.denominator());
    if (qpoly_is_sum(x.denominator())) den = "(" + den + ")";
    return num + "/" + den;
}

}  // namespace qgwa
