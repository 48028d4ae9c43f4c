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

#include "qgwa/laurent.hpp"

#include <numeric>
#include <sstream>

#include "qgwa/errors.hpp"

namespace qgwa {

LaurentPoly LaurentPoly::monomial(const FieldElement& c, int exponent) {
    LaurentPoly p(c.field());
    p.add_term(c, exponent);
    return p;
}

int LaurentPoly::degree() const {
    if (terms_.empty()) throw ZeroPolynomial("degree of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::valuation() const {
    if (terms_.empty()) throw ZeroPolynomial("valuation of the zero Laurent polynomial");
    return terms_.begin()->first;
}

FieldElement LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? field_.zero() : it->second;
}

const FieldElement& LaurentPoly::leading_coefficient() const {
    if (terms_.empty()) throw ZeroPolynomial("leading coefficient of the zero Laurent polynomial");
    return terms_.rbegin()->second;
}

void LaurentPoly::add_term(const FieldElement& c, int exponent) {
    if (!(c.field() == field_)) throw ModulusMismatch("Laurent term from a different coefficient field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!(field_ == o.field_)) throw ModulusMismatch("Laurent polynomials over different coefficient fields");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(c, k);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(-c, k);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const FieldElement& s) {
    if (!(s.field() == field_)) throw ModulusMismatch("scalar from a different coefficient field");
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly r(a.field_);
    for (const auto& [i, ci] : a.terms_)
        for (const auto& [j, cj] : b.terms_) r.add_term(ci * cj, i + j);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(field_);
    for (const auto& [i, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), i + k, c);
    return r;
}

LaurentPoly substitute(const LaurentPoly& p, const FieldElement& c, int k) {
    if (c.is_zero()) throw ZeroSubstitution("substitution h -> 0*h^k is not defined on Laurent polynomials");
    LaurentPoly r(p.field());
    for (const auto& [i, a] : p.terms()) r.add_term(a * int_pow(c, i), i * k);
    return r;
}

FieldElement evaluate(const LaurentPoly& p, const FieldElement& c) { return substitute(p, c, 0).coefficient(0); }

SupportData support_data(const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("support of the zero Laurent polynomial");
    SupportData s{p.degree(), p.valuation(), static_cast<int>(p.term_count()), {}};
    for (const auto& [i, c] : p.terms()) s.exponents.push_back(i);
    return s;
}

int gcd_exponent_t(const LaurentPoly& p) {
    const int d = p.degree();
    int t = 0;
    for (const auto& [i, c] : p.terms()) t = std::gcd(t, d - i);
    return t;
}

namespace {

using HPoly = DensePoly<FieldElement>;

HPoly to_dense(const LaurentPoly& p) {
    const int e = p.valuation();
    std::vector<FieldElement> v(static_cast<std::size_t>(p.degree() - e + 1), p.field().zero());
    for (const auto& [i, c] : p.terms()) v[static_cast<std::size_t>(i - e)] = c;
    return HPoly(std::move(v));
}

LaurentPoly from_dense(const HPoly& p, const Field& f, int shift) {
    LaurentPoly r(f);
    for (std::size_t i = 0; i < p.size(); ++i) r.add_term(p[i], static_cast<int>(i) + shift);
    return r;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& r) {
    if (p.is_zero() || r.is_zero()) throw ZeroPolynomial("poly_gcd needs nonzero inputs");
    return from_dense(gcd(to_dense(p), to_dense(r)), p.field(), 0);
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& r) {
    if (r.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (p.is_zero()) return LaurentPoly(p.field());
    auto [quot, rem] = divmod(to_dense(p), to_dense(r));
    if (!rem.is_zero()) return std::nullopt;
    return from_dense(quot, p.field(), p.valuation() - r.valuation());
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int k = it->first;
        FieldElement c = it->second;
        bool negative = to_string(c).front() == '-';
        if (negative) c = -c;

        std::string power = k == 1 ? "h" : "h^" + std::to_string(k);
        std::string term;
        if (k == 0)
            term = renders_as_sum(c) ? "(" + to_string(c) + ")" : to_string(c);
        else if (c.is_one())
            term = power;
        else if (renders_as_sum(c))
            term = "(" + to_string(c) + ")*" + power;
        else
            term = to_string(c) + "*" + power;

        if (first)
            os << (negative ? "-" : "") << term;
        else
            os << (negative ? " - " : " + ") << term;
        first = false;
    }
    return os.str();
}

}  // namespace qgwa
