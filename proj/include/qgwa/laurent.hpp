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

#ifndef QGWA_LAURENT_HPP
#define QGWA_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgwa/field.hpp"

namespace qgwa {

/// Sparse Laurent polynomial in h over K. No zero coefficient is ever stored.
class LaurentPoly {
   public:
    using Terms = std::map<int, FieldElement>;

    explicit LaurentPoly(const Field& f) : field_(f) {}
    static LaurentPoly monomial(const FieldElement& c, int exponent);
    static LaurentPoly constant(const FieldElement& c) { return monomial(c, 0); }
    /// h^exponent with coefficient 1.
    static LaurentPoly h_power(const Field& f, int exponent) { return monomial(f.one(), exponent); }

    const Field& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const noexcept { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    /// Largest exponent; throws ZeroPolynomial on 0.
    int degree() const;
    /// Smallest exponent; throws ZeroPolynomial on 0.
    int valuation() const;
    FieldElement coefficient(int exponent) const;
    const FieldElement& leading_coefficient() const;

    /// Adds c*h^exponent.
    void add_term(const FieldElement& c, int exponent);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const FieldElement& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const FieldElement& s) { return a *= s; }
    friend LaurentPoly operator*(const FieldElement& s, LaurentPoly a) { return a *= s; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Multiplies by h^k.
    LaurentPoly shifted(int k) const;

   private:
    Field field_;
    Terms terms_;

    void check_same(const LaurentPoly& o) const;
};

/// p(c * h^k). For k = 0 this is the constant p(c).
LaurentPoly substitute(const LaurentPoly& p, const FieldElement& c, int k);
/// p(c) as a scalar.
FieldElement evaluate(const LaurentPoly& p, const FieldElement& c);

struct SupportData {
    int degree;
    int valuation;
    int term_count;
    std::vector<int> exponents;  // ascending
};

SupportData support_data(const LaurentPoly& p);

/// gcd of (d - i) over the support; 0 exactly when p is a monomial.
int gcd_exponent_t(const LaurentPoly& p);

/// Monic gcd computed in K[h] after clearing valuations; the result has valuation 0.
LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& r);

/// p / r when r divides p exactly in K[h^{+-1}], otherwise std::nullopt.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& r);

/// Canonical rendering with decreasing exponents, e.g. "h^2 - (1+q)*h + q".
std::string to_string(const LaurentPoly& p);

}  // namespace qgwa

#endif  // QGWA_LAURENT_HPP
