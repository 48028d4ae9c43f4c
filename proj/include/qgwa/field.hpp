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

#ifndef QGWA_FIELD_HPP
#define QGWA_FIELD_HPP

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgwa/cyclotomic.hpp"
#include "qgwa/dense_poly.hpp"
#include "qgwa/rational.hpp"

namespace qgwa {

class FieldElement;

/// Polynomials in the indeterminate q over Q(zeta_N).
using QPoly = DensePoly<Cyclotomic>;

/*
 * Handle to the coefficient field K = Q(zeta_N)(q). The indeterminate q is
 * transcendental over Q(zeta_N), so it is never a root of unity. Handles with
 * the same order compare equal and share one interned context.
 */
class Field {
   public:
    explicit Field(int cyclotomic_order = 1);

    int cyclotomic_order() const noexcept { return ctx_->order; }
    int extension_degree() const noexcept { return ctx_->degree; }
    /// Order of the root-of-unity group of Q(zeta_N): N for even N, 2N for odd N.
    int roots_of_unity_order() const noexcept { return ctx_->order % 2 == 0 ? ctx_->order : 2 * ctx_->order; }
    const std::shared_ptr<const CyclotomicContext>& context() const noexcept { return ctx_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement q() const;
    FieldElement zeta() const;
    FieldElement rational(const Rational& r) const;
    FieldElement constant(const Cyclotomic& c) const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.ctx_->order == b.ctx_->order; }

   private:
    std::shared_ptr<const CyclotomicContext> ctx_;
};

/// c * q^exponent with c in Q(zeta_N).
struct QMonomial {
    Cyclotomic coeff;
    long exponent;
};

/*
 * Exact element of Q(zeta_N)(q) kept as a reduced fraction num/den of
 * polynomials in q, with den monic. The representation is unique, so equality
 * is structural.
 */
class FieldElement {
   public:
    explicit FieldElement(const Field& f);
    FieldElement(const Field& f, const Rational& r);
    FieldElement(const Field& f, const Cyclotomic& c);
    FieldElement(const Field& f, QPoly num, QPoly den);

    const Field& field() const noexcept { return field_; }
    const QPoly& numerator() const noexcept { return num_; }
    const QPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept;
    std::optional<Rational> as_rational() const;
    std::optional<Cyclotomic> as_constant() const;
    /// Some c*q^k when num and den are both monomials in q.
    std::optional<QMonomial> as_q_monomial() const;

    FieldElement inverse() const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

   private:
    Field field_;
    QPoly num_;
    QPoly den_;

    void check_same(const FieldElement& o) const;
    void normalize();
};

inline bool coeff_is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement zero_like(const FieldElement& x) { return x.field().zero(); }
inline FieldElement one_like(const FieldElement& x) { return x.field().one(); }

/// Deterministic total order used for sorting outputs; unrelated to any field order.
std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b);
inline bool canonical_less(const FieldElement& a, const FieldElement& b) { return canonical_compare(a, b) < 0; }

/// x^k for any integer k; throws DivisionByZero for 0^k with k < 0.
FieldElement int_pow(const FieldElement& x, long k);

/// Every w in K with w^t = 1, listed as 1, -1, w1, -w1, ... when -1 is among them.
std::vector<FieldElement> roots_of_unity(int t, const Field& field);

/**
 * All solutions of w^g = c in K when c = gamma * q^sigma with gamma in Q(zeta_N).
 * Returns std::nullopt when c is not of that shape, or when gamma is not a root of
 * unity times a rational and the field is larger than Q (the search is then not
 * exhaustive). An empty list means no solution exists.
 */
std::optional<std::vector<FieldElement>> monomial_roots(const FieldElement& c, int g);

/// Canonical text form, re-readable by the expression parser, e.g. "(1+q)/(1+q^2)".
std::string to_string(const QPoly& p);
std::string to_string(const FieldElement& x);
/// True when to_string(x) is a sum and must be parenthesized inside a product.
bool renders_as_sum(const FieldElement& x);

}  // namespace qgwa

#endif  // QGWA_FIELD_HPP
