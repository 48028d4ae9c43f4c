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

#ifndef QGWA_CYCLOTOMIC_HPP
#define QGWA_CYCLOTOMIC_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "qgwa/dense_poly.hpp"
#include "qgwa/rational.hpp"

namespace qgwa {

/// N-th cyclotomic polynomial over Q, as x^N - 1 divided by every Phi_d with d | N, d < N.
DensePoly<Rational> cyclotomic_polynomial(int order);

int euler_phi(int n);

struct CyclotomicContext {
    int order;                       // N
    int degree;                      // phi(N)
    DensePoly<Rational> modulus;     // Phi_N, monic
};

/// Shared, interned context for Q(zeta_N); equal orders give the same pointer.
std::shared_ptr<const CyclotomicContext> cyclotomic_context(int order);

/// Element of Q(zeta_N), stored as its reduced residue modulo Phi_N(z).
class Cyclotomic {
   public:
    explicit Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx);
    Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const Rational& r);
    Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const DensePoly<Rational>& residue);

    /// zeta_N^k for any integer k.
    static Cyclotomic zeta_power(std::shared_ptr<const CyclotomicContext> ctx, long k);

    const std::shared_ptr<const CyclotomicContext>& context() const noexcept { return ctx_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Value as a rational when the element lies in Q.
    bool is_rational() const noexcept;
    const Rational& constant_term() const noexcept { return c_.front(); }
    /// Number of nonzero coordinates in the power basis.
    int term_count() const noexcept;

    Cyclotomic operator-() const;
    Cyclotomic inverse() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Deterministic total order: lexicographic on power-basis coordinates.
    friend std::strong_ordering canonical_compare(const Cyclotomic& a, const Cyclotomic& b);

   private:
    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<Rational> c_;  // exactly degree entries

    void check_same(const Cyclotomic& o) const;
};

inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic(c.context()); }
inline Cyclotomic one_like(const Cyclotomic& c) { return Cyclotomic(c.context(), Rational(1)); }

/// Renders as a sum over the power basis, e.g. "1+z", "-z^2", "1/2".
std::string to_string(const Cyclotomic& c);

}  // namespace qgwa

#endif  // QGWA_CYCLOTOMIC_HPP
