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

#ifndef QGWA_DENSE_POLY_HPP
#define QGWA_DENSE_POLY_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgwa/errors.hpp"
#include "qgwa/rational.hpp"

namespace qgwa {

/*
 * Univariate polynomial with coefficients in a field T, stored low degree first.
 * Trailing zeros are never stored, so the zero polynomial has no coefficients.
 *
 * T must provide the field operations plus the free functions coeff_is_zero(const T&),
 * zero_like(const T&) and one_like(const T&); the latter two build constants in the
 * same field as their argument (needed when T carries a runtime context).
 */
template <class T>
class DensePoly {
   public:
    DensePoly() = default;
    explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit DensePoly(const T& constant) : c_{constant} { trim(); }

    static DensePoly monomial(const T& coeff, std::size_t k) {
        std::vector<T> v(k + 1, zero_like(coeff));
        v[k] = coeff;
        return DensePoly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& operator[](std::size_t i) const { return c_.at(i); }
    const T& lead() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
        return c_.back();
    }

    /// Index of the lowest nonzero coefficient.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!coeff_is_zero(c_[i])) return i;
        throw ZeroPolynomial("valuation of the zero polynomial");
    }

    bool is_monomial() const {
        if (c_.empty()) return false;
        return valuation() + 1 == c_.size();
    }

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.front()));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) { return *this += -o; }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(r));
    }

    friend DensePoly operator*(const DensePoly& a, const T& s) {
        if (coeff_is_zero(s)) return {};
        DensePoly r = a;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    /// Multiplies by X^k.
    DensePoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<T> v(k, zero_like(c_.front()));
        v.insert(v.end(), c_.begin(), c_.end());
        return DensePoly(std::move(v));
    }

    /// Divides by X^k; the k lowest coefficients must vanish.
    DensePoly unshifted(std::size_t k) const {
        if (k >= c_.size()) return {};
        return DensePoly(std::vector<T>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    DensePoly monic() const {
        if (is_zero()) return {};
        T inv = one_like(lead()) / lead();
        return *this * inv;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

   private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class T>
std::pair<DensePoly<T>, DensePoly<T>> divmod(const DensePoly<T>& a, const DensePoly<T>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {DensePoly<T>{}, a};

    std::vector<T> rem = a.coeffs();
    const int db = b.degree();
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), zero_like(b.lead()));
    const T inv_lead = one_like(b.lead()) / b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        const T& top = rem[static_cast<std::size_t>(k + db)];
        if (coeff_is_zero(top)) continue;
        T f = top * inv_lead;
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k + j);
            rem[idx] = rem[idx] - f * b[static_cast<std::size_t>(j)];
        }
    }
    rem.erase(rem.begin() + db, rem.end());
    return {DensePoly<T>(std::move(quot)), DensePoly<T>(std::move(rem))};
}

/// Monic gcd. gcd(0, 0) is 0.
template <class T>
DensePoly<T> gcd(DensePoly<T> a, DensePoly<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s) with s*a = g mod b, g monic.
template <class T>
std::pair<DensePoly<T>, DensePoly<T>> half_xgcd(DensePoly<T> a, DensePoly<T> b) {
    DensePoly<T> s0(one_like(a.lead()));
    DensePoly<T> s1;
    while (!b.is_zero()) {
        auto [quot, rem] = divmod(a, b);
        DensePoly<T> s2 = s0 - quot * s1;
        a = std::move(b);
        b = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    T inv = one_like(a.lead()) / a.lead();
    return {a * inv, s0 * inv};
}

}  // namespace qgwa

#endif  // QGWA_DENSE_POLY_HPP
