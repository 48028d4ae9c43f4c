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

#include "qgwa/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qgwa {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

DensePoly<Rational> cyclotomic_polynomial(int order) {
    if (order < 1) throw PreconditionError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, DensePoly<Rational>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(order); it != cache.end()) return it->second;
    }

    // x^N - 1
    DensePoly<Rational> p = DensePoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(order)) -
                            DensePoly<Rational>(Rational(1));
    for (int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        auto [quot, rem] = divmod(p, cyclotomic_polynomial(d));
        if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
        p = std::move(quot);
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(order, p);
    return p;
}

std::shared_ptr<const CyclotomicContext> cyclotomic_context(int order) {
    if (order < 1) throw PreconditionError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[order];
    if (!slot) {
        auto phi = cyclotomic_polynomial(order);
        slot = std::make_shared<const CyclotomicContext>(CyclotomicContext{order, phi.degree(), phi});
    }
    return slot;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx)
    : ctx_(std::move(ctx)), c_(static_cast<std::size_t>(ctx_->degree)) {}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const Rational& r) : Cyclotomic(std::move(ctx)) {
    c_[0] = r;
    c_[0].canonicalize();  // mpq_class(n, d) is not reduced on construction
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicContext> ctx, const DensePoly<Rational>& residue)
    : Cyclotomic(std::move(ctx)) {
    auto rem = residue.degree() >= ctx_->degree ? divmod(residue, ctx_->modulus).second : residue;
    for (std::size_t i = 0; i < rem.size(); ++i) {
        c_[i] = rem[i];
        c_[i].canonicalize();
    }
}

Cyclotomic Cyclotomic::zeta_power(std::shared_ptr<const CyclotomicContext> ctx, long k) {
    const long n = ctx->order;
    long r = ((k % n) + n) % n;
    return Cyclotomic(ctx, DensePoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(r)));
}

bool Cyclotomic::is_zero() const noexcept {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const noexcept { return is_rational() && c_[0] == 1; }

int Cyclotomic::term_count() const noexcept {
    int n = 0;
    for (const auto& c : c_)
        if (sgn(c) != 0) ++n;
    return n;
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (ctx_ != o.ctx_ && ctx_->order != o.ctx_->order)
        throw ModulusMismatch("operands live in Q(zeta_" + std::to_string(ctx_->order) + ") and Q(zeta_" +
                              std::to_string(o.ctx_->order) + ")");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    const std::size_t deg = a.c_.size();
    Cyclotomic r(a.ctx_);
    if (deg == 1) {
        r.c_[0] = a.c_[0] * b.c_[0];
        return r;
    }
    std::vector<Rational> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    const auto& phi = a.ctx_->modulus;
    for (std::size_t i = prod.size(); i-- > deg;) {
        if (sgn(prod[i]) == 0) continue;
        Rational f = prod[i];
        for (std::size_t j = 0; j <= deg; ++j) prod[i - deg + j] -= f * phi[j];
    }
    for (std::size_t i = 0; i < deg; ++i) r.c_[i] = prod[i];
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(ctx_->order) + ")");
    if (c_.size() == 1) return Cyclotomic(ctx_, Rational(1) / c_[0]);
    auto [g, s] = half_xgcd(DensePoly<Rational>(c_), ctx_->modulus);
    if (g.degree() != 0) throw std::logic_error("cyclotomic modulus is not irreducible");
    return Cyclotomic(ctx_, s);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return a * b.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.ctx_->order == b.ctx_->order && a.c_ == b.c_; }

std::strong_ordering canonical_compare(const Cyclotomic& a, const Cyclotomic& b) {
    for (std::size_t i = 0; i < a.c_.size() && i < b.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.c_.size() <=> b.c_.size();
}

std::string to_string(const Cyclotomic& c) {
    std::ostringstream os;
    bool first = true;
    const auto& v = c.coeffs();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0) continue;
        std::string term;
        if (k == 0) {
            term = v[k].get_str();
        } else {
            std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
            if (v[k] == 1)
                term = power;
            else if (v[k] == -1)
                term = "-" + power;
            else
                term = v[k].get_str() + "*" + power;
        }
        if (!first && term.front() != '-') os << '+';
        os << term;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace qgwa
