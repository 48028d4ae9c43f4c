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

#include "qgwa/gwa.hpp"

#include <sstream>

#include "qgwa/errors.hpp"

namespace qgwa {

Algebra::Algebra(LaurentPoly a, FieldElement q) {
    if (a.is_zero()) throw InvalidAlgebra("a(h) = 0 does not define a generalized Weyl algebra");
    if (a.is_monomial())
        throw InvalidAlgebra("a(h) = " + to_string(a) +
                             " is a unit of K[h^{+-1}]; A(a(h),q) is then a quantum torus, which is not handled here");
    if (!(q.field() == a.field())) throw ModulusMismatch("commutation scalar and a(h) live in different fields");
    if (q.is_zero()) throw InvalidAlgebra("commutation scalar must be nonzero");
    // A non-constant element of K is transcendental over Q(zeta_N); a constant one is a
    // root of unity iff its order divides that of the root-of-unity group.
    if (q.as_constant() && int_pow(q, q.field().roots_of_unity_order()).is_one())
        throw InvalidAlgebra("commutation scalar " + to_string(q) + " is a root of unity");
    data_ = std::make_shared<Data>(std::move(a), std::move(q));
}

Algebra::Data::Data(LaurentPoly a_, FieldElement q_) : a(std::move(a_)), q(std::move(q_)) {
    auto sd = support_data(a);
    degree = sd.degree;
    valuation = sd.valuation;
    support = std::move(sd.exponents);
    t = gcd_exponent_t(a);
}

const LaurentPoly& Algebra::shifted_a(int k) const {
    std::lock_guard<std::mutex> lock(data_->mu);
    auto it = data_->shifts.find(k);
    if (it == data_->shifts.end())
        it = data_->shifts.emplace(k, substitute(data_->a, int_pow(data_->q, k), 1)).first;
    return it->second;
}

GWAElement GWAElement::homogeneous(const Algebra& alg, int degree, const LaurentPoly& p) {
    GWAElement u(alg);
    u.add(degree, p);
    return u;
}

GWAElement GWAElement::scalar(const Algebra& alg, const FieldElement& c) {
    return homogeneous(alg, 0, LaurentPoly::constant(c));
}

GWAElement GWAElement::h(const Algebra& alg, int exponent) {
    return homogeneous(alg, 0, LaurentPoly::h_power(alg.field(), exponent));
}

LaurentPoly GWAElement::component(int degree) const {
    auto it = comps_.find(degree);
    return it == comps_.end() ? LaurentPoly(alg_.field()) : it->second;
}

void GWAElement::add(int degree, const LaurentPoly& p) {
    if (!(p.field() == alg_.field())) throw ModulusMismatch("component from a different coefficient field");
    if (p.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(degree, p);
    if (inserted) return;
    it->second += p;
    if (it->second.is_zero()) comps_.erase(it);
}

void GWAElement::check_same(const GWAElement& o) const {
    if (!(alg_ == o.alg_)) throw SpecMismatch("elements of different algebras");
}

GWAElement GWAElement::operator-() const {
    GWAElement r = *this;
    for (auto& [n, p] : r.comps_) p = -p;
    return r;
}

GWAElement& GWAElement::operator+=(const GWAElement& o) {
    check_same(o);
    for (const auto& [n, p] : o.comps_) add(n, p);
    return *this;
}

GWAElement& GWAElement::operator-=(const GWAElement& o) {
    check_same(o);
    for (const auto& [n, p] : o.comps_) add(n, -p);
    return *this;
}

GWAElement& GWAElement::operator*=(const FieldElement& s) {
    if (s.is_zero()) {
        comps_.clear();
        return *this;
    }
    for (auto& [n, p] : comps_) p *= s;
    return *this;
}

namespace {

// z^m z^n -> (contraction factor) z^{m+n}, where z^k means x^k or y^{-k}.
LaurentPoly contraction(const Algebra& alg, int m, int n) {
    LaurentPoly f = LaurentPoly::h_power(alg.field(), 0);
    if (m > 0 && n < 0) {
        const int k = std::min(m, -n);
        for (int i = 0; i < k; ++i) f = f * alg.shifted_a(m - i);
    } else if (m < 0 && n > 0) {
        const int k = std::min(-m, n);
        for (int i = 0; i < k; ++i) f = f * alg.shifted_a(m + 1 + i);
    }
    return f;
}

}  // namespace

GWAElement operator*(const GWAElement& u, const GWAElement& v) {
    u.check_same(v);
    const Algebra& alg = u.alg_;
    GWAElement r(alg);
    for (const auto& [m, p] : u.comps_) {
        // z^m r(h) = r(q^m h) z^m
        const FieldElement qm = int_pow(alg.q(), m);
        for (const auto& [n, s] : v.comps_) {
            LaurentPoly coeff = p * substitute(s, qm, 1);
            if (m != 0 && n != 0 && (m > 0) != (n > 0)) coeff = coeff * contraction(alg, m, n);
            r.add(m + n, coeff);
        }
    }
    return r;
}

GWAElement gwa_add(const GWAElement& u, const GWAElement& v) { return u + v; }
GWAElement gwa_mul(const GWAElement& u, const GWAElement& v) { return u * v; }

GWAElement power(const GWAElement& u, int k) {
    if (k < 0) throw PreconditionError("negative powers are not defined in A");
    GWAElement r = GWAElement::one(u.algebra());
    for (int i = 0; i < k; ++i) r = r * u;
    return r;
}

std::string to_string(const GWAElement& u) {
    if (u.is_zero()) return "0";
    const auto& comps = u.components();
    if (comps.size() == 1 && comps.begin()->first == 0) return to_string(comps.begin()->second);

    std::ostringstream os;
    bool first = true;
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
        const int n = it->first;
        const LaurentPoly& p = it->second;
        std::string gen;
        if (n > 0) gen = n == 1 ? "x" : "x^" + std::to_string(n);
        if (n < 0) gen = n == -1 ? "y" : "y^" + std::to_string(-n);

        bool negative = false;
        std::string term;
        if (p.is_monomial()) {
            std::string mono = to_string(p);
            if (mono.front() == '-') {
                negative = true;
                mono = to_string(-p);
            }
            if (gen.empty())
                term = mono;
            else if (mono == "1")
                term = gen;
            else
                term = mono + "*" + gen;
        } else {
            term = "(" + to_string(p) + ")";
            if (!gen.empty()) term += "*" + gen;
        }

        if (first)
            os << (negative ? "-" : "") << term;
        else
            os << (negative ? " - " : " + ") << term;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

using WordMap = std::map<std::vector<Letter>, FieldElement>;

void accumulate(WordMap& m, std::vector<Letter> letters, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(std::move(letters), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

bool is_h_letter(Letter l) { return l == Letter::H || l == Letter::HInv; }

// Rewrites the leftmost redex of `w`; returns false if `w` is irreducible.
bool rewrite_once(const Algebra& alg, const std::vector<Letter>& w, const FieldElement& c, WordMap& out) {
    const FieldElement& q = alg.q();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Letter l = w[i], r = w[i + 1];
        auto splice = [&](std::vector<Letter> middle, const FieldElement& factor) {
            std::vector<Letter> nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            nw.insert(nw.end(), middle.begin(), middle.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
            accumulate(out, std::move(nw), c * factor);
        };
        if ((l == Letter::H && r == Letter::HInv) || (l == Letter::HInv && r == Letter::H)) {
            splice({}, alg.field().one());
            return true;
        }
        if ((l == Letter::X || l == Letter::Y) && is_h_letter(r)) {
            const bool up = (l == Letter::X) == (r == Letter::H);
            splice({r, l}, up ? q : q.inverse());
            return true;
        }
        if ((l == Letter::X && r == Letter::Y) || (l == Letter::Y && r == Letter::X)) {
            const LaurentPoly& poly = l == Letter::X ? alg.shifted_a(1) : alg.a();
            for (const auto& [k, coeff] : poly.terms())
                splice(std::vector<Letter>(static_cast<std::size_t>(std::abs(k)), k >= 0 ? Letter::H : Letter::HInv),
                       coeff);
            return true;
        }
    }
    return false;
}

}  // namespace

GWAElement free_reduce(const Algebra& alg, std::span<const Word> words) {
    WordMap frontier;
    for (const auto& w : words) accumulate(frontier, w.letters, w.coeff);

    GWAElement result(alg);
    while (!frontier.empty()) {
        WordMap next;
        for (const auto& [w, c] : frontier) {
            if (rewrite_once(alg, w, c, next)) continue;
            // Irreducible words read h^k z^n.
            int hexp = 0, deg = 0;
            for (Letter l : w) {
                switch (l) {
                    case Letter::H: ++hexp; break;
                    case Letter::HInv: --hexp; break;
                    case Letter::X: ++deg; break;
                    case Letter::Y: --deg; break;
                }
            }
            result.add(deg, LaurentPoly::monomial(c, hexp));
        }
        frontier = std::move(next);
    }
    return result;
}

GWAElement free_reduce(const Algebra& alg, const Word& word) { return free_reduce(alg, std::span<const Word>(&word, 1)); }

GWAElement word_element(const Algebra& alg, const Word& word) {
    GWAElement r = GWAElement::scalar(alg, word.coeff);
    for (Letter l : word.letters) {
        switch (l) {
            case Letter::X: r = r * GWAElement::x(alg); break;
            case Letter::Y: r = r * GWAElement::y(alg); break;
            case Letter::H: r = r * GWAElement::h(alg, 1); break;
            case Letter::HInv: r = r * GWAElement::h(alg, -1); break;
        }
    }
    return r;
}

GWAElement apply_images(const HImage& h_image, const GWAElement& x_image, const GWAElement& y_image,
                        const GWAElement& u) {
    if (h_image.alpha.is_zero()) throw PreconditionError("image of h must be a unit");
    if (!(x_image.algebra() == u.algebra()) || !(y_image.algebra() == u.algebra()))
        throw SpecMismatch("images and argument belong to different algebras");
    const Algebra& alg = u.algebra();
    GWAElement r(alg);
    for (const auto& [n, p] : u.components()) {
        GWAElement coeff = GWAElement::homogeneous(alg, 0, substitute(p, h_image.alpha, h_image.exponent));
        r += coeff * power(n >= 0 ? x_image : y_image, std::abs(n));
    }
    return r;
}

}  // namespace qgwa
