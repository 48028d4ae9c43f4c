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

#ifndef QGWA_GWA_HPP
#define QGWA_GWA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "qgwa/laurent.hpp"

namespace qgwa {

/*
 * The quantum generalized Weyl algebra A(a(h), q): generated by x, y, h^{+-1} with
 *   x h = q h x,  y h = q^{-1} h y,  x y = a(q h),  y x = a(h).
 * The commutation scalar is an arbitrary element of K that is not a root of unity;
 * usually the indeterminate q itself, but e.g. q^2 for the so_5 quotients.
 *
 * Algebra is a cheap shared handle. a(h) must be neither zero nor a monomial: a
 * monomial a(h) makes A a quantum torus, which is excluded here.
 */
class Algebra {
   public:
    Algebra(LaurentPoly a, FieldElement q);

    const LaurentPoly& a() const noexcept { return data_->a; }
    const FieldElement& q() const noexcept { return data_->q; }
    const Field& field() const noexcept { return data_->a.field(); }
    int degree() const noexcept { return data_->degree; }
    int valuation() const noexcept { return data_->valuation; }
    int t() const noexcept { return data_->t; }
    const std::vector<int>& support() const noexcept { return data_->support; }

    /// a(q^k h), memoized.
    const LaurentPoly& shifted_a(int k) const;

    friend bool operator==(const Algebra& l, const Algebra& r) {
        return l.data_ == r.data_ || (l.data_->q == r.data_->q && l.data_->a == r.data_->a);
    }

   private:
    struct Data {
        Data(LaurentPoly a, FieldElement q);
        LaurentPoly a;
        FieldElement q;
        int degree;
        int valuation;
        int t;
        std::vector<int> support;
        mutable std::mutex mu;
        mutable std::map<int, LaurentPoly> shifts;
    };
    std::shared_ptr<const Data> data_;
};

/*
 * Element of A in graded normal form:
 *   sum_{n >= 0} p_n(h) x^n + sum_{n < 0} p_n(h) y^{-n},
 * polynomials to the left of generator powers. Zero components are never stored.
 */
class GWAElement {
   public:
    using Components = std::map<int, LaurentPoly>;

    explicit GWAElement(Algebra alg) : alg_(std::move(alg)) {}
    static GWAElement homogeneous(const Algebra& alg, int degree, const LaurentPoly& p);
    static GWAElement scalar(const Algebra& alg, const FieldElement& c);
    static GWAElement one(const Algebra& alg) { return scalar(alg, alg.field().one()); }
    static GWAElement h(const Algebra& alg, int exponent = 1);
    static GWAElement x(const Algebra& alg) { return homogeneous(alg, 1, LaurentPoly::h_power(alg.field(), 0)); }
    static GWAElement y(const Algebra& alg) { return homogeneous(alg, -1, LaurentPoly::h_power(alg.field(), 0)); }

    const Algebra& algebra() const noexcept { return alg_; }
    const Components& components() const noexcept { return comps_; }
    LaurentPoly component(int degree) const;

    bool is_zero() const noexcept { return comps_.empty(); }
    bool is_homogeneous() const noexcept { return comps_.size() == 1; }

    void add(int degree, const LaurentPoly& p);

    GWAElement operator-() const;
    GWAElement& operator+=(const GWAElement& o);
    GWAElement& operator-=(const GWAElement& o);
    GWAElement& operator*=(const FieldElement& s);

    friend GWAElement operator+(GWAElement u, const GWAElement& v) { return u += v; }
    friend GWAElement operator-(GWAElement u, const GWAElement& v) { return u -= v; }
    friend GWAElement operator*(const GWAElement& u, const GWAElement& v);
    friend GWAElement operator*(GWAElement u, const FieldElement& s) { return u *= s; }
    friend GWAElement operator*(const FieldElement& s, GWAElement u) { return u *= s; }
    friend bool operator==(const GWAElement& u, const GWAElement& v) {
        return u.alg_ == v.alg_ && u.comps_ == v.comps_;
    }

   private:
    Algebra alg_;
    Components comps_;

    void check_same(const GWAElement& o) const;
};

GWAElement gwa_add(const GWAElement& u, const GWAElement& v);
GWAElement gwa_mul(const GWAElement& u, const GWAElement& v);
GWAElement power(const GWAElement& u, int k);

/// Canonical rendering, e.g. "(q*h + h^-1)*x^2 + 3*y".
std::string to_string(const GWAElement& u);

// ---------------------------------------------------------------------------
// Free-algebra rewriting oracle.

enum class Letter { X, Y, H, HInv };

struct Word {
    FieldElement coeff;
    std::vector<Letter> letters;
};

/*
 * Reduces a linear combination of words to normal form using only the oriented
 * rules  h h^-1 -> 1, h^-1 h -> 1, x h -> q h x, x h^-1 -> q^-1 h^-1 x,
 * y h -> q^-1 h y, y h^-1 -> q h^-1 y, x y -> a(qh), y x -> a(h).
 * Independent of gwa_mul; used to check it.
 */
GWAElement free_reduce(const Algebra& alg, std::span<const Word> words);
GWAElement free_reduce(const Algebra& alg, const Word& word);

/// The element spelled by a word, computed through gwa_mul.
GWAElement word_element(const Algebra& alg, const Word& word);

// ---------------------------------------------------------------------------

/// Image of h under a would-be endomorphism: alpha * h^exponent.
struct HImage {
    FieldElement alpha;
    int exponent;
};

/// Evaluates the algebra map h -> alpha h^i, x -> x_image, y -> y_image on u.
GWAElement apply_images(const HImage& h_image, const GWAElement& x_image, const GWAElement& y_image,
                        const GWAElement& u);

}  // namespace qgwa

#endif  // QGWA_GWA_HPP
