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

// Random generators shared by the test binaries.

#ifndef QGWA_TESTS_SUPPORT_HPP
#define QGWA_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qgwa/endo.hpp"
#include "qgwa/gwa.hpp"
#include "qgwa/laurent.hpp"

namespace qgwa::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }

    Rational rational(int bound = 9) {
        Rational r(range(-bound, bound), range(1, bound));
        r.canonicalize();
        return r;
    }
    Rational nonzero_rational(int bound = 9) {
        Rational r;
        do r = rational(bound);
        while (r == 0);
        return r;
    }

    Cyclotomic cyclotomic(const Field& f) {
        Cyclotomic out(f.zeta().as_constant()->context());
        for (int i = 0; i < f.extension_degree(); ++i)
            out = out + Cyclotomic::zeta_power(out.context(), i) * Cyclotomic(out.context(), rational(4));
        return out;
    }

    /// Small polynomial in q with cyclotomic coefficients, degree <= deg.
    FieldElement qpoly(const Field& f, int deg) {
        FieldElement out = f.zero();
        FieldElement qk = f.one();
        for (int i = 0; i <= deg; ++i, qk *= f.q()) out += f.constant(cyclotomic(f)) * qk;
        return out;
    }

    FieldElement scalar(const Field& f) {
        FieldElement num = qpoly(f, range(0, 2));
        FieldElement den = qpoly(f, range(0, 2));
        while (den.is_zero()) den = qpoly(f, range(0, 2));
        return num / den;
    }
    FieldElement nonzero_scalar(const Field& f) {
        FieldElement x = scalar(f);
        while (x.is_zero()) x = scalar(f);
        return x;
    }
    /// Nonzero scalar of the light form r * q^k, which keeps products small.
    FieldElement unit_scalar(const Field& f) {
        return f.rational(nonzero_rational(5)) * int_pow(f.q(), range(-2, 2));
    }

    LaurentPoly laurent(const Field& f, int max_terms, int lo = -3, int hi = 3) {
        LaurentPoly p(f);
        int terms = range(0, max_terms);
        for (int i = 0; i < terms; ++i) p.add_term(scalar(f), range(lo, hi));
        return p;
    }
    LaurentPoly light_laurent(const Field& f, int max_terms, int lo = -2, int hi = 2) {
        LaurentPoly p(f);
        int terms = range(1, max_terms);
        for (int i = 0; i < terms; ++i) p.add_term(unit_scalar(f), range(lo, hi));
        return p;
    }

    /// A valid a(h): nonzero, not a monomial, at most max_terms terms.
    Algebra algebra(const Field& f, int max_terms = 3) {
        for (;;) {
            LaurentPoly a = light_laurent(f, max_terms);
            if (a.term_count() >= 2) return Algebra(a, f.q());
        }
    }

    GWAElement homogeneous(const Algebra& alg, int max_deg = 2) {
        return GWAElement::homogeneous(alg, range(-max_deg, max_deg), light_laurent(alg.field(), 2));
    }
    GWAElement element(const Algebra& alg, int max_deg = 2) {
        GWAElement u(alg);
        int parts = range(1, 2);
        for (int i = 0; i < parts; ++i) u += homogeneous(alg, max_deg);
        return u;
    }

    Word word(const Field& f, int max_len) {
        Word w{unit_scalar(f), {}};
        int len = range(0, max_len);
        for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<Letter>(range(0, 3)));
        return w;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline bool same_images(const GeneralImages& l, const GeneralImages& r) {
    return l.h == r.h && l.x == r.x && l.y == r.y;
}

}  // namespace qgwa::testing

#endif  // QGWA_TESTS_SUPPORT_HPP
