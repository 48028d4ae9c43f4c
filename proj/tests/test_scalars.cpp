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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qgwa/cyclotomic.hpp"
#include "qgwa/errors.hpp"
#include "qgwa/field.hpp"
#include "support.hpp"

using namespace qgwa;

namespace {

using RatVec = std::vector<Rational>;  // low degree first

// Schoolbook long division by a monic divisor; returns the remainder.
RatVec naive_remainder(RatVec num, const RatVec& den) {
    while (num.size() >= den.size()) {
        Rational lead = num.back();
        std::size_t shift = num.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        num.pop_back();
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    return num;
}

RatVec coeffs_of(const DensePoly<Rational>& p) {
    RatVec out;
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p[i]);
    return out;
}

}  // namespace

TEST_CASE("field arithmetic examples") {
    Field f(1);
    FieldElement q = f.q();
    CHECK(q + q == f.rational(2) * q);
    CHECK((q * q - f.one()) / (q - f.one()) == q + f.one());

    Field f4(4);
    CHECK(f4.zeta() * f4.zeta() == -f4.one());
}

TEST_CASE("field errors") {
    Field f(1);
    CHECK_THROWS_AS(f.q() / f.zero(), DivisionByZero);
    CHECK_THROWS_AS(f.zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(f.q() + Field(4).q(), ModulusMismatch);
    CHECK_THROWS_AS(int_pow(f.zero(), -1), DivisionByZero);
}

TEST_CASE("cyclotomic polynomial examples") {
    CHECK(coeffs_of(cyclotomic_polynomial(1)) == RatVec{-1, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(2)) == RatVec{1, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(4)) == RatVec{1, 0, 1});
    CHECK(coeffs_of(cyclotomic_polynomial(12)) == RatVec{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic polynomial divides z^N - 1 and has degree phi(N)") {
    for (int n = 1; n <= 24; ++n) {
        CAPTURE(n);
        RatVec zn1(static_cast<std::size_t>(n) + 1, Rational(0));
        zn1.front() = -1;
        zn1.back() = 1;
        RatVec phi = coeffs_of(cyclotomic_polynomial(n));
        CHECK(phi.back() == 1);
        CHECK(naive_remainder(zn1, phi).empty());
        int totient = 0;
        for (int k = 1; k <= n; ++k) totient += std::gcd(k, n) == 1;
        CHECK(static_cast<int>(phi.size()) - 1 == totient);
    }
}

TEST_CASE("int_pow examples") {
    Field f(1);
    FieldElement q = f.q();
    CHECK(int_pow(q, -1) == f.one() / q);
    CHECK(int_pow(q + f.one(), 0) == f.one());
    CHECK(int_pow(q, 3) == q * q * q);
    CHECK(to_string(int_pow(q, -1)) == "1/q");
}

TEST_CASE("rational_root examples") {
    CHECK(rational_root(Rational(8), 3) == Rational(2));
    CHECK_FALSE(rational_root(Rational(-4), 2).has_value());
    CHECK(rational_root(Rational(9, 4), 2) == Rational(3, 2));
    CHECK(rational_root(Rational(-27, 8), 3) == Rational(-3, 2));
    CHECK_FALSE(rational_root(Rational(2), 2).has_value());
    CHECK(rational_root(Rational(0), 5) == Rational(0));
}

TEST_CASE("rational_root recovers random powers") {
    testing::Gen gen(11);
    for (int i = 0; i < 100; ++i) {
        Rational r = gen.nonzero_rational(30);
        unsigned g = static_cast<unsigned>(gen.range(1, 5));
        Rational c = 1;
        for (unsigned k = 0; k < g; ++k) c *= r;
        auto root = rational_root(c, g);
        REQUIRE(root.has_value());
        Rational back = 1;
        for (unsigned k = 0; k < g; ++k) back *= *root;
        CHECK(back == c);
    }
}

TEST_CASE("roots_of_unity examples") {
    CHECK(roots_of_unity(1, Field(1)) == std::vector<FieldElement>{Field(1).one()});
    Field f1(1);
    CHECK(roots_of_unity(2, f1) == std::vector<FieldElement>{f1.one(), -f1.one()});
    Field f4(4);
    CHECK(roots_of_unity(4, f4) == std::vector<FieldElement>{f4.one(), -f4.one(), f4.zeta(), -f4.zeta()});
    for (int n : {1, 3, 5, 6})
        CHECK(roots_of_unity(1, Field(n)).size() == 1);
}

TEST_CASE("roots_of_unity against brute-force enumeration") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
        Field f(n);
        int m = n % 2 == 0 ? n : 2 * n;
        CHECK(f.roots_of_unity_order() == m);
        // Oracle: all +-z^k, filtered by w^t = 1.
        std::vector<FieldElement> pool;
        for (int k = 0; k < n; ++k)
            for (int sign : {1, -1}) {
                FieldElement w = f.rational(sign) * int_pow(f.zeta(), k);
                if (std::find(pool.begin(), pool.end(), w) == pool.end()) pool.push_back(w);
            }
        CHECK(static_cast<int>(pool.size()) == m);
        for (int t = 1; t <= 12; ++t) {
            CAPTURE(n);
            CAPTURE(t);
            auto roots = roots_of_unity(t, f);
            CHECK(static_cast<int>(roots.size()) == std::gcd(t, m));
            for (std::size_t i = 0; i < roots.size(); ++i) {
                CHECK(int_pow(roots[i], t) == f.one());
                CHECK(std::find(roots.begin(), roots.end(), roots[i].inverse()) != roots.end());
                for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(roots[i] == roots[j]);
            }
            int expected = 0;
            for (const auto& w : pool) expected += int_pow(w, t) == f.one();
            CHECK(expected == static_cast<int>(roots.size()));
        }
    }
}

TEST_CASE("q is not a root of unity") {
    for (int n : {1, 4, 6}) {
        Field f(n);
        for (int k = -20; k <= 20; ++k)
            if (k != 0) CHECK_FALSE(int_pow(f.q(), k) == f.one());
    }
}

TEST_CASE("field axioms on random triples") {
    for (int n : {1, 3, 4}) {
        Field f(n);
        testing::Gen gen(100 + static_cast<std::uint64_t>(n));
        for (int i = 0; i < 200; ++i) {
            FieldElement x = gen.scalar(f), y = gen.scalar(f), z = gen.scalar(f);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK(x - x == f.zero());
            if (!x.is_zero()) CHECK(x * x.inverse() == f.one());
        }
    }
}

TEST_CASE("fractions are reduced with monic denominators") {
    Field f(1);
    FieldElement q = f.q();
    FieldElement x = (f.rational(2) * q * q - f.rational(2)) / (f.rational(4) * q - f.rational(4));
    CHECK(x == (q + f.one()) / f.rational(2));
    CHECK(to_string(x) == "1/2+1/2*q");
    CHECK(to_string(q / (q + f.one())) == "q/(1+q)");
}

TEST_CASE("monomial_roots") {
    Field f(1);
    FieldElement q = f.q();
    auto r = monomial_roots(f.rational(4) * int_pow(q, -2), 2);
    REQUIRE(r.has_value());
    CHECK(r->size() == 2);
    for (const auto& x : *r) CHECK(x * x == f.rational(4) * int_pow(q, -2));
    CHECK(monomial_roots(q, 2)->empty());
    CHECK(monomial_roots(f.rational(2), 2)->empty());
    CHECK_FALSE(monomial_roots(q + f.one(), 2).has_value());

    Field f4(4);
    auto s = monomial_roots(-f4.one(), 2);
    REQUIRE(s.has_value());
    CHECK(s->size() == 2);
    for (const auto& x : *s) CHECK(x * x == -f4.one());
}
