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

#include "qgwa/endo.hpp"
#include "qgwa/errors.hpp"
#include "support.hpp"

using namespace qgwa;

namespace {

LaurentPoly mono(const FieldElement& c, int k) { return LaurentPoly::monomial(c, k); }

struct Sym {
    Field fld{1};
    FieldElement one = fld.one();
    FieldElement q = fld.q();
    FieldElement qi = q.inverse();
    Algebra alg{mono(one, 1) + mono(one, -1), q};
    GWAElement x = GWAElement::x(alg);
    GWAElement y = GWAElement::y(alg);
    GWAElement h = GWAElement::h(alg);
    GWAElement s(const FieldElement& c) const { return GWAElement::scalar(alg, c); }
};

// (h - 1)(h - q)
Algebra zero_type_algebra(const Field& f) {
    LaurentPoly hh = LaurentPoly::h_power(f, 1);
    return Algebra((hh - LaurentPoly::constant(f.one())) * (hh - LaurentPoly::constant(f.q())), f.q());
}

// The negative type relation checked termwise: b c h^w a(q h) against a(alpha h^-1).
bool relation_holds(const Algebra& alg, const FieldElement& alpha, const FieldElement& bc, int w) {
    LaurentPoly lhs(alg.field()), rhs(alg.field());
    for (const auto& [i, ai] : alg.a().terms()) {
        lhs.add_term(bc * ai * int_pow(alg.q(), i), i + w);
        rhs.add_term(ai * int_pow(alpha, i), -i);
    }
    return lhs == rhs;
}

// Algebras that carry negative type endomorphisms.
Algebra negative_algebra(testing::Gen& gen, const Field& f) {
    auto c = [&] { return gen.unit_scalar(f); };
    switch (gen.range(0, 3)) {
        case 0: return Algebra(mono(f.one(), 1) + mono(f.one(), -1) + mono(c(), 0), f.q());
        case 1: return Algebra(mono(c(), 2) + mono(c(), 1) + mono(c(), 0), f.q());
        case 2: return Algebra(mono(c(), -1) + mono(c(), 0), f.q());
        default: return Algebra(mono(f.one(), 1) + mono(f.one(), -1), f.q());
    }
}

NegativeEndo random_negative(testing::Gen& gen, const Algebra& alg, const NegativeFamily& fam) {
    std::size_t idx = static_cast<std::size_t>(gen.range(0, static_cast<int>(fam.alphas.size()) - 1));
    return family_member(alg, fam, idx, gen.unit_scalar(alg.field()), gen.range(-4, 4));
}

PositiveEndo random_positive(testing::Gen& gen, const Algebra& alg) {
    auto units = roots_of_unity(alg.t(), alg.field());
    const auto& alpha = units[static_cast<std::size_t>(gen.range(0, static_cast<int>(units.size()) - 1))];
    return make_positive(alpha, gen.range(-4, 4), gen.unit_scalar(alg.field()), alg);
}

}  // namespace

TEST_CASE_FIXTURE(Sym, "verify examples") {
    CHECK(verify(images(identity(alg))));
    CHECK(verify(GeneralImages{h, h * x, y * GWAElement::h(alg, -1)}));
    CHECK_FALSE(verify(GeneralImages{h, x + h, y}));
    CHECK_FALSE(verify(GeneralImages{h + GWAElement::one(alg), x, y}));
    CHECK_FALSE(verify(GeneralImages{h, y, x}));
}

TEST_CASE_FIXTURE(Sym, "classify examples") {
    CHECK(classify(images(identity(alg))) == Endomorphism(make_positive(one, 0, one, alg)));
    Algebra za = zero_type_algebra(fld);
    GWAElement zero(za);
    CHECK(classify(GeneralImages{GWAElement::one(za), zero, zero}) == Endomorphism(ZeroEndo{za, one}));
    Endomorphism neg = classify(GeneralImages{s(qi) * GWAElement::h(alg, -1), y, x});
    CHECK(neg == Endomorphism(NegativeEndo{alg, qi, one, one, 0, 0}));
    CHECK_THROWS_AS(classify(GeneralImages{h, x + h, y}), NotAnEndomorphism);
}

TEST_CASE_FIXTURE(Sym, "make_positive examples") {
    PositiveEndo f = make_positive(-one, 3, q, alg);
    GeneralImages im = images(f);
    CHECK(im.h == s(-one) * h);
    CHECK(im.x == s(q) * GWAElement::h(alg, 3) * x);
    CHECK(im.y == s(-qi) * y * GWAElement::h(alg, -3));
    CHECK(verify(im));
    CHECK(make_positive(one, 0, one, alg) == identity(alg));
    CHECK_THROWS_AS(make_positive(-one, 0, one, zero_type_algebra(fld)), NotRootOfUnity);
    CHECK_THROWS_AS(make_positive(q, 0, one, alg), NotRootOfUnity);
    CHECK_THROWS_AS(make_positive(one, 0, fld.zero(), alg), PreconditionError);
}

TEST_CASE_FIXTURE(Sym, "positive composition and inverse examples") {
    PositiveEndo f = make_positive(-one, 1, q, alg);
    CHECK(compose_positive(identity(alg), f) == f);
    CHECK(compose_positive(make_positive(-one, 1, one, alg), make_positive(-one, 2, q, alg)) == make_positive(one, 3, q, alg));
    CHECK(compose_positive(f, invert_positive(f)) == identity(alg));
    CHECK(invert_positive(identity(alg)) == identity(alg));
    CHECK(invert_positive(f) == make_positive(-one, -1, -qi, alg));
    CHECK(invert_positive(make_positive(one, 4, one, alg)) == make_positive(one, -4, one, alg));
}

TEST_CASE("zero locus and make_zero examples") {
    Field f(1);
    FieldElement one = f.one(), q = f.q();
    Algebra za = zero_type_algebra(f);
    ZeroLocus z = zero_type_locus(za);
    CHECK(z.gcd == LaurentPoly::h_power(f, 1) - LaurentPoly::constant(one));
    CHECK(z.points == std::vector<FieldElement>{one});
    CHECK(make_zero(one, za) == ZeroEndo{za, one});
    CHECK_THROWS_AS(make_zero(q, za), NotCommonRoot);

    Algebra sym(mono(one, 1) + mono(one, -1), q);
    ZeroLocus zs = zero_type_locus(sym);
    CHECK(zs.gcd == LaurentPoly::constant(one));
    CHECK(zs.points.empty());
    CHECK_THROWS_AS(make_zero(one, sym), NotCommonRoot);
}

TEST_CASE("zero locus points are certified roots") {
    testing::Gen gen(31);
    Field f(1);
    FieldElement q = f.q();
    for (int i = 0; i < 40; ++i) {
        // a = (h - r)(h - q r) * extra has the common root r.
        FieldElement r = gen.unit_scalar(f);
        LaurentPoly hh = LaurentPoly::h_power(f, 1);
        LaurentPoly a = (hh - LaurentPoly::constant(r)) * (hh - LaurentPoly::constant(q * r));
        if (gen.coin()) a = a * (hh + LaurentPoly::constant(gen.unit_scalar(f)));
        Algebra alg(a, q);
        ZeroLocus z = zero_type_locus(alg);
        CHECK(z.gcd.degree() >= 1);
        CHECK(std::find(z.points.begin(), z.points.end(), r) != z.points.end());
        for (const auto& p : z.points) {
            CHECK(evaluate(a, p).is_zero());
            CHECK(evaluate(a, q * p).is_zero());
            CHECK_FALSE(is_injective(make_zero(p, alg)));
        }
    }
}

TEST_CASE_FIXTURE(Sym, "solve_negative examples") {
    NegativeFamily fam = solve_negative(alg);
    REQUIRE(fam.exists);
    CHECK(fam.mirror_constant == 0);
    REQUIRE(fam.alphas.size() == 2);
    CHECK(fam.alphas[0].alpha == qi);
    CHECK(fam.alphas[0].bc == one);
    CHECK(fam.alphas[1].alpha == -qi);
    CHECK(fam.alphas[1].bc == -one);

    Algebra cubic(mono(one, 3) + mono(one, 1) + mono(one, 0), q);
    NegativeFamily none = solve_negative(cubic);
    CHECK_FALSE(none.exists);
    CHECK(none.resolved());
    CHECK(none.reason == "support not mirror-symmetric");

    // h^2 + h + 2 does carry a family: bc = 2/q^2 and alpha = 2/q satisfy every coefficient equation.
    Algebra quad(mono(one, 2) + mono(one, 1) + mono(fld.rational(2), 0), q);
    NegativeFamily qf = solve_negative(quad);
    REQUIRE(qf.exists);
    REQUIRE(qf.alphas.size() == 1);
    CHECK(qf.alphas[0].alpha == fld.rational(2) * qi);
    CHECK(qf.alphas[0].bc == fld.rational(2) * qi * qi);
    CHECK(relation_holds(quad, qf.alphas[0].alpha, qf.alphas[0].bc, -2));

    Algebra hh1(mono(one, 2) + mono(one, 1) + mono(one, 0), q);
    NegativeFamily f1 = solve_negative(hh1);
    REQUIRE(f1.alphas.size() == 1);
    CHECK(f1.alphas[0].alpha == qi);
    CHECK(f1.alphas[0].bc == qi * qi);
}

TEST_CASE("solve_negative inconsistency and roots of unity") {
    Field f(1);
    FieldElement one = f.one(), q = f.q();
    // Mirror-symmetric support, but the outer and middle equations disagree.
    Algebra bad(mono(one, 2) + mono(one, 0) + mono(one, -2) + mono(f.rational(3), 1) + mono(one, -1), q);
    NegativeFamily fam = solve_negative(bad);
    CHECK_FALSE(fam.exists);
    CHECK(fam.resolved());

    // h^2 + h^-2 over Q(i)(q): alpha^4 = q^-4 has four solutions.
    Field f4(4);
    Algebra a4(mono(f4.one(), 2) + mono(f4.one(), -2), f4.q());
    NegativeFamily fam4 = solve_negative(a4);
    REQUIRE(fam4.exists);
    CHECK(fam4.alphas.size() == 4);
    Algebra a1(mono(one, 2) + mono(one, -2), q);
    CHECK(solve_negative(a1).alphas.size() == 2);
    for (const auto& s : fam4.alphas) CHECK(relation_holds(a4, s.alpha, s.bc, 0));

    // alpha^2 = 2/q^2 has no solution in Q(q).
    Algebra irr(mono(one, 2) + mono(one, 0) + mono(f.rational(2), -2), q);
    NegativeFamily firr = solve_negative(irr);
    CHECK_FALSE(firr.exists);
    CHECK(firr.resolved());
}

TEST_CASE_FIXTURE(Sym, "check_negative_candidate") {
    CHECK(check_negative_candidate(alg, qi) == one);
    CHECK(check_negative_candidate(alg, -qi) == -one);
    CHECK_FALSE(check_negative_candidate(alg, one).has_value());
}

TEST_CASE_FIXTURE(Sym, "make_negative examples") {
    NegativeEndo f = make_negative(qi, one, one, 0, 0, alg);
    CHECK(verify(images(f)));
    NegativeEndo g = make_negative(qi, one, one, 5, -5, alg);
    CHECK(verify(images(g)));
    try {
        make_negative(one, one, one, 0, 0, alg);
        FAIL("accepted alpha = 1");
    } catch (const RelationViolation& e) {
        CHECK(std::string(e.what()).find(to_string(negative_relation_residual(alg, one, one, 0))) != std::string::npos);
    }
    CHECK(negative_relation_residual(alg, one, one, 0) ==
          LaurentPoly::monomial(q - one, 1) + LaurentPoly::monomial(qi - one, -1));
}

TEST_CASE_FIXTURE(Sym, "negative composition and inverse examples") {
    NegativeEndo f = make_negative(qi, one, one, 0, 0, alg);
    NegativeEndo g = make_negative(-qi, one, -one, 0, 0, alg);
    CHECK(compose_negative(f, g) == make_positive(-one, 0, -one, alg));
    CHECK(compose_negative(f, invert_negative(f)) == identity(alg));
    CHECK(invert_negative(f) == f);
    NegativeEndo k = make_negative(qi, q * q, qi * qi, 3, -3, alg);
    // b' = q^v c^-1 alpha^-v = q^-3 q^2 q^-3, c' = q^u b^-1 alpha^-u = q^3 q^-2 q^3.
    CHECK(invert_negative(k) == NegativeEndo{alg, qi, int_pow(q, -4), int_pow(q, 4), -3, 3});
    CHECK(compose_negative(k, invert_negative(k)) == identity(alg));
    CHECK_FALSE(compose_negative(k, NegativeEndo{alg, qi, q * q, qi * qi, -3, 3}) == identity(alg));
    CHECK(compose_negative(k, k) == make_positive(one, 6, q * q * qi * qi * int_pow(qi, -3) * int_pow(q, 3), alg));
}

TEST_CASE_FIXTURE(Sym, "compose_general examples") {
    NegativeEndo theta = make_negative(qi, one, one, 0, 0, alg);
    PositiveEndo psi = make_positive(-one, 2, q, alg);
    CHECK(std::holds_alternative<NegativeEndo>(compose_general(psi, theta)));
    CHECK(std::holds_alternative<NegativeEndo>(compose_general(theta, psi)));

    Algebra za = zero_type_algebra(fld);
    ZeroEndo z = make_zero(fld.one(), za);
    Endomorphism zp = compose_general(z, make_positive(one, 3, q, za));
    CHECK(std::holds_alternative<ZeroEndo>(zp));
    NegativeFamily zfam = solve_negative(za);
    REQUIRE(zfam.exists);
    NegativeEndo zn = family_member(za, zfam, 0, one, 0);
    Endomorphism nz = compose_general(zn, z);
    REQUIRE(std::holds_alternative<ZeroEndo>(nz));
    CHECK_FALSE(is_injective(nz));
    CHECK(verify(images(nz)));

    for (const Endomorphism& e : {Endomorphism(theta), Endomorphism(psi)})
        CHECK(compose_general(identity(alg), e) == e);
    CHECK(compose_general(identity(za), z) == Endomorphism(z));
}

TEST_CASE("involution_search examples") {
    Field f(1);
    FieldElement one = f.one(), q = f.q();
    Algebra sym(mono(one, 1) + mono(one, -1), q);
    auto inv = involution_search(sym);
    REQUIRE(inv.has_value());
    CHECK(*inv == NegativeEndo{sym, q.inverse(), one, one, 0, 0});

    FieldElement mu = one / (one - int_pow(q, 4)), nu = -one / (q * q - one);
    Algebra so5(mono(mu, -1) + mono(nu, 0), q * q);
    CHECK_FALSE(involution_search(so5).has_value());
    CHECK(solve_negative(so5).exists);

    // h^2 + h + 2: u = v = -1 and bc alpha^-1 q = 1, so an involution exists.
    Algebra quad(mono(one, 2) + mono(one, 1) + mono(f.rational(2), 0), q);
    auto qi = involution_search(quad);
    REQUIRE(qi.has_value());
    CHECK(qi->u == -1);
    CHECK(qi->v == -1);
    CHECK(compose_negative(*qi, *qi) == identity(quad));
}

TEST_CASE("is_injective examples") {
    Field f(1);
    Algebra sym(mono(f.one(), 1) + mono(f.one(), -1), f.q());
    CHECK(is_injective(identity(sym)));
    CHECK(is_injective(*involution_search(sym)));
    Algebra za = zero_type_algebra(f);
    CHECK_FALSE(is_injective(make_zero(f.one(), za)));
    CHECK_THROWS_AS(invert(make_zero(f.one(), za)), PreconditionError);
}

TEST_CASE("composition formulas agree with substitution") {
    testing::Gen gen(404);
    for (int i = 0; i < 100; ++i) {
        Field f(gen.coin() ? 1 : 4);
        Algebra alg = negative_algebra(gen, f);
        NegativeFamily fam = solve_negative(alg);
        REQUIRE(fam.exists);
        PositiveEndo p1 = random_positive(gen, alg), p2 = random_positive(gen, alg);
        CHECK(testing::same_images(images(compose_positive(p1, p2)), compose_by_substitution(images(p1), images(p2))));
        NegativeEndo n1 = random_negative(gen, alg, fam), n2 = random_negative(gen, alg, fam);
        PositiveEndo nn = compose_negative(n1, n2);
        CHECK(testing::same_images(images(nn), compose_by_substitution(images(n1), images(n2))));
        CHECK(int_pow(nn.alpha, alg.t()) == f.one());
    }
}

TEST_CASE("inverse laws and the negative-type identities") {
    testing::Gen gen(405);
    for (int i = 0; i < 100; ++i) {
        Field f(1);
        Algebra alg = negative_algebra(gen, f);
        NegativeFamily fam = solve_negative(alg);
        PositiveEndo p = random_positive(gen, alg);
        CHECK(compose_positive(p, invert_positive(p)) == identity(alg));
        CHECK(compose_positive(invert_positive(p), p) == identity(alg));
        NegativeEndo n = random_negative(gen, alg, fam);
        CHECK(compose_negative(n, invert_negative(n)) == identity(alg));
        CHECK(compose_negative(invert_negative(n), n) == identity(alg));
        FieldElement bc = n.b * n.c;
        CHECK(bc * bc == int_pow(n.alpha, -(n.u + n.v)) * int_pow(alg.q(), n.u + n.v));
        CHECK(relation_holds(alg, n.alpha, bc, n.u + n.v));
        CHECK(compose_negative(n, n) == make_positive(f.one(), n.u - n.v, bc * int_pow(n.alpha, n.v) * int_pow(alg.q(), -n.v), alg));
    }
}

TEST_CASE("constructed endomorphisms verify, classify back, and perturbations fail") {
    testing::Gen gen(406);
    for (int i = 0; i < 40; ++i) {
        Field f(1);
        Algebra alg = negative_algebra(gen, f);
        NegativeFamily fam = solve_negative(alg);
        std::vector<Endomorphism> built{random_positive(gen, alg), random_negative(gen, alg, fam)};
        for (const auto& e : built) {
            GeneralImages im = images(e);
            CHECK(verify(im));
            CHECK(classify(im) == e);
            GeneralImages bad = im;
            bad.x += GWAElement::h(alg);
            CHECK_FALSE(verify(bad));
        }
    }
    Field f(1);
    Algebra za = zero_type_algebra(f);
    ZeroEndo z = make_zero(f.one(), za);
    CHECK(verify(images(z)));
    CHECK(classify(images(z)) == Endomorphism(z));
}

TEST_CASE("negative endomorphisms form a single coset of End_+") {
    testing::Gen gen(407);
    Field f(1);
    for (int i = 0; i < 20; ++i) {
        Algebra alg = negative_algebra(gen, f);
        NegativeFamily fam = solve_negative(alg);
        NegativeEndo theta = random_negative(gen, alg, fam);
        for (int j = 0; j < 3; ++j) {
            PositiveEndo psi = random_positive(gen, alg);
            for (const Endomorphism& e : {compose_general(psi, theta), compose_general(theta, psi)}) {
                REQUIRE(std::holds_alternative<NegativeEndo>(e));
                CHECK(relation_holds(alg, std::get<NegativeEndo>(e).alpha,
                                     std::get<NegativeEndo>(e).b * std::get<NegativeEndo>(e).c,
                                     std::get<NegativeEndo>(e).u + std::get<NegativeEndo>(e).v));
                CHECK(compose_general(e, invert(e)) == Endomorphism(identity(alg)));
            }
        }
    }
}

TEST_CASE("every emitted negative solution satisfies the relation") {
    testing::Gen gen(408);
    for (int i = 0; i < 60; ++i) {
        Field f(gen.coin() ? 1 : 3);
        Algebra alg = gen.algebra(f, 4);
        NegativeFamily fam = solve_negative(alg);
        for (const auto& s : fam.alphas) CHECK(relation_holds(alg, s.alpha, s.bc, -*fam.mirror_constant));
        if (fam.exists) {
            NegativeEndo n = family_member(alg, fam, 0, f.one(), 0);
            CHECK(verify(images(n)));
        }
    }
}
