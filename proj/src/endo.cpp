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

#include "qgwa/endo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qgwa/errors.hpp"

namespace qgwa {

namespace {

void require_same(const Algebra& a, const Algebra& b) {
    if (!(a == b)) throw SpecMismatch("endomorphisms of different algebras");
}

void require_nonzero(const FieldElement& x, const char* name) {
    if (x.is_zero()) throw PreconditionError(std::string(name) + " must be nonzero");
}

GWAElement poly_element(const Algebra& alg, const FieldElement& c, int exponent) {
    return GWAElement::homogeneous(alg, 0, LaurentPoly::monomial(c, exponent));
}

// Extended Euclid on integers: returns (g, x, y) with x*a + y*b = g.
std::tuple<long, long, long> xgcd(long a, long b) {
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long quot = a / b;
        std::tie(a, b) = std::make_tuple(b, a - quot * b);
        std::tie(x0, x1) = std::make_tuple(x1, x0 - quot * x1);
        std::tie(y0, y1) = std::make_tuple(y1, y0 - quot * y1);
    }
    return {a, x0, y0};
}

}  // namespace

bool operator==(const PositiveEndo& l, const PositiveEndo& r) {
    return l.algebra == r.algebra && l.alpha == r.alpha && l.n == r.n && l.b == r.b;
}

bool operator==(const ZeroEndo& l, const ZeroEndo& r) { return l.algebra == r.algebra && l.alpha == r.alpha; }

bool operator==(const NegativeEndo& l, const NegativeEndo& r) {
    return l.algebra == r.algebra && l.alpha == r.alpha && l.b == r.b && l.c == r.c && l.u == r.u && l.v == r.v;
}

const Algebra& algebra_of(const Endomorphism& f) {
    return std::visit([](const auto& e) -> const Algebra& { return e.algebra; }, f);
}

std::optional<HImage> GeneralImages::h_unit() const {
    if (!h.is_homogeneous() || h.components().begin()->first != 0) return std::nullopt;
    const LaurentPoly& p = h.components().begin()->second;
    if (!p.is_monomial()) return std::nullopt;
    return HImage{p.terms().begin()->second, p.terms().begin()->first};
}

// ---------------------------------------------------------------------------
// Images

GeneralImages images(const PositiveEndo& f) {
    const Algebra& alg = f.algebra;
    const FieldElement c = int_pow(f.alpha, alg.degree()) / f.b;
    return {poly_element(alg, f.alpha, 1), poly_element(alg, f.b, f.n) * GWAElement::x(alg),
            GWAElement::y(alg) * poly_element(alg, c, -f.n)};
}

GeneralImages images(const ZeroEndo& f) {
    const Algebra& alg = f.algebra;
    return {GWAElement::scalar(alg, f.alpha), GWAElement(alg), GWAElement(alg)};
}

GeneralImages images(const NegativeEndo& f) {
    const Algebra& alg = f.algebra;
    return {poly_element(alg, f.alpha, -1), GWAElement::y(alg) * poly_element(alg, f.c, f.v),
            poly_element(alg, f.b, f.u) * GWAElement::x(alg)};
}

GeneralImages images(const Endomorphism& f) {
    return std::visit([](const auto& e) { return images(e); }, f);
}

// ---------------------------------------------------------------------------
// Verification and classification

bool verify(const GeneralImages& imgs) {
    const Algebra& alg = imgs.h.algebra();
    if (!(imgs.x.algebra() == alg) || !(imgs.y.algebra() == alg)) throw SpecMismatch("images of different algebras");
    // h^{+-1} h^{-+1} = 1 forces the image of h to be a unit, i.e. a nonzero monomial.
    auto unit = imgs.h_unit();
    if (!unit) return false;

    const FieldElement& q = alg.q();
    const GWAElement& H = imgs.h;
    const GWAElement& X = imgs.x;
    const GWAElement& Y = imgs.y;
    if (!(X * H == q * (H * X))) return false;
    if (!(Y * H == q.inverse() * (H * Y))) return false;
    if (!(X * Y == GWAElement::homogeneous(alg, 0, substitute(alg.a(), q * unit->alpha, unit->exponent)))) return false;
    if (!(Y * X == GWAElement::homogeneous(alg, 0, substitute(alg.a(), unit->alpha, unit->exponent)))) return false;
    return true;
}

namespace {

std::optional<std::pair<FieldElement, int>> single_term(const GWAElement& u, int degree) {
    if (!u.is_homogeneous() || u.components().begin()->first != degree) return std::nullopt;
    const LaurentPoly& p = u.components().begin()->second;
    if (!p.is_monomial()) return std::nullopt;
    return std::make_pair(p.terms().begin()->second, p.terms().begin()->first);
}

}  // namespace

Endomorphism classify(const GeneralImages& imgs) {
    if (!verify(imgs)) throw NotAnEndomorphism("images do not satisfy the defining relations of A(a(h),q)");
    const Algebra& alg = imgs.h.algebra();
    const HImage unit = *imgs.h_unit();

    std::optional<Endomorphism> found;
    try {
        if (unit.exponent == 1) {
            if (auto bx = single_term(imgs.x, 1)) found = make_positive(unit.alpha, bx->second, bx->first, alg);
        } else if (unit.exponent == 0) {
            if (imgs.x.is_zero() && imgs.y.is_zero()) found = make_zero(unit.alpha, alg);
        } else if (unit.exponent == -1) {
            auto by = single_term(imgs.y, 1);
            auto cx = single_term(imgs.x, -1);
            if (by && cx) {
                // y c h^v = c q^-v h^v y
                const FieldElement c = cx->first * int_pow(alg.q(), cx->second);
                found = make_negative(unit.alpha, by->first, c, by->second, cx->second, alg);
            }
        }
    } catch (const PreconditionError& e) {
        throw UnclassifiableImages(std::string("verified images violate the classification: ") + e.what());
    }
    if (!found) throw UnclassifiableImages("verified images match none of the positive, zero or negative forms");

    const GeneralImages canonical = images(*found);
    if (!(canonical.h == imgs.h) || !(canonical.x == imgs.x) || !(canonical.y == imgs.y))
        throw UnclassifiableImages("verified images differ from their canonical form");
    return *found;
}

// ---------------------------------------------------------------------------
// Positive type

PositiveEndo identity(const Algebra& alg) { return PositiveEndo{alg, alg.field().one(), 0, alg.field().one()}; }

PositiveEndo make_positive(const FieldElement& alpha, int n, const FieldElement& b, const Algebra& alg) {
    require_nonzero(alpha, "alpha");
    require_nonzero(b, "b");
    if (!int_pow(alpha, alg.t()).is_one())
        throw NotRootOfUnity("alpha = " + to_string(alpha) + " is not a " + std::to_string(alg.t()) +
                             "-th root of unity");
    PositiveEndo f{alg, alpha, n, b};
    if (!verify(images(f))) throw std::logic_error("positive-type images failed verification");
    return f;
}

PositiveEndo compose_positive(const PositiveEndo& f, const PositiveEndo& g) {
    require_same(f.algebra, g.algebra);
    return PositiveEndo{f.algebra, f.alpha * g.alpha, f.n + g.n, f.b * g.b * int_pow(f.alpha, g.n)};
}

PositiveEndo invert_positive(const PositiveEndo& f) {
    return PositiveEndo{f.algebra, f.alpha.inverse(), -f.n, f.b.inverse() * int_pow(f.alpha, f.n)};
}

// ---------------------------------------------------------------------------
// Zero type

namespace {

std::vector<Integer> small_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    if (n == 0 || n > 1000000) return {Integer(1)};
    const unsigned long v = n.get_ui();
    for (unsigned long k = 1; k <= v; ++k)
        if (v % k == 0) out.emplace_back(k);
    return out;
}

bool is_common_root(const Algebra& alg, const FieldElement& alpha) {
    return !alpha.is_zero() && evaluate(alg.a(), alpha).is_zero() && evaluate(alg.a(), alg.q() * alpha).is_zero();
}

}  // namespace

ZeroLocus zero_type_locus(const Algebra& alg) {
    ZeroLocus locus{poly_gcd(alg.a(), alg.shifted_a(1)), {}};
    const LaurentPoly& g = locus.gcd;
    const Field& field = alg.field();
    const int deg = g.degree();
    if (deg == 0) return locus;

    std::vector<FieldElement> candidates;
    if (deg == 1) {
        candidates.push_back(-g.coefficient(0));
    } else if (deg == 2) {
        const FieldElement b = g.coefficient(1), c = g.coefficient(0);
        const FieldElement disc = b * b - field.rational(4) * c;
        if (auto roots = monomial_roots(disc, 2))
            for (const auto& r : *roots) candidates.push_back((-b + r) / field.rational(2));
    }

    // Probe gamma * q^j with gamma a root of unity times a ratio of divisors of the
    // constant coefficient's rational part.
    int bound = 2;
    for (const auto& [k, c] : g.terms())
        bound = std::max({bound, c.numerator().degree() + 2, c.denominator().degree() + 2});
    std::vector<Rational> ratios{Rational(1)};
    if (auto mono = g.coefficient(0).as_q_monomial(); mono && mono->coeff.is_rational()) {
        const Rational& r = mono->coeff.constant_term();
        for (const auto& n : small_divisors(r.get_num()))
            for (const auto& d : small_divisors(r.get_den())) ratios.emplace_back(Rational(n, d));
    }
    const auto units = roots_of_unity(field.roots_of_unity_order(), field);
    for (int j = -bound; j <= bound; ++j) {
        const FieldElement qj = int_pow(field.q(), j);
        for (const auto& r : ratios)
            for (const auto& w : units) {
                FieldElement cand = w * field.rational(r) * qj;
                if (evaluate(g, cand).is_zero()) candidates.push_back(cand);
            }
    }

    for (const auto& c : candidates)
        if (is_common_root(alg, c)) locus.points.push_back(c);
    std::sort(locus.points.begin(), locus.points.end(), canonical_less);
    locus.points.erase(std::unique(locus.points.begin(), locus.points.end()), locus.points.end());
    return locus;
}

ZeroEndo make_zero(const FieldElement& alpha, const Algebra& alg) {
    require_nonzero(alpha, "alpha");
    const FieldElement at_alpha = evaluate(alg.a(), alpha);
    const FieldElement at_q_alpha = evaluate(alg.a(), alg.q() * alpha);
    if (!at_alpha.is_zero() || !at_q_alpha.is_zero())
        throw NotCommonRoot("alpha = " + to_string(alpha) + " gives a(alpha) = " + to_string(at_alpha) +
                            " and a(q alpha) = " + to_string(at_q_alpha));
    return ZeroEndo{alg, alpha};
}

// ---------------------------------------------------------------------------
// Negative type

LaurentPoly negative_relation_residual(const Algebra& alg, const FieldElement& alpha, const FieldElement& bc, int w) {
    return (bc * alg.shifted_a(1)).shifted(w) - substitute(alg.a(), alpha, -1);
}

namespace {

std::optional<int> mirror_constant(const std::vector<int>& sup) {
    const std::size_t m = sup.size();
    const int s = sup.front() + sup.back();
    for (std::size_t j = 0; j < m; ++j)
        if (sup[j] + sup[m - 1 - j] != s) return std::nullopt;
    return s;
}

// bc from the lowest-exponent coefficient equation.
FieldElement bc_for(const Algebra& alg, const FieldElement& alpha) {
    const LaurentPoly& a = alg.a();
    const int d = alg.degree(), e = alg.valuation();
    return a.coefficient(e) * int_pow(alpha, e) / (a.coefficient(d) * int_pow(alg.q(), d));
}

}  // namespace

NegativeFamily solve_negative(const Algebra& alg) {
    NegativeFamily fam;
    const auto& sup = alg.support();
    fam.mirror_constant = mirror_constant(sup);
    if (!fam.mirror_constant) {
        fam.reason = "support not mirror-symmetric";
        return fam;
    }
    const int s = *fam.mirror_constant;
    const LaurentPoly& a = alg.a();
    const FieldElement& q = alg.q();
    const int d = alg.degree(), e = alg.valuation();
    const std::size_t m = sup.size();

    // Eliminating bc leaves alpha^{k_j} = c_j, k_j = i_{m+1-j} - e.
    std::vector<std::pair<long, FieldElement>> eqs;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const int i = sup[j], mirror = sup[m - 1 - j];
        FieldElement cj = a.coefficient(e) * a.coefficient(i) * int_pow(q, i) /
                          (a.coefficient(d) * int_pow(q, d) * a.coefficient(mirror));
        eqs.emplace_back(mirror - e, std::move(cj));
    }

    long g = 0;
    FieldElement big_c = alg.field().one();
    for (const auto& [k, cj] : eqs) {
        if (g == 0) {
            g = k;
            big_c = cj;
            continue;
        }
        auto [g2, x, y] = xgcd(g, k);
        big_c = int_pow(big_c, x) * int_pow(cj, y);
        g = g2;
    }
    for (const auto& [k, cj] : eqs) {
        if (!(int_pow(big_c, k / g) == cj)) {
            fam.reason = "coefficient system inconsistent";
            return fam;
        }
    }

    auto roots = monomial_roots(big_c, static_cast<int>(g));
    if (!roots) {
        fam.residual = ResidualConstraint{static_cast<int>(g), big_c};
        fam.reason = "unresolved root extraction alpha^" + std::to_string(g) + " = " + to_string(big_c);
        return fam;
    }

    for (const auto& alpha : *roots) {
        FieldElement bc = bc_for(alg, alpha);
        if (negative_relation_residual(alg, alpha, bc, -s).is_zero()) fam.alphas.push_back({alpha, std::move(bc)});
    }
    fam.exists = !fam.alphas.empty();
    if (!fam.exists) fam.reason = "alpha^" + std::to_string(g) + " = " + to_string(big_c) + " has no solution in K";
    return fam;
}

std::optional<FieldElement> check_negative_candidate(const Algebra& alg, const FieldElement& alpha) {
    if (alpha.is_zero()) return std::nullopt;
    auto s = mirror_constant(alg.support());
    if (!s) return std::nullopt;
    FieldElement bc = bc_for(alg, alpha);
    if (!negative_relation_residual(alg, alpha, bc, -*s).is_zero()) return std::nullopt;
    return bc;
}

NegativeEndo make_negative(const FieldElement& alpha, const FieldElement& b, const FieldElement& c, int u, int v,
                           const Algebra& alg) {
    require_nonzero(alpha, "alpha");
    require_nonzero(b, "b");
    require_nonzero(c, "c");
    const FieldElement bc = b * c;
    LaurentPoly residual = negative_relation_residual(alg, alpha, bc, u + v);
    if (!residual.is_zero())
        throw RelationViolation("b c h^(u+v) a(qh) - a(alpha h^-1) = " + to_string(residual) + " (expected 0)");
    if (!(bc * bc == int_pow(alpha, -(u + v)) * int_pow(alg.q(), u + v)))
        throw std::logic_error("negative-type parameters violate (bc)^2 = alpha^-(u+v) q^(u+v)");
    return NegativeEndo{alg, alpha, b, c, u, v};
}

NegativeEndo family_member(const Algebra& alg, const NegativeFamily& fam, std::size_t index, const FieldElement& b,
                           int u) {
    const auto& sol = fam.alphas.at(index);
    return make_negative(sol.alpha, b, sol.bc / b, u, -*fam.mirror_constant - u, alg);
}

PositiveEndo compose_negative(const NegativeEndo& f, const NegativeEndo& g) {
    require_same(f.algebra, g.algebra);
    const Algebra& alg = f.algebra;
    PositiveEndo r{alg, g.alpha / f.alpha, f.u - g.v, f.b * g.c * int_pow(f.alpha, g.v) * int_pow(alg.q(), -g.v)};
    if (!int_pow(r.alpha, alg.t()).is_one())
        throw std::logic_error("composite of negative endomorphisms has alpha outside U_t");
    return r;
}

NegativeEndo invert_negative(const NegativeEndo& f) {
    const FieldElement& q = f.algebra.q();
    return NegativeEndo{f.algebra,
                        f.alpha,
                        int_pow(q, f.v) * f.c.inverse() * int_pow(f.alpha, -f.v),
                        int_pow(q, f.u) * f.b.inverse() * int_pow(f.alpha, -f.u),
                        f.v,
                        f.u};
}

// ---------------------------------------------------------------------------
// General composition

GeneralImages compose_by_substitution(const GeneralImages& f, const GeneralImages& g) {
    auto unit = f.h_unit();
    if (!unit) throw PreconditionError("outer map must send h to a unit");
    return {apply_images(*unit, f.x, f.y, g.h), apply_images(*unit, f.x, f.y, g.x), apply_images(*unit, f.x, f.y, g.y)};
}

Endomorphism compose_general(const Endomorphism& f, const Endomorphism& g) {
    require_same(algebra_of(f), algebra_of(g));
    if (auto fp = std::get_if<PositiveEndo>(&f))
        if (auto gp = std::get_if<PositiveEndo>(&g)) return compose_positive(*fp, *gp);
    if (auto fn = std::get_if<NegativeEndo>(&f))
        if (auto gn = std::get_if<NegativeEndo>(&g)) return compose_negative(*fn, *gn);
    return classify(compose_by_substitution(images(f), images(g)));
}

Endomorphism invert(const Endomorphism& f) {
    if (auto p = std::get_if<PositiveEndo>(&f)) return invert_positive(*p);
    if (auto n = std::get_if<NegativeEndo>(&f)) return invert_negative(*n);
    throw PreconditionError("zero type endomorphisms are not injective and have no inverse");
}

std::optional<NegativeEndo> involution_search(const Algebra& alg) {
    // psi^2 = psi_(1, u-v, bc alpha^v q^-v), so psi is an involution iff u = v and bc alpha^v q^-v = 1.
    if ((alg.degree() + alg.valuation()) % 2 != 0) return std::nullopt;
    NegativeFamily fam = solve_negative(alg);
    if (!fam.exists) return std::nullopt;
    const int v = -*fam.mirror_constant / 2;
    for (std::size_t i = 0; i < fam.alphas.size(); ++i) {
        const auto& sol = fam.alphas[i];
        if ((sol.bc * int_pow(sol.alpha, v) * int_pow(alg.q(), -v)).is_one())
            return family_member(alg, fam, i, alg.field().one(), v);
    }
    return std::nullopt;
}

bool is_injective(const Endomorphism& f) { return !std::holds_alternative<ZeroEndo>(f); }

std::string to_string(const PositiveEndo& f) {
    return "positive type, α=" + to_string(f.alpha) + ", n=" + std::to_string(f.n) + ", b=" + to_string(f.b);
}

std::string to_string(const ZeroEndo& f) { return "zero type, α=" + to_string(f.alpha); }

std::string to_string(const NegativeEndo& f) {
    return "negative type, α=" + to_string(f.alpha) + ", b=" + to_string(f.b) + ", c=" + to_string(f.c) +
           ", u=" + std::to_string(f.u) + ", v=" + std::to_string(f.v);
}

std::string to_string(const Endomorphism& f) {
    return std::visit([](const auto& e) { return to_string(e); }, f);
}

}  // namespace qgwa
