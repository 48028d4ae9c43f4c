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

#ifndef QGWA_ENDO_HPP
#define QGWA_ENDO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgwa/gwa.hpp"

namespace qgwa {

/*
 * Endomorphisms of A(a(h),q) are stored by their parameters; images are derived.
 * Every endomorphism sends h to a unit alpha*h^i, and i is 1, 0 or -1:
 *
 *   positive  (alpha, n, b):        h -> alpha h,    x -> b h^n x,   y -> y h^-n alpha^d b^-1
 *   zero      (alpha):              h -> alpha,      x -> 0,         y -> 0
 *   negative  (alpha, b, c, u, v):  h -> alpha h^-1, x -> y c h^v,   y -> b h^u x
 *
 * with alpha^t = 1 for positive type, a(alpha) = a(q alpha) = 0 for zero type and
 * b c h^{u+v} a(qh) = a(alpha h^-1) for negative type.
 */
struct PositiveEndo {
    Algebra algebra;
    FieldElement alpha;
    int n;
    FieldElement b;
};

struct ZeroEndo {
    Algebra algebra;
    FieldElement alpha;
};

struct NegativeEndo {
    Algebra algebra;
    FieldElement alpha;
    FieldElement b;
    FieldElement c;
    int u;
    int v;
};

using Endomorphism = std::variant<PositiveEndo, ZeroEndo, NegativeEndo>;

bool operator==(const PositiveEndo& l, const PositiveEndo& r);
bool operator==(const ZeroEndo& l, const ZeroEndo& r);
bool operator==(const NegativeEndo& l, const NegativeEndo& r);

const Algebra& algebra_of(const Endomorphism& f);

/// Raw images of the generators h, x, y. The h image must be a unit for verify to succeed.
struct GeneralImages {
    GWAElement h;
    GWAElement x;
    GWAElement y;

    /// alpha*h^i when the h image is a nonzero Laurent monomial.
    std::optional<HImage> h_unit() const;
};

GeneralImages images(const PositiveEndo& f);
GeneralImages images(const ZeroEndo& f);
GeneralImages images(const NegativeEndo& f);
GeneralImages images(const Endomorphism& f);

/// True iff the images satisfy every defining relation exactly.
bool verify(const GeneralImages& imgs);

/// Matches verified images against the three canonical forms.
/// Throws NotAnEndomorphism if verify fails.
Endomorphism classify(const GeneralImages& imgs);

PositiveEndo identity(const Algebra& alg);
PositiveEndo make_positive(const FieldElement& alpha, int n, const FieldElement& b, const Algebra& alg);
PositiveEndo compose_positive(const PositiveEndo& f, const PositiveEndo& g);
PositiveEndo invert_positive(const PositiveEndo& f);

struct ZeroLocus {
    LaurentPoly gcd;                   // monic gcd(a(h), a(qh)), valuation 0
    std::vector<FieldElement> points;  // certified alpha with a(alpha) = a(q alpha) = 0
};

ZeroLocus zero_type_locus(const Algebra& alg);
ZeroEndo make_zero(const FieldElement& alpha, const Algebra& alg);

/// b c h^w a(qh) - a(alpha h^-1); zero exactly when the negative-type relation holds.
LaurentPoly negative_relation_residual(const Algebra& alg, const FieldElement& alpha, const FieldElement& bc, int w);

/// One admissible (alpha, bc) pair of the negative family.
struct NegativeSolution {
    FieldElement alpha;
    FieldElement bc;
};

/// Unresolved root extraction alpha^g = value.
struct ResidualConstraint {
    int g;
    FieldElement value;
};

/*
 * All negative-type endomorphisms: u + v = -mirror_constant is forced, and for each
 * listed (alpha, bc) every b != 0 and u give a member with c = bc/b, v = -s - u.
 */
struct NegativeFamily {
    bool exists = false;
    std::optional<int> mirror_constant;
    std::vector<NegativeSolution> alphas;
    std::optional<ResidualConstraint> residual;
    std::string reason;

    bool resolved() const noexcept { return !residual.has_value(); }
};

NegativeFamily solve_negative(const Algebra& alg);

/// Returns bc when alpha admits a negative-type endomorphism, else std::nullopt.
std::optional<FieldElement> check_negative_candidate(const Algebra& alg, const FieldElement& alpha);

NegativeEndo make_negative(const FieldElement& alpha, const FieldElement& b, const FieldElement& c, int u, int v,
                           const Algebra& alg);
/// Family member with the given b and u.
NegativeEndo family_member(const Algebra& alg, const NegativeFamily& fam, std::size_t index, const FieldElement& b,
                           int u);
PositiveEndo compose_negative(const NegativeEndo& f, const NegativeEndo& g);
NegativeEndo invert_negative(const NegativeEndo& f);

/// Images of f o g, computed by substituting g's images into f.
GeneralImages compose_by_substitution(const GeneralImages& f, const GeneralImages& g);
Endomorphism compose_general(const Endomorphism& f, const Endomorphism& g);
/// Inverse of a positive or negative endomorphism; zero type throws PreconditionError.
Endomorphism invert(const Endomorphism& f);

std::optional<NegativeEndo> involution_search(const Algebra& alg);

bool is_injective(const Endomorphism& f);

/// "positive type, α=-1, n=3, b=q" and similar.
std::string to_string(const PositiveEndo& f);
std::string to_string(const ZeroEndo& f);
std::string to_string(const NegativeEndo& f);
std::string to_string(const Endomorphism& f);

}  // namespace qgwa

#endif  // QGWA_ENDO_HPP
