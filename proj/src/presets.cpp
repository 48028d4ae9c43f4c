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

#include "qgwa/presets.hpp"

#include "qgwa/errors.hpp"
#include "qgwa/parser.hpp"

namespace qgwa {

Preset preset_so5(const FieldElement& alpha0) {
    if (alpha0.is_zero()) throw ZeroAlpha("A_{alpha,q} needs alpha != 0");
    const Field& field = alpha0.field();
    const FieldElement q = field.q();
    const FieldElement one = field.one();
    const FieldElement q2 = q * q;
    LaurentPoly a = LaurentPoly::monomial(one / (one - q2 * q2), -1) + LaurentPoly::constant(-alpha0 / (q2 - one));

    PresetExpectations ex;
    ex.t = 1;
    ex.all_endos_are_autos = true;
    ex.negative_exists = true;
    ex.negative_solution_count = 1;
    ex.has_involution = false;
    ex.split = Split::No;
    ex.zero_points = std::vector<FieldElement>{};
    return Preset{"so5", Algebra(std::move(a), q2), std::move(ex)};
}

Preset preset_symmetric(const FieldElement& lambda) {
    const Field& field = lambda.field();
    LaurentPoly a = LaurentPoly::h_power(field, 1) + LaurentPoly::h_power(field, -1) + LaurentPoly::constant(lambda);
    PresetExpectations ex;
    ex.all_endos_are_autos = true;
    if (lambda.is_zero()) {
        ex.t = 2;
        ex.negative_exists = true;
        ex.has_involution = true;
        ex.split = Split::Yes;
    } else {
        ex.t = 1;
    }
    return Preset{"symmetric", Algebra(std::move(a), field.q()), std::move(ex)};
}

Preset preset_zero_type(const Field& field) {
    const LaurentPoly h = LaurentPoly::h_power(field, 1);
    LaurentPoly a = (h - LaurentPoly::constant(field.one())) * (h - LaurentPoly::constant(field.q()));
    PresetExpectations ex;
    ex.all_endos_are_autos = false;
    ex.zero_points = std::vector<FieldElement>{field.one()};
    return Preset{"zero-type", Algebra(std::move(a), field.q()), std::move(ex)};
}

std::vector<std::string> check_preset(const Preset& preset, const ClassificationReport& report) {
    const PresetExpectations& ex = preset.expected;
    std::vector<std::string> bad;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(preset.name + ": expected " + what);
    };
    if (ex.t) expect(report.t == *ex.t, "t = " + std::to_string(*ex.t));
    if (ex.all_endos_are_autos)
        expect(report.all_endos_are_autos == *ex.all_endos_are_autos,
               std::string("all_endos_are_autos = ") + (*ex.all_endos_are_autos ? "true" : "false"));
    if (ex.negative_exists)
        expect(report.negative_family.exists == *ex.negative_exists,
               std::string("negative family ") + (*ex.negative_exists ? "nonempty" : "empty"));
    if (ex.negative_solution_count)
        expect(report.negative_family.alphas.size() == *ex.negative_solution_count,
               std::to_string(*ex.negative_solution_count) + " negative-type alpha values");
    if (ex.has_involution)
        expect(report.aut_group.involution.has_value() == *ex.has_involution,
               std::string(*ex.has_involution ? "an" : "no") + " involution");
    if (ex.split) expect(report.aut_group.split == *ex.split, "split = " + to_string(*ex.split));
    if (ex.zero_points) expect(report.zero_locus.points == *ex.zero_points, "the listed zero-type points");
    return bad;
}

Preset preset_by_name(const std::string& name, const std::optional<std::string>& parameter, int cyclotomic_order) {
    Field field(cyclotomic_order);
    if (name == "so5") return preset_so5(parse_scalar(parameter.value_or("1"), field));
    if (name == "symmetric") return preset_symmetric(parse_scalar(parameter.value_or("0"), field));
    if (name == "zero-type") return preset_zero_type(field);
    throw PreconditionError("unknown preset '" + name + "' (expected so5, symmetric or zero-type)");
}

std::vector<std::string> preset_names() { return {"so5", "symmetric", "zero-type"}; }

std::array<bool, 4> check_so5_relations(const GWAElement& e1, const GWAElement& e2, const GWAElement& e3,
                                        const FieldElement& alpha0) {
    const Algebra& alg = e1.algebra();
    const Field& field = alg.field();
    const FieldElement q = field.q();
    const FieldElement one = field.one();
    const FieldElement q2 = q * q;
    const FieldElement qm2 = q2.inverse();
    const GWAElement zero(alg);
    return {
        e1 * e3 == qm2 * (e3 * e1),
        e2 * e3 == q2 * (e3 * e2) + GWAElement::scalar(alg, alpha0),
        e2 * e1 == qm2 * (e1 * e2) - qm2 * e3,
        e2 * e2 + (q2 * q2 - one) * (e3 * e1 * e2) + (alpha0 * q2 * (q2 + one)) * e1 == zero,
    };
}

}  // namespace qgwa
