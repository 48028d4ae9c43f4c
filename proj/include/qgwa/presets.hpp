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

#ifndef QGWA_PRESETS_HPP
#define QGWA_PRESETS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qgwa/report.hpp"

namespace qgwa {

/// Assertions a preset makes about describe(); unset fields are not checked.
struct PresetExpectations {
    std::optional<int> t;
    std::optional<bool> all_endos_are_autos;
    std::optional<bool> negative_exists;
    std::optional<std::size_t> negative_solution_count;
    std::optional<bool> has_involution;
    std::optional<Split> split;
    std::optional<std::vector<FieldElement>> zero_points;
};

struct Preset {
    std::string name;
    Algebra algebra;
    PresetExpectations expected;
};

/*
 * The so_5 quotient A_{alpha0,q} on its GWA side: a(h) = h^-1/(1-q^4) - alpha0/(q^2-1)
 * with commutation scalar q^2. Every endomorphism is an automorphism; there are
 * negative-type maps but no involution (d + e is odd).
 */
Preset preset_so5(const FieldElement& alpha0);

/// a(h) = h + h^-1 + lambda with commutation scalar q.
Preset preset_symmetric(const FieldElement& lambda);

/// a(h) = (h - 1)(h - q): the common root 1 gives the zero-type map h -> 1.
Preset preset_zero_type(const Field& field = Field(1));

/// Mismatches between the preset's expectations and the report; empty when all hold.
std::vector<std::string> check_preset(const Preset& preset, const ClassificationReport& report);

/// "so5", "symmetric" or "zero-type"; `parameter` is alpha0 or lambda (defaults 1 and 0).
Preset preset_by_name(const std::string& name, const std::optional<std::string>& parameter, int cyclotomic_order = 1);

std::vector<std::string> preset_names();

/*
 * Checks candidate images of e_1, e_2, e_3 in the GWA against the four relations
 *   e1 e3 = q^-2 e3 e1
 *   e2 e3 = q^2 e3 e2 + alpha0
 *   e2 e1 = q^-2 e1 e2 - q^-2 e3
 *   e2^2 + (q^4-1) e3 e1 e2 + alpha0 q^2 (q^2+1) e1 = 0
 * where q is the field indeterminate. Element i of the result is relation i + 1.
 */
std::array<bool, 4> check_so5_relations(const GWAElement& e1, const GWAElement& e2, const GWAElement& e3,
                                        const FieldElement& alpha0);

}  // namespace qgwa

#endif  // QGWA_PRESETS_HPP
