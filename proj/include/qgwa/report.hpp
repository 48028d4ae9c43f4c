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

#ifndef QGWA_REPORT_HPP
#define QGWA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgwa/endo.hpp"

namespace qgwa {

enum class Split { Yes, No, Unknown, NotApplicable };

std::string to_string(Split s);

struct AutGroupStatus {
    /// true: 1 -> End_+ -> Aut(A) -> Z/2 -> 1; false: Aut(A) = End_+; unset if undecided.
    std::optional<bool> z2_extension;
    Split split = Split::NotApplicable;
    std::optional<NegativeEndo> involution;
};

/*
 * End(A) is the disjoint union of the positive family (indexed by U_t x Z x K^*),
 * the zero-type maps (indexed by common roots of a(h) and a(qh)) and the negative
 * family. Only the positive and negative maps are automorphisms.
 */
struct ClassificationReport {
    Algebra algebra;
    int t;
    std::string unit_group_note;
    std::vector<FieldElement> roots_of_unity;  // U_t inside K
    ZeroLocus zero_locus;
    NegativeFamily negative_family;
    AutGroupStatus aut_group;
    bool all_endos_are_autos;
};

/// Runs the positive, zero and negative sub-solvers (concurrently) and assembles the report.
ClassificationReport describe(const Algebra& alg);

/// Randomly sampled family members re-checked against the defining relations.
struct SampleCheck {
    std::uint64_t seed;
    int positive_checked = 0;
    int negative_checked = 0;
    int zero_checked = 0;
    int failures = 0;
};

SampleCheck sample_families(const ClassificationReport& report, std::uint64_t seed, int per_family = 8);

nlohmann::ordered_json to_json(const ClassificationReport& report);
nlohmann::ordered_json to_json(const SampleCheck& check);
std::string to_text(const ClassificationReport& report);

}  // namespace qgwa

#endif  // QGWA_REPORT_HPP
