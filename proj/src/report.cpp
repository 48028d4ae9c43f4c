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

#include "qgwa/report.hpp"

#include <future>
#include <random>
#include <sstream>

namespace qgwa {

std::string to_string(Split s) {
    switch (s) {
        case Split::Yes: return "yes";
        case Split::No: return "no";
        case Split::Unknown: return "unknown";
        case Split::NotApplicable: return "not applicable";
    }
    return "unknown";
}

ClassificationReport describe(const Algebra& alg) {
    auto zero = std::async(std::launch::async, [&] { return zero_type_locus(alg); });
    auto negative = std::async(std::launch::async, [&] { return solve_negative(alg); });

    ClassificationReport r{alg,
                           alg.t(),
                           "units of A are the units of K[h^{+-1}]: nonzero multiples of h^k",
                           roots_of_unity(alg.t(), alg.field()),
                           zero.get(),
                           negative.get(),
                           {},
                           false};

    const NegativeFamily& fam = r.negative_family;
    if (fam.exists) {
        r.aut_group.z2_extension = true;
        r.aut_group.involution = involution_search(alg);
        if (r.aut_group.involution)
            r.aut_group.split = Split::Yes;
        else if ((alg.degree() + alg.valuation()) % 2 != 0 || fam.resolved())
            r.aut_group.split = Split::No;
        else
            r.aut_group.split = Split::Unknown;
    } else if (fam.resolved()) {
        r.aut_group.z2_extension = false;
    } else {
        r.aut_group.split = Split::Unknown;
    }
    r.all_endos_are_autos = r.zero_locus.gcd.degree() == 0;
    return r;
}

SampleCheck sample_families(const ClassificationReport& report, std::uint64_t seed, int per_family) {
    const Algebra& alg = report.algebra;
    const Field& field = alg.field();
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto scalar = [&] {
        int num = pick(1, 9) * (pick(0, 1) ? 1 : -1);
        return field.rational(Rational(num, pick(1, 5))) * int_pow(field.q(), pick(-2, 2));
    };

    SampleCheck out{seed};
    auto record = [&](const Endomorphism& f, int& counter) {
        ++counter;
        bool ok = verify(images(f));
        if (ok && is_injective(f)) {
            auto id = identity(alg);
            ok = compose_general(f, invert(f)) == Endomorphism(id) && compose_general(invert(f), f) == Endomorphism(id);
        }
        if (!ok) ++out.failures;
    };

    for (int i = 0; i < per_family; ++i) {
        const auto& alpha = report.roots_of_unity[static_cast<std::size_t>(pick(0, static_cast<int>(report.roots_of_unity.size()) - 1))];
        record(make_positive(alpha, pick(-4, 4), scalar(), alg), out.positive_checked);
    }
    const auto& fam = report.negative_family;
    if (fam.exists)
        for (int i = 0; i < per_family; ++i) {
            std::size_t idx = static_cast<std::size_t>(pick(0, static_cast<int>(fam.alphas.size()) - 1));
            record(family_member(alg, fam, idx, scalar(), pick(-4, 4)), out.negative_checked);
        }
    for (const auto& p : report.zero_locus.points) record(make_zero(p, alg), out.zero_checked);
    return out;
}

namespace {

nlohmann::ordered_json strings(const std::vector<FieldElement>& xs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const ClassificationReport& r) {
    using json = nlohmann::ordered_json;
    const Algebra& alg = r.algebra;
    const NegativeFamily& fam = r.negative_family;

    json out;
    out["algebra"] = {{"a", to_string(alg.a())},
                      {"q", to_string(alg.q())},
                      {"cyclotomic_order", alg.field().cyclotomic_order()},
                      {"degree", alg.degree()},
                      {"valuation", alg.valuation()},
                      {"support", alg.support()}};
    out["t"] = r.t;
    out["unit_group_note"] = r.unit_group_note;
    out["positive_family"] = {{"structure", "(U_t x K^*) x| Z"},
                              {"roots_of_unity", strings(r.roots_of_unity)},
                              {"roots_of_unity_complete", static_cast<int>(r.roots_of_unity.size()) == r.t},
                              {"images", {{"h", "alpha*h"}, {"x", "b*h^n*x"}, {"y", "y*h^-n*alpha^d*b^-1"}}}};
    out["zero_locus"] = {{"gcd", to_string(r.zero_locus.gcd)},
                         {"degree", r.zero_locus.gcd.degree()},
                         {"points", strings(r.zero_locus.points)}};

    json neg;
    neg["exists"] = fam.exists;
    neg["resolved"] = fam.resolved();
    neg["mirror_constant"] = fam.mirror_constant ? json(*fam.mirror_constant) : json(nullptr);
    neg["u_plus_v"] = fam.mirror_constant ? json(-*fam.mirror_constant) : json(nullptr);
    json sols = json::array();
    for (const auto& s : fam.alphas) sols.push_back({{"alpha", to_string(s.alpha)}, {"bc", to_string(s.bc)}});
    neg["solutions"] = sols;
    neg["residual"] = fam.residual ? json{{"g", fam.residual->g}, {"value", to_string(fam.residual->value)}}
                                   : json(nullptr);
    neg["reason"] = fam.reason;
    out["negative_family"] = neg;

    const auto& ag = r.aut_group;
    json aut;
    if (!ag.z2_extension)
        aut["structure"] = "undecided";
    else
        aut["structure"] = *ag.z2_extension ? "1 -> End_+ -> Aut(A) -> Z/2 -> 1" : "Aut(A) = End_+";
    aut["split"] = to_string(ag.split);
    aut["involution"] = ag.involution ? json(to_string(*ag.involution)) : json(nullptr);
    out["aut_group"] = aut;
    out["all_endos_are_autos"] = r.all_endos_are_autos;
    return out;
}

nlohmann::ordered_json to_json(const SampleCheck& c) {
    return {{"seed", c.seed},
            {"positive_checked", c.positive_checked},
            {"negative_checked", c.negative_checked},
            {"zero_checked", c.zero_checked},
            {"failures", c.failures}};
}

namespace {

std::string join(const std::vector<FieldElement>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
    return s;
}

}  // namespace

std::string to_text(const ClassificationReport& r) {
    const Algebra& alg = r.algebra;
    const NegativeFamily& fam = r.negative_family;
    std::ostringstream os;
    os << "algebra: A(a(h), " << to_string(alg.q()) << ") with a(h) = " << to_string(alg.a()) << "\n";
    os << "coefficient field: Q(zeta_" << alg.field().cyclotomic_order() << ")(q)\n";
    os << "support: [";
    for (std::size_t i = 0; i < alg.support().size(); ++i) os << (i ? ", " : "") << alg.support()[i];
    os << "]  d = " << alg.degree() << "  e = " << alg.valuation() << "  t = " << r.t << "\n";
    os << "units: " << r.unit_group_note << "\n";
    os << "positive type: α in U_" << r.t << " = {" << join(r.roots_of_unity) << "}";
    if (static_cast<int>(r.roots_of_unity.size()) != r.t) os << " (field holds only part of U_" << r.t << ")";
    os << ", n in Z, b in K^*; End_+ = (U_" << r.t << " x K^*) x| Z\n";

    os << "zero type: gcd(a(h), a(qh)) = " << to_string(r.zero_locus.gcd);
    if (r.zero_locus.gcd.degree() == 0)
        os << "; no zero type endomorphisms\n";
    else if (r.zero_locus.points.empty())
        os << "; no certified points\n";
    else
        os << "; α in {" << join(r.zero_locus.points) << "} (not injective)\n";

    os << "negative type: ";
    if (!fam.mirror_constant) {
        os << "no negative type endomorphisms (" << fam.reason << ")\n";
    } else if (!fam.resolved()) {
        os << "u+v = " << -*fam.mirror_constant << "; " << fam.reason << "\n";
    } else if (!fam.exists) {
        os << "no negative type endomorphisms (" << fam.reason << ")\n";
    } else {
        os << "u+v = " << -*fam.mirror_constant;
        for (const auto& s : fam.alphas) os << "; α = " << to_string(s.alpha) << ", bc = " << to_string(s.bc);
        os << "\n";
    }

    const auto& ag = r.aut_group;
    os << "involution: " << (ag.involution ? to_string(*ag.involution) : std::string("none")) << "\n";
    os << "Aut(A): ";
    if (!ag.z2_extension)
        os << "undecided";
    else if (*ag.z2_extension)
        os << "1 -> End_+ -> Aut(A) -> Z/2 -> 1, split: " << to_string(ag.split);
    else
        os << "Aut(A) = End_+";
    os << "\n";
    os << "every endomorphism is an automorphism: " << (r.all_endos_are_autos ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace qgwa
