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

// qgwa: classify endomorphisms of quantum generalized Weyl algebras A(a(h), q).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "qgwa/endo.hpp"
#include "qgwa/errors.hpp"
#include "qgwa/parser.hpp"
#include "qgwa/presets.hpp"
#include "qgwa/report.hpp"

using namespace qgwa;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Options {
    std::string a;
    std::string q = "q";
    std::optional<int> order;
    bool as_json = false;
    std::optional<std::uint64_t> seed;
    std::string images, f_images, g_images;
    std::string preset_name;
    std::optional<std::string> preset_param;
};

Algebra load_algebra(const Options& o) {
    int order = 1;
    if (o.order) {
        order = *o.order;
    } else if (mentions_symbol(o.a, 'z') || mentions_symbol(o.q, 'z')) {
        throw PreconditionError("expressions using z need an explicit --N");
    } else {
        // Default order is t, so that U_t lies in the coefficient field.
        LaurentPoly probe = parse_laurent(o.a, Field(1));
        if (!probe.is_zero() && !probe.is_monomial()) order = gcd_exponent_t(probe);
    }
    if (order < 1) throw PreconditionError("--N must be a positive integer");
    Field field(order);
    return Algebra(parse_laurent(o.a, field), parse_scalar(o.q, field));
}

json endo_json(const Endomorphism& f) {
    json j;
    std::visit(
        [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, PositiveEndo>) {
                j = {{"type", "positive"}, {"alpha", to_string(e.alpha)}, {"n", e.n}, {"b", to_string(e.b)}};
            } else if constexpr (std::is_same_v<T, ZeroEndo>) {
                j = {{"type", "zero"}, {"alpha", to_string(e.alpha)}};
            } else {
                j = {{"type", "negative"}, {"alpha", to_string(e.alpha)}, {"b", to_string(e.b)},
                     {"c", to_string(e.c)},  {"u", e.u},                  {"v", e.v}};
            }
        },
        f);
    j["injective"] = is_injective(f);
    auto imgs = images(f);
    j["images"] = {{"h", to_string(imgs.h)}, {"x", to_string(imgs.x)}, {"y", to_string(imgs.y)}};
    return j;
}

std::string endo_line(const Endomorphism& f) {
    return to_string(f) + (is_injective(f) ? ", automorphism" : ", not injective");
}

json negative_json(const NegativeFamily& fam) {
    json j;
    j["exists"] = fam.exists;
    j["resolved"] = fam.resolved();
    j["u_plus_v"] = fam.mirror_constant ? json(-*fam.mirror_constant) : json(nullptr);
    json sols = json::array();
    for (const auto& s : fam.alphas) sols.push_back({{"alpha", to_string(s.alpha)}, {"bc", to_string(s.bc)}});
    j["solutions"] = sols;
    j["residual"] = fam.residual ? json{{"g", fam.residual->g}, {"value", to_string(fam.residual->value)}}
                                 : json(nullptr);
    j["reason"] = fam.reason;
    return j;
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_describe(const Options& o) {
    Algebra alg = load_algebra(o);
    ClassificationReport report = describe(alg);
    json j = to_json(report);
    std::string text = to_text(report);
    if (o.seed) {
        SampleCheck check = sample_families(report, *o.seed);
        j["sample_checks"] = to_json(check);
        text += "sample checks (seed " + std::to_string(check.seed) + "): positive " +
                std::to_string(check.positive_checked) + ", negative " + std::to_string(check.negative_checked) +
                ", zero " + std::to_string(check.zero_checked) + ", failures " + std::to_string(check.failures) + "\n";
    }
    emit(o, j, text);
    return 0;
}

int run_verify(const Options& o) {
    Algebra alg = load_algebra(o);
    bool ok = verify(parse_images(o.images, alg));
    emit(o, json{{"endomorphism", ok}}, ok ? "endomorphism: yes\n" : "endomorphism: no\n");
    return 0;
}

int run_classify(const Options& o) {
    Algebra alg = load_algebra(o);
    Endomorphism f = classify(parse_images(o.images, alg));
    emit(o, endo_json(f), endo_line(f) + "\n");
    return 0;
}

int run_compose(const Options& o) {
    Algebra alg = load_algebra(o);
    Endomorphism f = classify(parse_images(o.f_images, alg));
    Endomorphism g = classify(parse_images(o.g_images, alg));
    Endomorphism fg = compose_general(f, g);
    emit(o, endo_json(fg), endo_line(fg) + "\n");
    return 0;
}

int run_invert(const Options& o) {
    Algebra alg = load_algebra(o);
    Endomorphism f = classify(parse_images(o.images, alg));
    Endomorphism inv = invert(f);
    emit(o, endo_json(inv), endo_line(inv) + "\n");
    return 0;
}

int run_solve_negative(const Options& o) {
    Algebra alg = load_algebra(o);
    NegativeFamily fam = solve_negative(alg);
    std::string text;
    if (fam.exists) {
        text = "negative type endomorphisms with u+v = " + std::to_string(-*fam.mirror_constant) + ":\n";
        for (const auto& s : fam.alphas) text += "  α = " + to_string(s.alpha) + ", bc = " + to_string(s.bc) + "\n";
    } else if (!fam.resolved()) {
        text = "undecided: " + fam.reason + "\n";
    } else {
        text = "no negative type endomorphisms (" + fam.reason + ")\n";
    }
    emit(o, negative_json(fam), text);
    return 0;
}

int run_zero_locus(const Options& o) {
    Algebra alg = load_algebra(o);
    ZeroLocus locus = zero_type_locus(alg);
    json pts = json::array();
    std::string list;
    for (const auto& p : locus.points) {
        pts.push_back(to_string(p));
        list += (list.empty() ? "" : ", ") + to_string(p);
    }
    emit(o, json{{"gcd", to_string(locus.gcd)}, {"degree", locus.gcd.degree()}, {"points", pts}},
         "gcd(a(h), a(qh)) = " + to_string(locus.gcd) + "\npoints: " + (list.empty() ? "none" : list) + "\n");
    return 0;
}

int run_involution(const Options& o) {
    Algebra alg = load_algebra(o);
    auto inv = involution_search(alg);
    if (inv)
        emit(o, endo_json(*inv), "involution: " + to_string(*inv) + "\n");
    else
        emit(o, json{{"involution", nullptr}}, "no involution\n");
    return 0;
}

int run_preset(const Options& o) {
    Preset p = preset_by_name(o.preset_name, o.preset_param, o.order.value_or(1));
    ClassificationReport report = describe(p.algebra);
    auto mismatches = check_preset(p, report);
    json j = to_json(report);
    j["preset"] = p.name;
    j["expectations_hold"] = mismatches.empty();
    j["mismatches"] = mismatches;
    std::string text = "preset: " + p.name + "\n" + to_text(report);
    text += mismatches.empty() ? "expectations: all hold\n" : "expectations: FAILED\n";
    for (const auto& m : mismatches) text += "  " + m + "\n";
    emit(o, j, text);
    return mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Endomorphisms and automorphisms of quantum generalized Weyl algebras A(a(h), q)"};
    app.require_subcommand(1);
    Options o;

    auto algebra_flags = [&](CLI::App* sub) {
        sub->add_option("--a", o.a, "Laurent polynomial a(h), e.g. \"h + h^-1\"")->required();
        sub->add_option("--q", o.q, "commutation scalar (default q)");
        sub->add_option("--N", o.order, "cyclotomic order of the coefficient field (default: t of a)");
        sub->add_flag("--json", o.as_json, "machine-readable output");
        sub->add_option("--seed", o.seed, "seed for sampled family checks");
    };

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Options&);
        CLI::App* app = nullptr;
    };
    Command commands[] = {
        {"describe", "full classification of End(A) and Aut(A)", run_describe},
        {"verify", "check candidate generator images against the defining relations", run_verify},
        {"classify", "identify the type and parameters of an endomorphism", run_classify},
        {"compose", "compose two endomorphisms f o g", run_compose},
        {"invert", "invert an automorphism", run_invert},
        {"solve-negative", "solve for negative type endomorphisms", run_solve_negative},
        {"zero-locus", "common roots of a(h) and a(qh)", run_zero_locus},
        {"involution", "search for an involution", run_involution},
    };
    for (auto& c : commands) {
        c.app = app.add_subcommand(c.name, c.help);
        algebra_flags(c.app);
    }
    for (const char* name : {"verify", "classify", "invert"})
        app.get_subcommand(name)->add_option("--images", o.images, "e.g. \"h->1; x->0; y->0\"")->required();
    auto* compose = app.get_subcommand("compose");
    compose->add_option("--f", o.f_images, "images of the outer map")->required();
    compose->add_option("--g", o.g_images, "images of the inner map")->required();

    auto* preset = app.add_subcommand("preset", "classify a named example algebra (so5, symmetric, zero-type)");
    preset->add_option("name", o.preset_name, "preset name")->required();
    preset->add_option("--param", o.preset_param, "alpha0 for so5, lambda for symmetric");
    preset->add_option("--N", o.order, "cyclotomic order of the coefficient field");
    preset->add_flag("--json", o.as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (preset->parsed()) return run_preset(o);
        for (const auto& c : commands)
            if (c.app->parsed()) return c.run(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
