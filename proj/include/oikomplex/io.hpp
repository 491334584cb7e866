// Copyright 2026 The oikomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OIKOMPLEX_IO_HPP
#define OIKOMPLEX_IO_HPP

// JSON forms of morphisms, width complexes, decompositions, complex specs
// and verification reports.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "complexes.hpp"
#include "error.hpp"
#include "free_mod.hpp"
#include "multilinear.hpp"
#include "oi_algebra.hpp"
#include "verify.hpp"

namespace oikomplex::io {

using json = nlohmann::json;

/// CLI form of a signature, "1,1,1" or "1:2,1:2" when degrees are set.
inline std::string signature_text(const AlgebraSignature &sig)
{
    std::string s;
    for (std::size_t k = 0; k < sig.factor_widths.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(sig.factor_widths[k]);
        if (!sig.variable_degrees.empty()) s += ":" + std::to_string(sig.variable_degrees[k]);
    }
    return s;
}

inline json generators_json(const FreeOIModule &M)
{
    json out = json::array();
    for (const auto &g : M.generators()) out.push_back({g.width, g.shift});
    return out;
}

inline json to_json(const ModuleMorphism &phi)
{
    json images = json::array();
    for (const auto &img : phi.images()) {
        json terms = json::array();
        for (const auto &[key, p] : img.coords) terms.push_back({{"key", key.to_string()}, {"poly", p.to_string()}});
        images.push_back(std::move(terms));
    }
    return {{"algebra", signature_text(phi.domain().algebra())},
            {"domain", generators_json(phi.domain())},
            {"codomain", generators_json(phi.codomain())},
            {"images", std::move(images)}};
}

namespace detail {

inline const json &field(const json &j, const char *name, const std::string &where)
{
    if (!j.is_object() || !j.contains(name)) throw parse_error(std::string("missing field '") + name + "'", where);
    return j.at(name);
}

inline int int_at(const json &j, const std::string &where)
{
    if (!j.is_number_integer()) throw parse_error("expected an integer", where);
    return j.get<int>();
}

inline std::string string_at(const json &j, const std::string &where)
{
    if (!j.is_string()) throw parse_error("expected a string", where);
    return j.get<std::string>();
}

inline FreeOIModule module_from_json(const json &j, const AlgebraSignature &sig, const std::string &where, char label)
{
    if (!j.is_array()) throw parse_error("expected a list of [width, shift] pairs", where);
    std::vector<Generator> gens;
    for (std::size_t k = 0; k < j.size(); ++k) {
        auto at = where + "[" + std::to_string(k) + "]";
        const auto &g = j[k];
        if (!g.is_array() || g.empty() || g.size() > 2) throw parse_error("expected [width, shift]", at);
        Generator gen{int_at(g[0], at + "[0]"), g.size() == 2 ? int_at(g[1], at + "[1]") : 0,
                      std::string(1, label) + std::to_string(k + 1)};
        if (gen.width < 0) throw parse_error("negative generator width", at);
        gens.push_back(std::move(gen));
    }
    return {sig, std::move(gens)};
}

/// Line number (1-based) of a byte offset.
inline std::size_t line_of(const std::string &text, std::size_t byte)
{
    std::size_t line = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k)
        if (text[k] == '\n') ++line;
    return line;
}

} // namespace detail

/// Morphism from its JSON form; if `expected` is given the file's algebra must match it.
inline ModuleMorphism morphism_from_json(const json &j, const std::optional<AlgebraSignature> &expected = std::nullopt)
{
    AlgebraSignature sig;
    if (j.is_object() && j.contains("algebra")) sig = AlgebraSignature::parse(detail::string_at(j["algebra"], "algebra"));
    else if (expected) sig = *expected;
    else throw parse_error("missing field 'algebra'", "morphism");
    if (expected && !(*expected == sig))
        throw algebra_mismatch("morphism is over " + sig.to_string() + " but " + expected->to_string() + " was requested");

    auto dom = detail::module_from_json(detail::field(j, "domain", "morphism"), sig, "domain", 'f');
    auto cod = detail::module_from_json(detail::field(j, "codomain", "morphism"), sig, "codomain", 'g');
    const auto &imgs = detail::field(j, "images", "morphism");
    if (!imgs.is_array() || static_cast<int>(imgs.size()) != dom.rank())
        throw parse_error("expected one image per domain generator (" + std::to_string(dom.rank()) + ")", "images");
    std::vector<ModuleElement> images;
    for (std::size_t g = 0; g < imgs.size(); ++g) {
        const int w = dom.generator(static_cast<int>(g) + 1).width;
        ModuleElement m{w, {}};
        const auto &terms = imgs[g];
        auto at = "images[" + std::to_string(g) + "]";
        if (!terms.is_array()) throw parse_error("expected a list of {key, poly} terms", at);
        for (std::size_t t = 0; t < terms.size(); ++t) {
            auto here = at + "[" + std::to_string(t) + "]";
            auto key_text = detail::string_at(detail::field(terms[t], "key", here), here + ".key");
            auto poly_text = detail::string_at(detail::field(terms[t], "poly", here), here + ".poly");
            BasisOrderKey key;
            Polynomial p(w);
            try {
                key = BasisOrderKey::parse(key_text);
            } catch (const error &e) {
                throw parse_error(e.what(), here + ".key");
            }
            try {
                p = Polynomial::parse(poly_text, w);
                check_in_algebra(p, sig);
            } catch (const error &e) {
                throw parse_error(e.what(), here + ".poly");
            }
            try {
                cod.check_key(key, w);
            } catch (const error &e) {
                throw parse_error(e.what(), here + ".key");
            }
            m.add(key, p);
        }
        images.push_back(std::move(m));
    }
    return {std::move(dom), std::move(cod), std::move(images)};
}

inline std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline json parse_json_text(const std::string &text, const std::string &name)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw parse_error(e.what(), name + ": line " + std::to_string(detail::line_of(text, e.byte)));
    }
}

inline ModuleMorphism load_morphism(const std::filesystem::path &path,
                                    const std::optional<AlgebraSignature> &expected = std::nullopt)
{
    auto j = parse_json_text(read_file(path), path.string());
    try {
        return morphism_from_json(j, expected);
    } catch (const parse_error &e) {
        throw parse_error(e.what(), path.string());
    }
}

inline json to_json(const WidthComplex &C)
{
    json ranks = json::array(), degrees = json::array(), matrices = json::array();
    for (const auto &m : C.modules) {
        ranks.push_back(m.rank());
        degrees.push_back(m.degrees);
    }
    for (const auto &d : C.differentials) {
        json rows = json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c).to_string());
            rows.push_back(std::move(row));
        }
        matrices.push_back(std::move(rows));
    }
    return {{"width", C.width}, {"ranks", ranks}, {"degrees", degrees}, {"matrices", matrices}};
}

inline json to_json(const FreeDecomposition &d, const std::string &identity)
{
    json summands = json::array();
    for (const auto &s : d.summands()) summands.push_back({s.width, s.shift, s.multiplicity});
    return {{"summands", summands}, {"identity", identity}};
}

inline std::string kind_text(ComplexKind k) { return k == ComplexKind::Koszul ? "koszul" : "be"; }

inline json to_json(const OIComplexSpec &spec)
{
    json j = {{"kind", kind_text(spec.kind)}, {"i", spec.i}, {"phi", to_json(spec.phi)}};
    j["trunc"] = spec.truncation ? json(*spec.truncation) : json(nullptr);
    return j;
}

/// {"kind": "koszul"|"be", "i": N, "trunc": D|null, "phi": morphism or path}.
/// A string "phi" is a morphism file path relative to `base`.
inline OIComplexSpec spec_from_json(const json &j, const std::filesystem::path &base = {})
{
    OIComplexSpec spec;
    auto kind = detail::string_at(detail::field(j, "kind", "spec"), "spec.kind");
    if (kind == "koszul") spec.kind = ComplexKind::Koszul;
    else if (kind == "be") spec.kind = ComplexKind::BE;
    else throw parse_error("unknown kind '" + kind + "' (expected koszul or be)", "spec.kind");
    if (j.contains("i")) spec.i = detail::int_at(j["i"], "spec.i");
    if (spec.i < 0) throw parse_error("i must be non-negative", "spec.i");
    if (j.contains("trunc") && !j["trunc"].is_null()) spec.truncation = detail::int_at(j["trunc"], "spec.trunc");
    const auto &phi = detail::field(j, "phi", "spec");
    if (phi.is_string()) spec.phi = load_morphism(base / phi.get<std::string>());
    else spec.phi = morphism_from_json(phi);
    return spec;
}

inline OIComplexSpec load_spec(const std::filesystem::path &path)
{
    auto j = parse_json_text(read_file(path), path.string());
    try {
        return spec_from_json(j, path.parent_path());
    } catch (const parse_error &e) {
        throw parse_error(e.what(), path.string());
    }
}

inline json to_json(const CheckResult &c)
{
    return {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}};
}

inline json to_json(const VerificationReport &rep)
{
    json checks = json::array(), widths = json::array(), homology = json::array();
    for (const auto &c : rep.checks) checks.push_back(to_json(c));
    for (const auto &w : rep.widths)
        widths.push_back({{"width", w.width},
                          {"ranks", w.ranks},
                          {"dd_zero", w.dd_zero},
                          {"graded", w.graded},
                          {"minimal", w.minimal},
                          {"minimality_offenders", w.minimality_offenders},
                          {"acyclic_probe", w.acyclic},
                          {"strand_exact", w.strand_exact ? json(*w.strand_exact) : json(nullptr)}});
    for (const auto &s : rep.homology)
        homology.push_back({{"width", s.width},
                            {"trial", s.trial},
                            {"homology", s.homology},
                            {"euler_ok", s.euler_ok},
                            {"point", s.point}});
    return {{"certificate", rep.certificate},
            {"seed", rep.seed},
            {"trials", rep.trials},
            {"passed", rep.passed()},
            {"checks", checks},
            {"widths", widths},
            {"homology", homology}};
}

inline void write_json(const std::filesystem::path &path, const json &j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace oikomplex::io

#endif
