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

#ifndef OIKOMPLEX_OI_ALGEBRA_HPP
#define OIKOMPLEX_OI_ALGEBRA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "oi_cat.hpp"
#include "polyring.hpp"

namespace oikomplex {

/// Polynomial OI-algebra X^{OI,d_1} ⊗ ... ⊗ X^{OI,d_c}, kept as a signature.
/// A(w) is the polynomial ring in the variables x[i;π], π ∈ Hom(d_i, w).
struct AlgebraSignature {
    std::vector<int> factor_widths;
    std::vector<int> variable_degrees; ///< per factor; empty entries default to 1

    AlgebraSignature() = default;
    explicit AlgebraSignature(std::vector<int> widths, std::vector<int> degrees = {})
        : factor_widths(std::move(widths)), variable_degrees(std::move(degrees))
    {
        validate();
    }

    void validate() const
    {
        if (factor_widths.empty()) throw invalid_input("algebra signature needs at least one factor");
        for (int d : factor_widths)
            if (d < 0) throw invalid_input("algebra signature: negative factor width");
        if (variable_degrees.size() > factor_widths.size())
            throw invalid_input("algebra signature: more degrees than factors");
    }

    int factors() const noexcept { return static_cast<int>(factor_widths.size()); }

    int factor_width(int factor) const { return factor_widths.at(static_cast<std::size_t>(factor - 1)); }

    Grading grading() const { return Grading{variable_degrees, {}}; }

    friend bool operator==(const AlgebraSignature &, const AlgebraSignature &) = default;

    /// "X(1)⊗X(1)⊗X(1)".
    std::string to_string() const
    {
        std::string s;
        for (std::size_t k = 0; k < factor_widths.size(); ++k) {
            if (k) s += "⊗";
            s += "X(" + std::to_string(factor_widths[k]) + ")";
        }
        return s;
    }

    /// CLI form "1,1,1" (optionally "d:deg" per factor). Also accepts the "X(1)⊗X(1)" form.
    static AlgebraSignature parse(std::string_view text)
    {
        auto s = detail::trim(text);
        if (s.empty()) throw parse_error("empty algebra signature", "algebra");
        std::vector<int> widths, degrees;
        bool any_degree = false;
        std::vector<std::string_view> parts;
        if (s.find("X(") != std::string_view::npos) {
            std::size_t pos = 0;
            while ((pos = s.find("X(", pos)) != std::string_view::npos) {
                auto close = s.find(')', pos);
                if (close == std::string_view::npos) throw parse_error("unterminated X(", "algebra");
                parts.push_back(s.substr(pos + 2, close - pos - 2));
                pos = close + 1;
            }
        } else {
            parts = detail::split_top(s, ',');
        }
        for (auto part : parts) {
            auto colon = part.find(':');
            if (colon == std::string_view::npos) {
                widths.push_back(detail::parse_int(part, "algebra"));
                degrees.push_back(1);
            } else {
                widths.push_back(detail::parse_int(part.substr(0, colon), "algebra"));
                degrees.push_back(detail::parse_int(part.substr(colon + 1), "algebra degree"));
                any_degree = true;
            }
        }
        try {
            return AlgebraSignature(std::move(widths), any_degree ? std::move(degrees) : std::vector<int>{});
        } catch (const invalid_input &e) {
            throw parse_error(e.what(), "algebra");
        }
    }
};

/// Variables of A(w) in (factor, lexicographic) order; Σ_i C(w, d_i) of them.
inline std::vector<VariableId> variables_at_width(const AlgebraSignature &sig, int w)
{
    std::vector<VariableId> out;
    for (int i = 1; i <= sig.factors(); ++i)
        for (auto &pi : enumerate_hom(sig.factor_width(i), w)) out.push_back({i, std::move(pi)});
    return out;
}

/// Checks that every variable of p belongs to the signature (factor in range, right source width).
inline void check_in_algebra(const Polynomial &p, const AlgebraSignature &sig)
{
    for (const auto &[m, c] : p.terms())
        for (const auto &[v, e] : m.powers) {
            if (v.factor < 1 || v.factor > sig.factors())
                throw algebra_mismatch("variable " + v.to_string() + " has no factor in " + sig.to_string());
            if (v.morphism.source() != sig.factor_width(v.factor))
                throw algebra_mismatch("variable " + v.to_string() + " should be indexed by Hom(" +
                                       std::to_string(sig.factor_width(v.factor)) + ", w)");
        }
}

} // namespace oikomplex

#endif
