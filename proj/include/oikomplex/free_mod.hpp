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

#ifndef OIKOMPLEX_FREE_MOD_HPP
#define OIKOMPLEX_FREE_MOD_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "oi_algebra.hpp"
#include "oi_cat.hpp"
#include "polyring.hpp"

namespace oikomplex {

namespace detail {
inline mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}
} // namespace detail

/// Generator f_j of F^{OI,n}(-a): lives in width n and internal degree a.
struct Generator {
    int width = 0;
    int shift = 0;
    std::string label;

    friend bool operator==(const Generator &, const Generator &) = default;
};

/// F^{OI,n_1}(-a_1) ⊕ ... ⊕ F^{OI,n_r}(-a_r).
class FreeOIModule {
public:
    FreeOIModule() = default;
    FreeOIModule(AlgebraSignature algebra, std::vector<Generator> gens)
        : algebra_(std::move(algebra)), generators_(std::move(gens))
    {
        for (std::size_t j = 0; j < generators_.size(); ++j) {
            auto &g = generators_[j];
            if (g.width < 0) throw invalid_input("free module: negative generator width");
            if (g.label.empty()) g.label = "f" + std::to_string(j + 1);
        }
    }

    /// Generators given as widths, all with shift 0.
    static FreeOIModule from_widths(AlgebraSignature algebra, const std::vector<int> &widths, int shift = 0)
    {
        std::vector<Generator> gens;
        for (int n : widths) gens.push_back({n, shift, {}});
        return {std::move(algebra), std::move(gens)};
    }

    /// A^r: r width-0 generators labelled g1..gr.
    static FreeOIModule width_zero(AlgebraSignature algebra, int r, int shift = 0)
    {
        std::vector<Generator> gens;
        for (int k = 1; k <= r; ++k) gens.push_back({0, shift, "g" + std::to_string(k)});
        return {std::move(algebra), std::move(gens)};
    }

    /// "n1,n2,..." with optional shifts "n:a".
    static FreeOIModule parse(std::string_view text, AlgebraSignature algebra)
    {
        std::vector<Generator> gens;
        auto s = detail::trim(text);
        if (!s.empty())
            for (auto part : detail::split_top(s, ',')) {
                auto colon = part.find(':');
                Generator g;
                g.width = detail::parse_int(part.substr(0, colon), "free module width");
                if (colon != std::string_view::npos) g.shift = detail::parse_int(part.substr(colon + 1), "free module shift");
                if (g.width < 0) throw parse_error("negative generator width", "free module");
                gens.push_back(g);
            }
        return {std::move(algebra), std::move(gens)};
    }

    const AlgebraSignature &algebra() const noexcept { return algebra_; }
    const std::vector<Generator> &generators() const noexcept { return generators_; }
    const Generator &generator(int j) const { return generators_.at(static_cast<std::size_t>(j - 1)); }
    int rank() const noexcept { return static_cast<int>(generators_.size()); }

    bool generated_in_width_zero() const
    {
        for (const auto &g : generators_)
            if (g.width != 0) return false;
        return true;
    }

    /// Σ_j C(w, n_j).
    std::size_t rank_at_width(int w) const
    {
        mpz_class total = 0;
        for (const auto &g : generators_) total += detail::binomial(w, g.width);
        return total.get_ui();
    }

    /// Basis e_{(π,j)} of F(w) in listing order: generator 1 first, images ascending.
    std::vector<BasisOrderKey> basis_at_width(int w) const
    {
        std::vector<BasisOrderKey> out;
        for (int j = 1; j <= rank(); ++j)
            for (auto &pi : enumerate_hom(generator(j).width, w)) out.push_back({j, std::move(pi)});
        return out;
    }

    /// Validates that key indexes a basis element of F(w).
    void check_key(const BasisOrderKey &key, int w) const
    {
        if (key.generator < 1 || key.generator > rank())
            throw invalid_input("basis key " + key.to_string() + ": no such generator");
        if (key.morphism.source() != generator(key.generator).width || key.morphism.target() != w)
            throw invalid_input("basis key " + key.to_string() + " does not index F(" + std::to_string(w) + ")");
    }

    int key_degree(const BasisOrderKey &key) const { return generator(key.generator).shift; }

    std::string to_string() const
    {
        std::string s;
        for (const auto &g : generators_) {
            if (!s.empty()) s += " ⊕ ";
            s += "F(" + std::to_string(g.width) + ")";
            if (g.shift != 0) s += "(" + std::to_string(-g.shift) + ")";
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const FreeOIModule &, const FreeOIModule &) = default;

private:
    AlgebraSignature algebra_;
    std::vector<Generator> generators_;
};

/// Position of each key in a width basis.
using BasisIndex = std::map<BasisOrderKey, std::size_t, ListingLess>;

inline BasisIndex index_basis(const std::vector<BasisOrderKey> &basis)
{
    BasisIndex idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], k);
    return idx;
}

/// Σ a_ν e_ν in F(w).
struct ModuleElement {
    int width = 0;
    std::map<BasisOrderKey, Polynomial, ListingLess> coords;

    bool is_zero() const noexcept { return coords.empty(); }

    void add(const BasisOrderKey &key, const Polynomial &coef)
    {
        if (coef.width() != width) throw width_mismatch("module element: coefficient width differs");
        if (key.morphism.target() != width) throw width_mismatch("module element: key width differs");
        if (coef.is_zero()) return;
        auto [it, inserted] = coords.try_emplace(key, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second.is_zero()) coords.erase(it);
        }
    }

    ModuleElement &operator+=(const ModuleElement &other)
    {
        if (other.width != width) throw width_mismatch("module element: widths differ");
        for (const auto &[k, c] : other.coords) add(k, c);
        return *this;
    }

    ModuleElement &operator*=(const Polynomial &a)
    {
        if (a.width() != width) throw width_mismatch("module element: scalar width differs");
        std::map<BasisOrderKey, Polynomial, ListingLess> out;
        for (const auto &[k, c] : coords) {
            auto p = a * c;
            if (!p.is_zero()) out.emplace(k, std::move(p));
        }
        coords = std::move(out);
        return *this;
    }

    friend bool operator==(const ModuleElement &, const ModuleElement &) = default;

    static ModuleElement basis_element(const BasisOrderKey &key)
    {
        ModuleElement m{key.morphism.target(), {}};
        m.add(key, Polynomial::constant(1, m.width));
        return m;
    }

    std::string to_string() const
    {
        if (coords.empty()) return "0";
        std::string s;
        for (const auto &[k, c] : coords) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*e[" + k.to_string() + "]";
        }
        return s;
    }
};

/// Σ ε_*(a_ν) e_{ε∘ν}.
inline ModuleElement element_push_forward(const ModuleElement &m, const OIMorphism &eps)
{
    if (m.width != eps.source())
        throw width_mismatch("element_push_forward: element width " + std::to_string(m.width) +
                             " differs from source " + std::to_string(eps.source()));
    ModuleElement out{eps.target(), {}};
    for (const auto &[k, c] : m.coords) out.add(push_forward(k, eps), push_forward(c, eps));
    return out;
}

/// Morphism of free OI-modules, stored by the images of the domain generators.
class ModuleMorphism {
public:
    ModuleMorphism() = default;

    /// images[j-1] is φ(f_j) ∈ codomain(n_j).
    ModuleMorphism(FreeOIModule domain, FreeOIModule codomain, std::vector<ModuleElement> images)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images))
    {
        if (!(domain_.algebra() == codomain_.algebra()))
            throw algebra_mismatch("morphism: domain and codomain have different algebras");
        if (static_cast<int>(images_.size()) != domain_.rank())
            throw invalid_input("morphism: expected " + std::to_string(domain_.rank()) + " generator images, got " +
                                std::to_string(images_.size()));
        for (int j = 1; j <= domain_.rank(); ++j) {
            const auto &img = images_[static_cast<std::size_t>(j - 1)];
            int n = domain_.generator(j).width;
            if (img.width != n)
                throw width_mismatch("morphism: image of generator " + std::to_string(j) + " must live in width " +
                                     std::to_string(n));
            for (const auto &[k, c] : img.coords) {
                codomain_.check_key(k, n);
                if (c.width() != n) throw width_mismatch("morphism: coefficient width differs from generator width");
                check_in_algebra(c, codomain_.algebra());
            }
        }
    }

    /// Zero morphism.
    static ModuleMorphism zero(FreeOIModule domain, FreeOIModule codomain)
    {
        std::vector<ModuleElement> imgs;
        for (const auto &g : domain.generators()) imgs.push_back({g.width, {}});
        return {std::move(domain), std::move(codomain), std::move(imgs)};
    }

    const FreeOIModule &domain() const noexcept { return domain_; }
    const FreeOIModule &codomain() const noexcept { return codomain_; }
    const std::vector<ModuleElement> &images() const noexcept { return images_; }
    const ModuleElement &image(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }

private:
    FreeOIModule domain_;
    FreeOIModule codomain_;
    std::vector<ModuleElement> images_;
};

/// φ(w)(m): φ(e_{(π,j)}) = π_*(φ(f_j)), extended A(w)-linearly.
inline ModuleElement apply(const ModuleMorphism &phi, const ModuleElement &m)
{
    ModuleElement out{m.width, {}};
    for (const auto &[k, c] : m.coords) {
        phi.domain().check_key(k, m.width);
        auto img = element_push_forward(phi.image(k.generator), k.morphism);
        img *= c;
        out += img;
    }
    return out;
}

/// Coordinate matrix of φ(w): columns index the domain basis, rows the codomain basis.
inline PolyMatrix matrix_at_width(const ModuleMorphism &phi, int w)
{
    auto dom = phi.domain().basis_at_width(w);
    auto cod = phi.codomain().basis_at_width(w);
    auto cod_index = index_basis(cod);
    PolyMatrix m(cod.size(), dom.size(), Polynomial(w));
    for (std::size_t c = 0; c < dom.size(); ++c) {
        auto col = element_push_forward(phi.image(dom[c].generator), dom[c].morphism);
        for (const auto &[k, p] : col.coords) m(cod_index.at(k), c) = p;
    }
    return m;
}

/// First failing generator coordinate of a non-degree-0 morphism, if any.
struct GradingFailure {
    int generator = 0;
    BasisOrderKey key;
    std::string polynomial;
    int expected_degree = 0;
};

/// φ is degree 0 iff each coordinate of φ(f_j) at a key of generator k is
/// homogeneous of degree a_j - b_k.
inline std::optional<GradingFailure> check_graded(const ModuleMorphism &phi)
{
    auto g = phi.domain().algebra().grading();
    for (int j = 1; j <= phi.domain().rank(); ++j)
        for (const auto &[k, p] : phi.image(j).coords) {
            int expected = phi.domain().generator(j).shift - phi.codomain().generator(k.generator).shift;
            if (!is_homogeneous_of_degree(p, expected, g)) return GradingFailure{j, k, p.to_string(), expected};
        }
    return std::nullopt;
}

/// Witness of a non-commuting naturality square ε_* ∘ D(w) vs D(w') ∘ ε_*.
struct SquareFailure {
    OIMorphism eps;
    std::size_t column = 0; ///< domain basis index at width w
    std::size_t row = 0;    ///< codomain basis index at width w'
    std::string expected;   ///< entry of D(w') at (row, image of column)
    std::string actual;     ///< entry of ε_*(D(w) column)
};

/// Checks one square given basis transition maps: dom_map[c] (resp. cod_map[r]) is the
/// index at width w' of ε_* of basis element c (resp. r) at width w. Transitions of
/// all constructions here send basis elements to basis elements without sign.
inline std::optional<SquareFailure> check_square(const PolyMatrix &at_w, const PolyMatrix &at_w2, const OIMorphism &eps,
                                                 std::span<const std::size_t> dom_map,
                                                 std::span<const std::size_t> cod_map)
{
    if (dom_map.size() != at_w.cols() || cod_map.size() != at_w.rows())
        throw invalid_input("check_square: transition sizes do not match the matrix");
    const int w2 = eps.target();
    std::vector<std::ptrdiff_t> row_preimage(at_w2.rows(), -1);
    for (std::size_t r = 0; r < cod_map.size(); ++r) row_preimage[cod_map[r]] = static_cast<std::ptrdiff_t>(r);
    for (std::size_t c = 0; c < at_w.cols(); ++c) {
        std::size_t c2 = dom_map[c];
        for (std::size_t r2 = 0; r2 < at_w2.rows(); ++r2) {
            Polynomial lhs(w2);
            if (row_preimage[r2] >= 0) lhs = push_forward(at_w(static_cast<std::size_t>(row_preimage[r2]), c), eps);
            const auto &rhs = at_w2(r2, c2);
            if (!(lhs == rhs)) return SquareFailure{eps, c, r2, rhs.to_string(), lhs.to_string()};
        }
    }
    return std::nullopt;
}

struct NaturalityReport {
    bool passed = true;
    std::size_t squares_checked = 0;
    std::optional<SquareFailure> failure;
    std::string witness; ///< human-readable description of the failure
};

/// Naturality of a width-wise family of matrices between free modules:
/// for every ε: w -> w' with w ≤ w' ≤ wmax, ε_* ∘ D(w) = D(w') ∘ ε_* on every basis element.
inline NaturalityReport check_naturality(const FreeOIModule &domain, const FreeOIModule &codomain,
                                         const std::function<PolyMatrix(int)> &matrix_at, int wmax)
{
    NaturalityReport report;
    std::vector<PolyMatrix> mats;
    std::vector<std::vector<BasisOrderKey>> dom_basis, cod_basis;
    std::vector<BasisIndex> dom_index, cod_index;
    for (int w = 0; w <= wmax; ++w) {
        mats.push_back(matrix_at(w));
        dom_basis.push_back(domain.basis_at_width(w));
        cod_basis.push_back(codomain.basis_at_width(w));
        dom_index.push_back(index_basis(dom_basis.back()));
        cod_index.push_back(index_basis(cod_basis.back()));
    }
    for (int w = 0; w <= wmax; ++w)
        for (int w2 = w; w2 <= wmax; ++w2)
            for (const auto &eps : enumerate_hom(w, w2)) {
                std::vector<std::size_t> dmap, cmap;
                for (const auto &k : dom_basis[static_cast<std::size_t>(w)])
                    dmap.push_back(dom_index[static_cast<std::size_t>(w2)].at(push_forward(k, eps)));
                for (const auto &k : cod_basis[static_cast<std::size_t>(w)])
                    cmap.push_back(cod_index[static_cast<std::size_t>(w2)].at(push_forward(k, eps)));
                ++report.squares_checked;
                if (auto f = check_square(mats[static_cast<std::size_t>(w)], mats[static_cast<std::size_t>(w2)], eps,
                                          dmap, cmap)) {
                    report.passed = false;
                    report.witness = "eps " + eps.to_string() + ", basis element e[" +
                                     dom_basis[static_cast<std::size_t>(w)][f->column].to_string() + "], row e[" +
                                     cod_basis[static_cast<std::size_t>(w2)][f->row].to_string() + "]: expected " +
                                     f->expected + ", got " + f->actual;
                    report.failure = std::move(f);
                    return report;
                }
            }
    return report;
}

inline NaturalityReport check_naturality(const ModuleMorphism &phi, int wmax)
{
    return check_naturality(phi.domain(), phi.codomain(), [&](int w) { return matrix_at_width(phi, w); }, wmax);
}

} // namespace oikomplex

#endif
