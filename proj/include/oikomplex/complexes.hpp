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

#ifndef OIKOMPLEX_COMPLEXES_HPP
#define OIKOMPLEX_COMPLEXES_HPP

// Width-wise construction of the OI Koszul complex K(φ) for φ: F -> A and
// of the OI Buchsbaum-Eisenbud complexes BE^i(φ) for φ: F -> G with G
// generated in width 0.
//
// Homological degree j of BE^i at width w (n = rank F(w), r = rank G):
//   j = i - q ≤ i       Λ^{i-q} F ⊗ S_q G                    (q = 0..i)
//   j = i + 1 + p       Λ^r G* ⊗ S_p G* ⊗ Λ^{r+i+p} F         (p = 0..n-r-i)
// with d_{i+1} = α_i built from signed r-minors.

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "free_mod.hpp"
#include "multilinear.hpp"
#include "polyring.hpp"

namespace oikomplex {

enum class ComplexKind { Koszul, BE };

/// Deliberate convention errors, used to show that the checks catch them.
enum class Mutation {
    None,
    SubsetSignFlipped,       ///< sgn(I⊆J) negated whenever I is not an initial segment of J
    AlphaColumnNegated,      ///< one column of α_i (the last) with the wrong sign
    SubsetSignTransposed,    ///< sgn computed for the order (J∖I, I) instead of (I, J∖I)
    DividedPowerCoefficient, ///< g_i acts on S(G*) without the exponent coefficient
    DividedPowerTermDropped, ///< term of the smallest index left out when a monomial has two distinct indices
    UnorderedBasis,          ///< coordinate matrix of φ(w) taken in reversed basis order
};

struct BuildOptions {
    Mutation mutation = Mutation::None;
};

struct OIComplexSpec {
    ComplexKind kind = ComplexKind::Koszul;
    ModuleMorphism phi;
    int i = 0;                      ///< BE index
    std::optional<int> truncation;  ///< Koszul: highest homological degree
};

/// One module C_j of a width complex: labelled basis with internal degrees.
struct ModuleBlock {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::optional<ConstructionBasis> basis; ///< present for constructed complexes

    std::size_t rank() const noexcept { return labels.size(); }
};

/// Width-w component: modules C_0..C_L and d_j: C_j -> C_{j-1} for j = 1..L.
struct WidthComplex {
    int width = 0;
    std::vector<ModuleBlock> modules;
    std::vector<PolyMatrix> differentials; ///< differentials[j-1] = d_j
    std::vector<std::string> warnings;
    Grading grading;

    std::size_t length() const noexcept { return modules.empty() ? 0 : modules.size() - 1; }
    std::size_t rank(std::size_t j) const { return j < modules.size() ? modules[j].rank() : 0; }
    const PolyMatrix &d(std::size_t j) const { return differentials.at(j - 1); }

    std::vector<std::size_t> ranks() const
    {
        std::vector<std::size_t> out;
        for (const auto &m : modules) out.push_back(m.rank());
        return out;
    }

    /// Complex over A(w) from explicit matrices; basis degrees default to 0.
    static WidthComplex from_matrices(int width, std::vector<PolyMatrix> ds, std::size_t rank0 = 0)
    {
        WidthComplex c;
        c.width = width;
        auto block = [](std::size_t n) {
            ModuleBlock b;
            for (std::size_t k = 0; k < n; ++k) b.labels.push_back("b" + std::to_string(k + 1));
            b.degrees.assign(n, 0);
            return b;
        };
        c.modules.push_back(block(ds.empty() ? rank0 : ds.front().rows()));
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (ds[j].rows() != c.modules.back().rank())
                throw invalid_input("from_matrices: d_" + std::to_string(j + 1) + " has the wrong number of rows");
            c.modules.push_back(block(ds[j].cols()));
        }
        c.differentials = std::move(ds);
        return c;
    }
};

namespace detail {

inline std::string key_label(const FreeOIModule &M, const BasisOrderKey &k)
{
    std::string s = M.generator(k.generator).label;
    if (k.morphism.source() == 0) return s;
    s += "[";
    for (std::size_t t = 0; t < k.morphism.image().size(); ++t) {
        if (t) s += ",";
        s += std::to_string(k.morphism.image()[t]);
    }
    return s + "]";
}

inline std::string element_label(const Construction &c, const Element &e)
{
    std::string s;
    for (std::size_t f = 0; f < e.parts.size(); ++f) {
        if (f) s += " (x) ";
        const auto &factor = c.factors()[f];
        if (e.parts[f].empty()) {
            s += "1";
            continue;
        }
        for (std::size_t t = 0; t < e.parts[f].size(); ++t) {
            if (t) s += factor.kind == PowerKind::Wedge ? "^" : ".";
            s += key_label(factor.module, e.parts[f][t]);
        }
    }
    return s;
}

inline ModuleBlock make_block(const Construction &c, int w, int twist = 0)
{
    ModuleBlock b;
    b.basis = c.basis_at_width(w);
    for (const auto &e : b.basis->elements) {
        b.labels.push_back(element_label(c, e));
        b.degrees.push_back(c.degree(e) + twist);
    }
    return b;
}

inline std::vector<int> omit(const std::vector<int> &t, std::size_t pos)
{
    std::vector<int> out;
    out.reserve(t.size() - 1);
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != pos) out.push_back(t[k]);
    return out;
}

inline std::vector<int> insert_sorted(std::vector<int> t, int v)
{
    t.insert(std::upper_bound(t.begin(), t.end(), v), v);
    return t;
}

/// φ(w), with the UnorderedBasis mutation applied if requested.
inline PolyMatrix phi_matrix(const ModuleMorphism &phi, int w, const BuildOptions &opt)
{
    auto A = matrix_at_width(phi, w);
    if (opt.mutation != Mutation::UnorderedBasis) return A;
    std::vector<std::size_t> rev(A.cols());
    for (std::size_t c = 0; c < A.cols(); ++c) rev[c] = A.cols() - 1 - c;
    return A.columns(rev);
}

inline void accumulate(PolyMatrix &m, std::size_t row, std::size_t col, const Polynomial &p, bool negative)
{
    if (p.is_zero()) return;
    if (negative) m(row, col) -= p;
    else m(row, col) += p;
}

inline void check_codomain_is_algebra(const ModuleMorphism &phi)
{
    const auto &G = phi.codomain();
    if (G.rank() != 1 || G.generator(1).width != 0 || G.generator(1).shift != 0)
        throw invalid_input("Koszul complex: codomain of phi must be A (one width-0 generator, shift 0), got " +
                            G.to_string());
}

} // namespace detail

/// Module in homological degree j of the OI complex, as a construction
/// (independent of width). nullopt when the module is zero in every width.
inline std::optional<Construction> construction_for_degree(const OIComplexSpec &spec, int j)
{
    const auto &F = spec.phi.domain();
    if (j < 0) return std::nullopt;
    if (spec.kind == ComplexKind::Koszul) {
        if (spec.truncation && j > *spec.truncation) return std::nullopt;
        return Construction::wedge(F, j);
    }
    const auto &G = spec.phi.codomain();
    const int r = G.rank();
    if (j <= spec.i)
        return Construction({{PowerKind::Wedge, F, j}, {PowerKind::Sym, G, spec.i - j}});
    auto Gs = dual_width0(G).dual;
    int p = j - spec.i - 1;
    return Construction({{PowerKind::Wedge, Gs, r}, {PowerKind::Sym, Gs, p}, {PowerKind::Wedge, F, r + spec.i + p}});
}

/// Classical Koszul complex of φ(w): F(w) -> A(w), degrees 0..min(D, rank F(w)).
inline WidthComplex koszul_at_width(const ModuleMorphism &phi, int w, std::optional<int> max_degree = std::nullopt,
                                    const BuildOptions &opt = {})
{
    detail::check_codomain_is_algebra(phi);
    const auto &F = phi.domain();
    const auto A = detail::phi_matrix(phi, w, opt);
    const int n = static_cast<int>(F.rank_at_width(w));
    const int top = max_degree ? std::min(*max_degree, n) : n;

    WidthComplex C;
    C.width = w;
    C.grading = F.algebra().grading();
    for (int d = 0; d <= top; ++d) C.modules.push_back(detail::make_block(Construction::wedge(F, d), w));
    for (int d = 1; d <= top; ++d) {
        const auto &src = *C.modules[static_cast<std::size_t>(d)].basis;
        const auto &dst = *C.modules[static_cast<std::size_t>(d - 1)].basis;
        PolyMatrix M(dst.size(), src.size(), Polynomial(w));
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto &K = src.indices[col][0];
            for (std::size_t l = 0; l < K.size(); ++l) {
                const auto &a = A(0, static_cast<std::size_t>(K[l]));
                detail::accumulate(M, dst.index_of({detail::omit(K, l)}), col, a, l % 2 == 1);
            }
        }
        C.differentials.push_back(std::move(M));
    }
    return C;
}

namespace detail {

/// sgn(I ⊆ J) for I given by its positions in J (0-based, increasing):
/// the sign of the reordering J -> (I, J∖I).
inline bool subset_sign_negative(const std::vector<int> &positions, std::size_t j_size, Mutation m)
{
    long inversions = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) inversions += positions[k] - static_cast<long>(k);
    bool negative = inversions % 2 != 0;
    if (m == Mutation::SubsetSignFlipped && inversions != 0) negative = !negative;
    if (m == Mutation::SubsetSignTransposed) {
        long r = static_cast<long>(positions.size());
        long rest = static_cast<long>(j_size) - r;
        if ((r * rest) % 2 != 0) negative = !negative;
    }
    return negative;
}

} // namespace detail

/// Width-w component of BE^i(φ) for φ: F -> G, G generated in width 0.
inline WidthComplex be_at_width(const ModuleMorphism &phi, int i, int w, const BuildOptions &opt = {})
{
    if (i < 0) throw invalid_input("BE complex: index i must be non-negative");
    const auto &F = phi.domain();
    const auto &G = phi.codomain();
    if (!G.generated_in_width_zero())
        throw invalid_input("BE complex: codomain " + G.to_string() + " is not generated in width 0");
    const auto Gs = dual_width0(G).dual;
    const int r = G.rank();
    const int n = static_cast<int>(F.rank_at_width(w));
    const auto A = detail::phi_matrix(phi, w, opt);
    const Polynomial zero(w);

    WidthComplex C;
    C.width = w;
    C.grading = F.algebra().grading();

    std::set<int> shifts;
    for (const auto &g : G.generators()) shifts.insert(g.shift);
    if (shifts.size() > 1)
        C.warnings.push_back("codomain has mixed degree shifts; the graded twist of the left part may not be unique");

    // Right part, degrees 0..i: Λ^j F ⊗ S_{i-j} G.
    for (int j = 0; j <= i; ++j)
        C.modules.push_back(detail::make_block(Construction({{PowerKind::Wedge, F, j}, {PowerKind::Sym, G, i - j}}), w));
    for (int j = 1; j <= i; ++j) {
        const auto &src = *C.modules[static_cast<std::size_t>(j)].basis;
        const auto &dst = *C.modules[static_cast<std::size_t>(j - 1)].basis;
        PolyMatrix M(dst.size(), src.size(), zero);
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto &J = src.indices[col][0];
            const auto &mono = src.indices[col][1];
            for (std::size_t l = 0; l < J.size(); ++l) {
                auto rest = detail::omit(J, l);
                for (int k = 0; k < r; ++k) {
                    const auto &a = A(static_cast<std::size_t>(k), static_cast<std::size_t>(J[l]));
                    detail::accumulate(M, dst.index_of({rest, detail::insert_sorted(mono, k)}), col, a, l % 2 == 1);
                }
            }
        }
        C.differentials.push_back(std::move(M));
    }

    // Left part, degrees i+1+p for p = 0..n-r-i.
    if (n >= r + i) {
        const int pmax = n - r - i;
        std::vector<Construction> left;
        for (int p = 0; p <= pmax; ++p)
            left.push_back(Construction({{PowerKind::Wedge, Gs, r}, {PowerKind::Sym, Gs, p}, {PowerKind::Wedge, F, r + i + p}}));

        // α_i: g_1*∧...∧g_r* ⊗ f_J -> Σ_{I⊆J, |I|=r} sgn(I⊆J) det(A_I) f_{J∖I}.
        auto alpha_block = detail::make_block(left[0], w);
        const auto &src = *alpha_block.basis;
        const auto &dst = *C.modules[static_cast<std::size_t>(i)].basis;
        PolyMatrix alpha(dst.size(), src.size(), zero);
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto &J = src.indices[col][2];
            detail::for_each_combination(static_cast<int>(J.size()), r, [&](const std::vector<int> &pos) {
                std::vector<std::size_t> cols;
                std::vector<int> rest;
                std::size_t t = 0;
                for (std::size_t k = 0; k < J.size(); ++k) {
                    if (t < pos.size() && pos[t] == static_cast<int>(k)) {
                        cols.push_back(static_cast<std::size_t>(J[k]));
                        ++t;
                    } else {
                        rest.push_back(J[k]);
                    }
                }
                auto minor = determinant(A.columns(cols), w);
                bool negative = detail::subset_sign_negative(pos, J.size(), opt.mutation);
                detail::accumulate(alpha, dst.index_of({rest, {}}), col, minor, negative);
            });
        }

        if (opt.mutation == Mutation::AlphaColumnNegated && alpha.cols() > 0)
            for (std::size_t row = 0; row < alpha.rows(); ++row)
                alpha(row, alpha.cols() - 1) = Polynomial(w) - alpha(row, alpha.cols() - 1);

        // Solve for the twist of the Λ^r G* factor that makes α_i degree 0.
        int twist = 0;
        bool solved = false;
        for (std::size_t col = 0; col < alpha.cols() && !solved; ++col)
            for (std::size_t row = 0; row < alpha.rows() && !solved; ++row) {
                const auto &e = alpha(row, col);
                if (e.is_zero() || !is_homogeneous(e, C.grading)) continue;
                twist = *degree(e, C.grading) + C.modules[static_cast<std::size_t>(i)].degrees[row] -
                        alpha_block.degrees[col];
                solved = true;
            }
        if (twist != 0)
            C.warnings.push_back("twist of the left part differs from -(sum of codomain shifts) by " + std::to_string(twist));
        for (auto &d : alpha_block.degrees) d += twist;
        C.modules.push_back(std::move(alpha_block));
        C.differentials.push_back(std::move(alpha));

        for (int p = 1; p <= pmax; ++p) {
            C.modules.push_back(detail::make_block(left[static_cast<std::size_t>(p)], w, twist));
            const auto &s = *C.modules.back().basis;
            const auto &t = *C.modules[C.modules.size() - 2].basis;
            PolyMatrix M(t.size(), s.size(), zero);
            for (std::size_t col = 0; col < s.size(); ++col) {
                const auto &top = s.indices[col][0];
                const auto &mono = s.indices[col][1];
                const auto &J = s.indices[col][2];
                for (std::size_t pos = 0; pos < mono.size(); ++pos) {
                    if (pos > 0 && mono[pos] == mono[pos - 1]) continue;
                    const int k = mono[pos];
                    if (opt.mutation == Mutation::DividedPowerTermDropped && pos == 0 && mono.front() != mono.back())
                        continue;
                    long mult = std::count(mono.begin(), mono.end(), k);
                    Rational c = opt.mutation == Mutation::DividedPowerCoefficient ? Rational(1) : Rational(mult);
                    auto lowered = detail::omit(mono, pos);
                    for (std::size_t l = 0; l < J.size(); ++l) {
                        auto a = A(static_cast<std::size_t>(k), static_cast<std::size_t>(J[l])) * c;
                        detail::accumulate(M, t.index_of({top, lowered, detail::omit(J, l)}), col, a, l % 2 == 1);
                    }
                }
            }
            C.differentials.push_back(std::move(M));
        }
    }

    // Drop trailing zero modules (length min{i, n} when r + i > n).
    while (C.modules.size() > 1 && C.modules.back().rank() == 0) {
        C.modules.pop_back();
        C.differentials.pop_back();
    }
    return C;
}

/// Width-w component of the complex described by spec.
inline WidthComplex build_at_width(const OIComplexSpec &spec, int w, const BuildOptions &opt = {})
{
    if (spec.kind == ComplexKind::Koszul) return koszul_at_width(spec.phi, w, spec.truncation, opt);
    return be_at_width(spec.phi, spec.i, w, opt);
}

/// Basis transitions for ε: w -> w+1; module_maps[j][b] is the index at
/// width w+1 of ε_* of basis element b of C_j(w).
struct Transition {
    int from_width = 0;
    OIMorphism eps;
    std::vector<std::vector<std::size_t>> module_maps;
};

struct OIComplex {
    OIComplexSpec spec;
    std::vector<WidthComplex> widths; ///< widths[w] for w = 0..wmax
    std::vector<Transition> transitions;
    std::vector<std::string> warnings;
};

/// Width components for w = 0..wmax (built concurrently) and all transitions ε: w -> w+1.
inline OIComplex assemble_oi_complex(const OIComplexSpec &spec, int wmax, const BuildOptions &opt = {})
{
    if (wmax < 0) throw invalid_input("assemble_oi_complex: wmax must be non-negative");
    OIComplex out;
    out.spec = spec;
    if (spec.kind == ComplexKind::Koszul && !out.spec.truncation)
        out.spec.truncation = static_cast<int>(spec.phi.domain().rank_at_width(wmax));

    std::vector<std::future<WidthComplex>> jobs;
    for (int w = 0; w <= wmax; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] { return build_at_width(out.spec, w, opt); }));
    for (auto &j : jobs) out.widths.push_back(j.get());

    std::set<std::string> seen;
    for (const auto &c : out.widths)
        for (const auto &msg : c.warnings)
            if (seen.insert(msg).second) out.warnings.push_back(msg);

    for (int w = 0; w < wmax; ++w) {
        const auto &lo = out.widths[static_cast<std::size_t>(w)];
        const auto &hi = out.widths[static_cast<std::size_t>(w + 1)];
        std::vector<std::map<Element, std::size_t>> positions;
        for (const auto &m : hi.modules) {
            std::map<Element, std::size_t> pos;
            for (std::size_t k = 0; k < m.basis->elements.size(); ++k) pos.emplace(m.basis->elements[k], k);
            positions.push_back(std::move(pos));
        }
        for (const auto &eps : enumerate_hom(w, w + 1)) {
            Transition t{w, eps, {}};
            for (std::size_t j = 0; j < lo.modules.size(); ++j) {
                std::vector<std::size_t> map;
                for (const auto &e : lo.modules[j].basis->elements) {
                    if (j >= positions.size()) throw invalid_input("assemble: module vanishes under push forward");
                    map.push_back(positions[j].at(push_forward(e, eps)));
                }
                t.module_maps.push_back(std::move(map));
            }
            out.transitions.push_back(std::move(t));
        }
    }
    return out;
}

/// The differential d_j as a morphism of free OI-modules between the
/// decompositions of C_j and C_{j-1}: each generator of C_j (width u) is sent
/// to d_j(u) of it, written in the pushed-forward generators of C_{j-1}.
struct DecomposedDifferential {
    FreeDecomposition domain;
    FreeDecomposition codomain;
    ModuleMorphism morphism;
};

inline DecomposedDifferential differential_as_morphism(const OIComplexSpec &spec, int j, const BuildOptions &opt = {})
{
    auto dom_c = construction_for_degree(spec, j);
    auto cod_c = construction_for_degree(spec, j - 1);
    if (!dom_c || !cod_c || j < 1) throw invalid_input("differential_as_morphism: no differential in degree " + std::to_string(j));
    DecomposedDifferential out{decompose(*dom_c), decompose(*cod_c), {}};
    const auto &algebra = spec.phi.domain().algebra();
    auto dom_free = out.domain.as_free_module(algebra);
    auto cod_free = out.codomain.as_free_module(algebra);
    GeneratorLookup lookup(out.codomain);

    std::map<int, WidthComplex> cache;
    std::vector<ModuleElement> images;
    for (const auto &g : out.domain.witnesses) {
        auto it = cache.find(g.width);
        if (it == cache.end()) it = cache.emplace(g.width, build_at_width(spec, g.width, opt)).first;
        const auto &C = it->second;
        ModuleElement img{g.width, {}};
        if (static_cast<std::size_t>(j) < C.modules.size()) {
            const auto &src = *C.modules[static_cast<std::size_t>(j)].basis;
            const auto &dst = *C.modules[static_cast<std::size_t>(j - 1)].basis;
            auto col = static_cast<std::size_t>(
                std::find(src.elements.begin(), src.elements.end(), g.element) - src.elements.begin());
            if (col == src.elements.size()) throw invalid_input("differential_as_morphism: generator not in basis");
            for (std::size_t row = 0; row < dst.size(); ++row) {
                const auto &p = C.d(static_cast<std::size_t>(j))(row, col);
                if (p.is_zero()) continue;
                auto [h, pi] = lookup.locate(dst.elements[row]);
                img.add(BasisOrderKey{static_cast<int>(h) + 1, pi}, p);
            }
        }
        images.push_back(std::move(img));
    }
    out.morphism = ModuleMorphism(std::move(dom_free), std::move(cod_free), std::move(images));
    return out;
}

} // namespace oikomplex

#endif
