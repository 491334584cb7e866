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

#ifndef OIKOMPLEX_MULTILINEAR_HPP
#define OIKOMPLEX_MULTILINEAR_HPP

// Tensor products, exterior and symmetric powers of free OI-modules, and
// their decompositions into free modules F^{OI,n}.
//
// A basis element of Λ^{e_1}M_1 ⊗ S_{e_2}M_2 ⊗ ... at width w is one sorted
// tuple of basis keys of M_f(w) per factor (strictly increasing for Λ,
// weakly increasing for S). Post-composition with ε keeps every tuple
// sorted, so OI-morphisms act on these bases by permutation-free relabeling.
// A basis element is a free generator iff the union of the images of all
// its keys is the whole of [w]; every other basis element is the push
// forward of exactly one such generator along the inclusion of that union.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "free_mod.hpp"
#include "oi_cat.hpp"

namespace oikomplex {

namespace detail {

/// Calls f on every strictly increasing k-tuple over [0, n), lexicographically.
template <class F>
void for_each_combination(int n, int k, F &&f)
{
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        f(idx);
        int m = k - 1;
        while (m >= 0 && idx[static_cast<std::size_t>(m)] == n - k + m) --m;
        if (m < 0) return;
        ++idx[static_cast<std::size_t>(m)];
        for (int t = m + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

/// Calls f on every weakly increasing k-tuple over [0, n), lexicographically.
template <class F>
void for_each_multiset(int n, int k, F &&f)
{
    if (k < 0) return;
    if (k == 0) {
        std::vector<int> empty;
        f(empty);
        return;
    }
    if (n <= 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    for (;;) {
        f(idx);
        int m = k - 1;
        while (m >= 0 && idx[static_cast<std::size_t>(m)] == n - 1) --m;
        if (m < 0) return;
        ++idx[static_cast<std::size_t>(m)];
        for (int t = m + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(m)];
    }
}

} // namespace detail

enum class PowerKind { Wedge, Sym };

/// Λ^exponent(module) or S_exponent(module).
struct PowerFactor {
    PowerKind kind = PowerKind::Wedge;
    FreeOIModule module;
    int exponent = 1;

    std::size_t rank_at_width(int w) const
    {
        mpz_class n = static_cast<unsigned long>(module.rank_at_width(w));
        if (exponent == 0) return 1;
        if (kind == PowerKind::Wedge) return detail::binomial(n.get_si(), exponent).get_ui();
        return detail::binomial(n.get_si() + exponent - 1, exponent).get_ui();
    }
};

/// A basis element: one sorted key tuple per factor, all at the same width.
struct Element {
    int width = 0;
    std::vector<std::vector<BasisOrderKey>> parts;

    friend bool operator==(const Element &, const Element &) = default;
    friend auto operator<=>(const Element &a, const Element &b)
    {
        if (auto c = a.width <=> b.width; c != 0) return c;
        return a.parts <=> b.parts;
    }

    /// Union of the images of all keys.
    std::vector<int> image_union() const
    {
        std::vector<const OIMorphism *> maps;
        for (const auto &part : parts)
            for (const auto &k : part) maps.push_back(&k.morphism);
        return oikomplex::image_union(maps);
    }

    bool has_full_image() const { return static_cast<int>(image_union().size()) == width; }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t f = 0; f < parts.size(); ++f) {
            if (f) s += " (x) ";
            s += "{";
            for (std::size_t t = 0; t < parts[f].size(); ++t) {
                if (t) s += ",";
                s += parts[f][t].to_string();
            }
            s += "}";
        }
        return s;
    }
};

inline Element push_forward(const Element &e, const OIMorphism &eps)
{
    if (e.width != eps.source()) throw width_mismatch("push_forward: element width differs from source of eps");
    Element out{eps.target(), {}};
    out.parts.reserve(e.parts.size());
    for (const auto &part : e.parts) {
        std::vector<BasisOrderKey> p;
        p.reserve(part.size());
        for (const auto &k : part) p.push_back(push_forward(k, eps));
        out.parts.push_back(std::move(p));
    }
    return out;
}

/// Full-image form: returns (e', ε) with ε the inclusion of the image union
/// and ε_*(e') = e.
inline std::pair<Element, OIMorphism> compress(const Element &e)
{
    auto eps = inclusion_onto(e.image_union(), e.width);
    Element out{eps.source(), {}};
    for (const auto &part : e.parts) {
        std::vector<BasisOrderKey> p;
        for (const auto &k : part) p.push_back({k.generator, factor_through(eps, k.morphism)});
        out.parts.push_back(std::move(p));
    }
    return {std::move(out), std::move(eps)};
}

/// Width-w basis of a construction, with each element also given as index
/// tuples into the factor modules' width-w bases.
struct ConstructionBasis {
    int width = 0;
    std::vector<std::vector<BasisOrderKey>> factor_bases;
    std::vector<Element> elements;
    std::vector<std::vector<std::vector<int>>> indices;
    std::map<std::vector<std::vector<int>>, std::size_t> position;

    std::size_t size() const noexcept { return elements.size(); }

    std::size_t index_of(const std::vector<std::vector<int>> &idx) const { return position.at(idx); }
};

/// Λ^{e_1}M_1 ⊗ ... ⊗ S_{e_k}M_k (each factor wedge or symmetric) over one algebra.
class Construction {
public:
    Construction() = default;
    explicit Construction(std::vector<PowerFactor> factors) : factors_(std::move(factors))
    {
        for (const auto &f : factors_) {
            if (f.exponent < 0) throw invalid_input("construction: negative exponent");
            if (!(f.module.algebra() == factors_.front().module.algebra()))
                throw algebra_mismatch("construction: factors over different algebras");
        }
    }

    static Construction plain(const FreeOIModule &F) { return Construction({{PowerKind::Wedge, F, 1}}); }
    static Construction wedge(const FreeOIModule &F, int i) { return Construction({{PowerKind::Wedge, F, i}}); }
    static Construction sym(const FreeOIModule &F, int q) { return Construction({{PowerKind::Sym, F, q}}); }
    static Construction tensor(const FreeOIModule &F, const FreeOIModule &G)
    {
        if (!(F.algebra() == G.algebra())) throw algebra_mismatch("tensor: modules over different algebras");
        return Construction({{PowerKind::Wedge, F, 1}, {PowerKind::Wedge, G, 1}});
    }

    const std::vector<PowerFactor> &factors() const noexcept { return factors_; }

    /// Closed-form rank of the width-w component.
    mpz_class rank_at_width(int w) const
    {
        mpz_class r = 1;
        for (const auto &f : factors_) r *= static_cast<unsigned long>(f.rank_at_width(w));
        return r;
    }

    /// The rank formula as text, e.g. "C(C(w,3),2)" or "C(w,2)*C(w,3)".
    std::string rank_formula() const
    {
        std::string s;
        for (const auto &f : factors_) {
            std::map<int, int> count;
            for (const auto &g : f.module.generators()) ++count[g.width];
            std::string r;
            for (const auto &[n, c] : count) {
                if (!r.empty()) r += "+";
                if (c != 1) r += std::to_string(c) + "*";
                r += "C(w," + std::to_string(n) + ")";
            }
            if (r.empty()) r = "0";
            std::string term;
            if (f.exponent == 0) term = "1";
            else if (f.exponent == 1) term = r;
            else if (f.kind == PowerKind::Wedge) term = "C(" + r + "," + std::to_string(f.exponent) + ")";
            else term = "C(" + r + "+" + std::to_string(f.exponent - 1) + "," + std::to_string(f.exponent) + ")";
            if (!s.empty()) s += "*";
            s += (count.size() > 1 && f.exponent == 1 && factors_.size() > 1) ? "(" + term + ")" : term;
        }
        return s.empty() ? "1" : s;
    }

    ConstructionBasis basis_at_width(int w) const
    {
        ConstructionBasis out;
        out.width = w;
        std::vector<std::vector<std::vector<int>>> per_factor;
        for (const auto &f : factors_) {
            out.factor_bases.push_back(f.module.basis_at_width(w));
            int n = static_cast<int>(out.factor_bases.back().size());
            std::vector<std::vector<int>> tuples;
            auto collect = [&](const std::vector<int> &t) { tuples.push_back(t); };
            if (f.kind == PowerKind::Wedge) detail::for_each_combination(n, f.exponent, collect);
            else detail::for_each_multiset(n, f.exponent, collect);
            per_factor.push_back(std::move(tuples));
        }
        std::vector<std::vector<int>> current;
        std::function<void(std::size_t)> rec = [&](std::size_t f) {
            if (f == per_factor.size()) {
                Element e{w, {}};
                for (std::size_t k = 0; k < current.size(); ++k) {
                    std::vector<BasisOrderKey> part;
                    for (int idx : current[k]) part.push_back(out.factor_bases[k][static_cast<std::size_t>(idx)]);
                    e.parts.push_back(std::move(part));
                }
                out.position.emplace(current, out.elements.size());
                out.elements.push_back(std::move(e));
                out.indices.push_back(current);
                return;
            }
            for (const auto &t : per_factor[f]) {
                current.push_back(t);
                rec(f + 1);
                current.pop_back();
            }
        };
        rec(0);
        return out;
    }

    /// Sum of generator shifts over all keys of e.
    int degree(const Element &e) const
    {
        int d = 0;
        for (std::size_t f = 0; f < e.parts.size(); ++f)
            for (const auto &k : e.parts[f]) d += factors_[f].module.key_degree(k);
        return d;
    }

private:
    std::vector<PowerFactor> factors_;
};

/// A free generator of a decomposition: element of width `width` with full image.
struct Witness {
    int width = 0;
    int shift = 0;
    Element element;
};

struct Summand {
    int width = 0;
    int shift = 0;
    int multiplicity = 0;
    friend bool operator==(const Summand &, const Summand &) = default;
};

/// Isomorphism type ⊕ F^{OI,n}(-a)^{mult} plus the explicit generators realizing it.
struct FreeDecomposition {
    std::vector<Witness> witnesses;

    /// Summands sorted by (width, shift).
    std::vector<Summand> summands() const
    {
        std::map<std::pair<int, int>, int> count;
        for (const auto &g : witnesses) ++count[{g.width, g.shift}];
        std::vector<Summand> out;
        for (const auto &[k, m] : count) out.push_back({k.first, k.second, m});
        return out;
    }

    /// Multiplicity per generator width (shifts merged).
    std::map<int, int> width_multiplicities() const
    {
        std::map<int, int> out;
        for (const auto &g : witnesses) ++out[g.width];
        return out;
    }

    std::size_t rank() const noexcept { return witnesses.size(); }

    /// Σ mult · C(w, n).
    mpz_class rank_at_width(int w) const
    {
        mpz_class r = 0;
        for (const auto &g : witnesses) r += detail::binomial(w, g.width);
        return r;
    }

    /// The decomposition as a free module with one generator per witness.
    FreeOIModule as_free_module(const AlgebraSignature &algebra) const
    {
        std::vector<Generator> gens;
        for (const auto &g : witnesses) gens.push_back({g.width, g.shift, g.element.to_string()});
        return {algebra, std::move(gens)};
    }

    /// "widths {4:6, 5:15, 6:10}, rank 31".
    std::string summary() const
    {
        std::string s = "widths {";
        bool first = true;
        for (const auto &[w, m] : width_multiplicities()) {
            if (!first) s += ", ";
            first = false;
            s += std::to_string(w) + ":" + std::to_string(m);
        }
        return s + "}, rank " + std::to_string(rank());
    }

    /// "3*C(w,3) + 12*C(w,4) + 10*C(w,5)".
    std::string rank_expression() const
    {
        std::string s;
        for (const auto &[w, m] : width_multiplicities()) {
            if (!s.empty()) s += " + ";
            if (m != 1) s += std::to_string(m) + "*";
            s += "C(w," + std::to_string(w) + ")";
        }
        return s.empty() ? "0" : s;
    }
};

namespace detail {

enum class Combine { Concatenate, Merge };

/// Free generators of (⊕ a) ⊗ (⊕ b): for each pair of generators (a at width u,
/// b at width v) the pairs (μ_*a, ν_*b) with im μ ∪ im ν = [w], max(u,v) ≤ w ≤ u+v.
/// Merge joins the first parts of both sides into one tuple (the b keys must
/// sort after the a keys); Concatenate keeps the factors apart.
inline std::vector<Witness> tensor_witnesses(const std::vector<Witness> &as, const std::vector<Witness> &bs,
                                             Combine how)
{
    std::vector<Witness> out;
    for (const auto &a : as)
        for (const auto &b : bs)
            for (int w = std::max(a.width, b.width); w <= a.width + b.width; ++w) {
                auto homs_a = enumerate_hom(a.width, w);
                auto homs_b = enumerate_hom(b.width, w);
                for (const auto &mu : homs_a)
                    for (const auto &nu : homs_b) {
                        if (static_cast<int>(image_union({&mu, &nu}).size()) != w) continue;
                        auto ea = push_forward(a.element, mu);
                        auto eb = push_forward(b.element, nu);
                        Element e{w, {}};
                        if (how == Combine::Concatenate) {
                            e.parts = std::move(ea.parts);
                            for (auto &p : eb.parts) e.parts.push_back(std::move(p));
                        } else {
                            std::vector<BasisOrderKey> part = ea.parts.empty() ? std::vector<BasisOrderKey>{} : ea.parts[0];
                            if (!eb.parts.empty()) part.insert(part.end(), eb.parts[0].begin(), eb.parts[0].end());
                            e.parts.push_back(std::move(part));
                        }
                        out.push_back({w, a.shift + b.shift, std::move(e)});
                    }
            }
    return out;
}

/// Generators of Λ^i F^{OI,d} (kind Wedge) or S_i F^{OI,d} (kind Sym) for
/// generator j of a module: sorted i-tuples of Hom(d, w) with full image union.
inline std::vector<Witness> power_rank_one(PowerKind kind, int j, int d, int shift, int i)
{
    std::vector<Witness> out;
    if (i == 0) {
        out.push_back({0, 0, Element{0, {{}}}});
        return out;
    }
    for (int w = 0; w <= d * i; ++w) {
        auto homs = enumerate_hom(d, w);
        int n = static_cast<int>(homs.size());
        auto visit = [&](const std::vector<int> &t) {
            std::vector<const OIMorphism *> maps;
            for (int k : t) maps.push_back(&homs[static_cast<std::size_t>(k)]);
            if (static_cast<int>(image_union(maps).size()) != w) return;
            std::vector<BasisOrderKey> part;
            for (int k : t) part.push_back({j, homs[static_cast<std::size_t>(k)]});
            out.push_back({w, shift * i, Element{w, {std::move(part)}}});
        };
        if (kind == PowerKind::Wedge) for_each_combination(n, i, visit);
        else for_each_multiset(n, i, visit);
    }
    return out;
}

/// Λ^i or S_i of the sum of generators [first, rank] of F, by splitting off
/// the first generator: P_i(M ⊕ N) ≅ ⊕_{t=0}^{i} P_{i-t}(M) ⊗ P_t(N), t ascending.
inline std::vector<Witness> power_decompose(PowerKind kind, const FreeOIModule &F, int first, int i)
{
    if (first > F.rank()) {
        std::vector<Witness> out;
        if (i == 0) out.push_back({0, 0, Element{0, {{}}}});
        return out;
    }
    const auto &g = F.generator(first);
    std::vector<Witness> out;
    for (int t = 0; t <= i; ++t) {
        auto head = power_rank_one(kind, first, g.width, g.shift, i - t);
        auto tail = power_decompose(kind, F, first + 1, t);
        auto piece = tensor_witnesses(head, tail, Combine::Merge);
        out.insert(out.end(), std::make_move_iterator(piece.begin()), std::make_move_iterator(piece.end()));
    }
    return out;
}

inline std::vector<Witness> generator_witnesses(const FreeOIModule &F)
{
    std::vector<Witness> out;
    for (int j = 1; j <= F.rank(); ++j) {
        const auto &g = F.generator(j);
        out.push_back({g.width, g.shift, Element{g.width, {{BasisOrderKey{j, OIMorphism::identity(g.width)}}}}});
    }
    return out;
}

} // namespace detail

/// F ⊗ F': generators e_μ ⊗ e_ν with im μ ∪ im ν = [w], distributed over the summands.
inline FreeDecomposition tensor_decompose(const FreeOIModule &F, const FreeOIModule &G)
{
    if (!(F.algebra() == G.algebra())) throw algebra_mismatch("tensor_decompose: modules over different algebras");
    return {detail::tensor_witnesses(detail::generator_witnesses(F), detail::generator_witnesses(G),
                                     detail::Combine::Concatenate)};
}

/// Λ^i F: wedges e_{ε_1} ∧ ... ∧ e_{ε_i} (ε_1 < ... < ε_i) with full image union.
inline FreeDecomposition wedge_decompose(const FreeOIModule &F, int i)
{
    if (i < 0) throw invalid_input("wedge_decompose: negative exponent");
    return {detail::power_decompose(PowerKind::Wedge, F, 1, i)};
}

/// S_q F: monomials e_{ε_1} ⋯ e_{ε_q} (ε_1 ≤ ... ≤ ε_q) with full image union.
inline FreeDecomposition sym_decompose(const FreeOIModule &F, int q)
{
    if (q < 0) throw invalid_input("sym_decompose: negative exponent");
    return {detail::power_decompose(PowerKind::Sym, F, 1, q)};
}

/// Decomposition of an arbitrary construction: factor by factor, then tensored.
inline FreeDecomposition decompose(const Construction &c)
{
    std::vector<Witness> acc{{0, 0, Element{0, {}}}};
    for (const auto &f : c.factors()) {
        auto piece = detail::power_decompose(f.kind, f.module, 1, f.exponent);
        acc = detail::tensor_witnesses(acc, piece, detail::Combine::Concatenate);
    }
    return {std::move(acc)};
}

/// Writes each width-w basis element of a construction as π_*(generator):
/// returns, per basis element, the witness index and π.
struct GeneratorLookup {
    std::map<Element, std::size_t> by_element;

    explicit GeneratorLookup(const FreeDecomposition &d)
    {
        for (std::size_t k = 0; k < d.witnesses.size(); ++k) by_element.emplace(d.witnesses[k].element, k);
    }

    std::pair<std::size_t, OIMorphism> locate(const Element &e) const
    {
        auto [g, eps] = compress(e);
        auto it = by_element.find(g);
        if (it == by_element.end()) throw invalid_input("element " + e.to_string() + " is not a push forward of a generator");
        return {it->second, std::move(eps)};
    }
};

/// G* for G generated in width 0, with the isomorphism g_j -> g_j^*.
struct DualModule {
    FreeOIModule dual;
    std::vector<std::pair<int, int>> iso; ///< (j, j): g_j maps to g_j^*

    /// g_i^*(e_{id_0} ⊗ g_j).
    static Rational pairing(int i, int j) { return i == j ? 1 : 0; }
};

inline DualModule dual_width0(const FreeOIModule &G)
{
    std::vector<Generator> gens;
    DualModule out;
    for (int j = 1; j <= G.rank(); ++j) {
        const auto &g = G.generator(j);
        if (g.width != 0)
            throw invalid_input("dual_width0: generator " + std::to_string(j) + " has width " + std::to_string(g.width) +
                                "; only modules generated in width 0 are isomorphic to their duals");
        gens.push_back({0, -g.shift, g.label + "*"});
        out.iso.emplace_back(j, j);
    }
    out.dual = FreeOIModule(G.algebra(), std::move(gens));
    return out;
}

struct IdentityRow {
    int width = 0;
    mpz_class lhs;
    mpz_class rhs;
};

struct IdentityReport {
    bool passed = true;
    std::optional<int> first_failure; ///< smallest w with lhs ≠ rhs
    std::string identity;             ///< "lhs = rhs"
    std::vector<IdentityRow> rows;
};

/// Checks Σ mult·C(w, n) = rank_formula(w) for 0 ≤ w ≤ wmax.
inline IdentityReport certify_rank_identity(const FreeDecomposition &d, const std::string &lhs_text,
                                            const std::function<mpz_class(int)> &rank_formula, int wmax)
{
    IdentityReport r;
    r.identity = lhs_text + " = " + d.rank_expression();
    for (int w = 0; w <= wmax; ++w) {
        IdentityRow row{w, rank_formula(w), d.rank_at_width(w)};
        if (row.lhs != row.rhs && r.passed) {
            r.passed = false;
            r.first_failure = w;
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

inline IdentityReport certify_rank_identity(const FreeDecomposition &d, const Construction &c, int wmax)
{
    return certify_rank_identity(d, c.rank_formula(), [&](int w) { return c.rank_at_width(w); }, wmax);
}

} // namespace oikomplex

#endif
