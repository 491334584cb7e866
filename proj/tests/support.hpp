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

#ifndef OIKOMPLEX_TESTS_SUPPORT_HPP
#define OIKOMPLEX_TESTS_SUPPORT_HPP

// Test helpers and an independent classical Buchsbaum-Eisenbud oracle over ℚ
// (bitmask subsets, exponent-vector monomials, elimination determinants).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oikomplex/oikomplex.hpp"

namespace support {

using namespace oikomplex;

inline std::string fixture(const std::string &name) { return std::string(OIKOMPLEX_FIXTURES) + "/" + name + ".json"; }

inline ModuleMorphism load(const std::string &name) { return io::load_morphism(fixture(name)); }

/// φ: A^n -> A^r over X(1) with constant coordinate matrix a (r × n).
inline ModuleMorphism constant_phi(const RationalMatrix &a)
{
    auto sig = AlgebraSignature::parse("1");
    auto F = FreeOIModule::from_widths(sig, std::vector<int>(a.cols(), 0));
    auto G = FreeOIModule::width_zero(sig, static_cast<int>(a.rows()));
    std::vector<ModuleElement> images;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        ModuleElement m{0, {}};
        for (std::size_t k = 0; k < a.rows(); ++k)
            m.add(BasisOrderKey{static_cast<int>(k) + 1, OIMorphism(0, {})}, Polynomial::constant(a(k, j), 0));
        images.push_back(std::move(m));
    }
    return {F, G, images};
}

inline RationalMatrix random_matrix(std::size_t r, std::size_t n, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    RationalMatrix a(r, n, Rational(0));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            a(k, j) = q;
        }
    return a;
}

inline RationalMatrix constants(const PolyMatrix &m)
{
    RationalMatrix out(m.rows(), m.cols(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).constant_term();
    return out;
}

// ---------------------------------------------------------------------------
// Classical oracle.

namespace oracle {

using Tuple = std::vector<int>;
using Key = std::vector<Tuple>;

inline std::vector<Tuple> subsets(int n, int k)
{
    std::vector<Tuple> out;
    if (k < 0 || k > n) return out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        Tuple t;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) t.push_back(b);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Degree-q monomials in r variables as sorted index tuples, from exponent vectors.
inline std::vector<Tuple> monomials(int r, int q)
{
    std::vector<Tuple> out;
    if (r == 0) {
        if (q == 0) out.push_back({});
        return out;
    }
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    for (;;) {
        int sum = 0;
        for (int x : e) sum += x;
        if (sum == q) {
            Tuple t;
            for (int k = 0; k < r; ++k) t.insert(t.end(), static_cast<std::size_t>(e[static_cast<std::size_t>(k)]), k);
            out.push_back(t);
        }
        int k = 0;
        while (k < r && e[static_cast<std::size_t>(k)] == q) e[static_cast<std::size_t>(k++)] = 0;
        if (k == r) break;
        ++e[static_cast<std::size_t>(k)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Key> product(const std::vector<std::vector<Tuple>> &factors)
{
    std::vector<Key> out{{}};
    for (const auto &f : factors) {
        std::vector<Key> next;
        for (const auto &k : out)
            for (const auto &t : f) {
                auto e = k;
                e.push_back(t);
                next.push_back(e);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Rational det(RationalMatrix m)
{
    const std::size_t n = m.rows();
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(r, k) = m(r, k) - f * m(c, k);
        }
    }
    return d;
}

/// Parity of the permutation taking the sequence `from` to `to` (same elements).
inline bool odd_permutation(const Tuple &from, const Tuple &to)
{
    std::vector<std::size_t> perm;
    for (int v : to) perm.push_back(static_cast<std::size_t>(std::find(from.begin(), from.end(), v) - from.begin()));
    std::size_t inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv % 2 == 1;
}

struct Complex {
    std::vector<std::vector<Key>> modules;
    std::vector<RationalMatrix> d; // d[j-1]: C_j -> C_{j-1}
};

inline Tuple without(const Tuple &t, std::size_t pos)
{
    Tuple o = t;
    o.erase(o.begin() + static_cast<long>(pos));
    return o;
}

/// BE^i of the matrix a (r × n) over ℚ.
inline Complex be(const RationalMatrix &a, int i)
{
    const int r = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    Complex C;
    for (int j = 0; j <= i; ++j) C.modules.push_back(product({subsets(n, j), monomials(r, i - j)}));
    Tuple all_g;
    for (int k = 0; k < r; ++k) all_g.push_back(k);
    if (n >= r + i)
        for (int p = 0; p <= n - r - i; ++p) C.modules.push_back(product({{all_g}, monomials(r, p), subsets(n, r + i + p)}));
    while (C.modules.size() > 1 && C.modules.back().empty()) C.modules.pop_back();

    auto index = [](const std::vector<Key> &basis, const Key &k) {
        return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), k) - basis.begin());
    };
    for (std::size_t j = 1; j < C.modules.size(); ++j) {
        const auto &src = C.modules[j];
        const auto &dst = C.modules[j - 1];
        RationalMatrix M(dst.size(), src.size(), Rational(0));
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto &key = src[col];
            if (static_cast<int>(j) <= i) {
                // f_J ⊗ m  ->  Σ_ℓ (-1)^{ℓ+1} f_{J∖j_ℓ} ⊗ φ(f_{j_ℓ}) m
                const auto &J = key[0];
                for (std::size_t l = 0; l < J.size(); ++l)
                    for (int k = 0; k < r; ++k) {
                        Tuple m = key[1];
                        m.push_back(k);
                        std::sort(m.begin(), m.end());
                        Rational c = a(static_cast<std::size_t>(k), static_cast<std::size_t>(J[l]));
                        if (l % 2 == 1) c = -c;
                        M(index(dst, {without(J, l), m}), col) += c;
                    }
            } else if (static_cast<int>(j) == i + 1) {
                // α_i
                const auto &J = key[2];
                for (const auto &pos : subsets(static_cast<int>(J.size()), r)) {
                    Tuple I, rest;
                    for (std::size_t t = 0; t < J.size(); ++t)
                        if (std::find(pos.begin(), pos.end(), static_cast<int>(t)) != pos.end()) I.push_back(J[t]);
                        else rest.push_back(J[t]);
                    RationalMatrix sub(static_cast<std::size_t>(r), static_cast<std::size_t>(r), Rational(0));
                    for (int x = 0; x < r; ++x)
                        for (int y = 0; y < r; ++y)
                            sub(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) =
                                a(static_cast<std::size_t>(x), static_cast<std::size_t>(I[static_cast<std::size_t>(y)]));
                    Tuple target = I;
                    target.insert(target.end(), rest.begin(), rest.end());
                    Rational c = det(sub);
                    if (odd_permutation(J, target)) c = -c;
                    M(index(dst, {rest, {}}), col) += c;
                }
            } else {
                // g*^m ⊗ f_J  ->  Σ_{k ∈ supp m} (m_k) g*^{m - e_k} ⊗ Σ_ℓ (-1)^{ℓ+1} a_{k, j_ℓ} f_{J∖j_ℓ}
                const auto &m = key[1];
                const auto &J = key[2];
                std::map<int, int> expo;
                for (int k : m) ++expo[k];
                for (const auto &[k, e] : expo) {
                    Tuple lowered = m;
                    lowered.erase(std::find(lowered.begin(), lowered.end(), k));
                    for (std::size_t l = 0; l < J.size(); ++l) {
                        Rational c = a(static_cast<std::size_t>(k), static_cast<std::size_t>(J[l])) * e;
                        if (l % 2 == 1) c = -c;
                        M(index(dst, {key[0], lowered, without(J, l)}), col) += c;
                    }
                }
            }
        }
        C.d.push_back(std::move(M));
    }
    return C;
}

/// Koszul complex of a row vector (1 × n), degrees 0..n.
inline Complex koszul(const RationalMatrix &a)
{
    const int n = static_cast<int>(a.cols());
    Complex C;
    for (int d = 0; d <= n; ++d) {
        std::vector<Key> b;
        for (auto &s : subsets(n, d)) b.push_back({s});
        C.modules.push_back(b);
    }
    for (int d = 1; d <= n; ++d) {
        const auto &src = C.modules[static_cast<std::size_t>(d)];
        const auto &dst = C.modules[static_cast<std::size_t>(d - 1)];
        RationalMatrix M(dst.size(), src.size(), Rational(0));
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto &J = src[col][0];
            for (std::size_t l = 0; l < J.size(); ++l) {
                auto pos = std::lower_bound(dst.begin(), dst.end(), Key{without(J, l)}) - dst.begin();
                Rational c = a(0, static_cast<std::size_t>(J[l]));
                M(static_cast<std::size_t>(pos), col) += l % 2 == 0 ? c : Rational(-c);
            }
        }
        C.d.push_back(std::move(M));
    }
    return C;
}

/// Symbolic Koszul complex on a sequence of polynomials, bases = subsets in lex order.
inline std::vector<PolyMatrix> symbolic_koszul(const std::vector<Polynomial> &seq, int w)
{
    const int n = static_cast<int>(seq.size());
    std::vector<std::vector<std::vector<int>>> bases(static_cast<std::size_t>(n + 1));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> t;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) t.push_back(b);
        bases[t.size()].push_back(t);
    }
    for (auto &b : bases) std::sort(b.begin(), b.end());
    std::vector<PolyMatrix> out;
    for (int d = 1; d <= n; ++d) {
        const auto &src = bases[static_cast<std::size_t>(d)];
        const auto &dst = bases[static_cast<std::size_t>(d - 1)];
        PolyMatrix M(dst.size(), src.size(), Polynomial(w));
        for (std::size_t c = 0; c < src.size(); ++c)
            for (std::size_t l = 0; l < src[c].size(); ++l) {
                auto t = src[c];
                t.erase(t.begin() + static_cast<long>(l));
                auto r = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), t) - dst.begin());
                M(r, c) = l % 2 == 0 ? seq[static_cast<std::size_t>(src[c][l])] : Polynomial(w) - seq[static_cast<std::size_t>(src[c][l])];
            }
        out.push_back(M);
    }
    return out;
}

} // namespace oracle

/// Whether the width-0 BE constructor on constant_phi(a) equals the oracle matrix-for-matrix.
inline bool matches_oracle(const RationalMatrix &a, int i, const BuildOptions &opt = {}, std::string *why = nullptr)
{
    auto C = be_at_width(constant_phi(a), i, 0, opt);
    auto O = oracle::be(a, i);
    auto fail = [&](const std::string &s) {
        if (why) *why = s;
        return false;
    };
    if (C.modules.size() != O.modules.size())
        return fail("length " + std::to_string(C.length()) + " vs oracle " + std::to_string(O.modules.size() - 1));
    for (std::size_t j = 0; j < O.modules.size(); ++j)
        if (C.rank(j) != O.modules[j].size()) return fail("rank of C_" + std::to_string(j));
    for (std::size_t j = 1; j < O.modules.size(); ++j)
        if (!(constants(C.d(j)) == O.d[j - 1])) return fail("d_" + std::to_string(j) + " differs");
    return true;
}

} // namespace support

#endif
