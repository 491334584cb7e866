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

#ifndef OIKOMPLEX_POLYRING_HPP
#define OIKOMPLEX_POLYRING_HPP

// Exact sparse polynomials over Q in OI-indexed variables x[i;π], i the
// tensor factor of the algebra and π ∈ Hom(d_i, w).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "matrix.hpp"
#include "oi_cat.hpp"

namespace oikomplex {

using Rational = mpq_class;

inline Rational parse_rational(std::string_view s)
{
    s = detail::trim(s);
    if (s.empty()) throw parse_error("empty rational", "rational");
    std::string str(s);
    if (str.front() == '+') str.erase(0, 1);
    for (std::size_t k = 0; k < str.size(); ++k) {
        char c = str[k];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (k == 0 && c == '-');
        if (!ok) throw parse_error("malformed rational '" + std::string(s) + "'", "rational");
    }
    Rational q;
    if (q.set_str(str, 10) != 0) throw parse_error("malformed rational '" + std::string(s) + "'", "rational");
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + std::string(s) + "'", "rational");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

/// Variable x[factor; π]. Ordered by factor, then lexicographically by im π.
struct VariableId {
    int factor = 1;
    OIMorphism morphism;

    friend bool operator==(const VariableId &, const VariableId &) = default;
    friend std::strong_ordering operator<=>(const VariableId &a, const VariableId &b)
    {
        if (auto c = a.factor <=> b.factor; c != 0) return c;
        return a.morphism <=> b.morphism;
    }

    int width() const noexcept { return morphism.target(); }

    std::string to_string() const
    {
        std::string s = "x[" + std::to_string(factor) + ";(";
        const auto &img = morphism.image();
        for (std::size_t k = 0; k < img.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(img[k]);
        }
        return s + ")]";
    }

    /// Parses "x[i;(i1,...,id)]" as a variable of A(width).
    static VariableId parse(std::string_view text, int width)
    {
        auto s = detail::trim(text);
        if (s.size() < 4 || s.substr(0, 2) != "x[" || s.back() != ']')
            throw parse_error("expected 'x[i;(...)]', got '" + std::string(s) + "'", "variable");
        auto body = s.substr(2, s.size() - 3);
        auto semi = body.find(';');
        if (semi == std::string_view::npos) throw parse_error("missing ';' in '" + std::string(s) + "'", "variable");
        int factor = detail::parse_int(body.substr(0, semi), "variable factor");
        if (factor < 1) throw parse_error("factor index must be positive", "variable");
        auto image = detail::parse_int_list(body.substr(semi + 1), '(', ')', "variable image");
        try {
            return {factor, OIMorphism(width, std::move(image))};
        } catch (const invalid_input &e) {
            throw parse_error(std::string(e.what()) + " in '" + std::string(s) + "'", "variable");
        }
    }
};

/// Sorted list of (variable, positive exponent).
struct Monomial {
    std::vector<std::pair<VariableId, int>> powers;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &a, const Monomial &b) { return a.powers <=> b.powers; }

    bool is_one() const noexcept { return powers.empty(); }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        out.powers.reserve(a.powers.size() + b.powers.size());
        auto i = a.powers.begin(), j = b.powers.begin();
        while (i != a.powers.end() && j != b.powers.end()) {
            if (i->first < j->first) out.powers.push_back(*i++);
            else if (j->first < i->first) out.powers.push_back(*j++);
            else {
                out.powers.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        out.powers.insert(out.powers.end(), i, a.powers.end());
        out.powers.insert(out.powers.end(), j, b.powers.end());
        return out;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto &[v, e] : powers) {
            if (!s.empty()) s += '*';
            s += v.to_string();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

/// Degree of each variable: by factor (default 1), optionally overridden per variable.
struct Grading {
    std::vector<int> factor_degrees;
    std::map<VariableId, int> overrides;

    int operator()(const VariableId &v) const
    {
        if (auto it = overrides.find(v); it != overrides.end()) return it->second;
        auto idx = static_cast<std::size_t>(v.factor - 1);
        return idx < factor_degrees.size() ? factor_degrees[idx] : 1;
    }

    int degree(const Monomial &m) const
    {
        int d = 0;
        for (const auto &[v, e] : m.powers) d += e * (*this)(v);
        return d;
    }
};

/// Element of A(w): finite map from monomials to nonzero rationals.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit Polynomial(int width = 0) : width_(width) {}

    static Polynomial constant(const Rational &c, int width)
    {
        Polynomial p(width);
        if (c != 0) p.terms_.emplace(Monomial{}, c);
        return p;
    }

    static Polynomial variable(const VariableId &v, int exponent = 1)
    {
        Polynomial p(v.width());
        if (exponent > 0) p.terms_.emplace(Monomial{{{v, exponent}}}, Rational(1));
        else p.terms_.emplace(Monomial{}, Rational(1));
        return p;
    }

    /// Builds from arbitrary terms, dropping zeros and merging repeats.
    static Polynomial from_terms(int width, const std::vector<std::pair<Monomial, Rational>> &terms)
    {
        Polynomial p(width);
        for (const auto &[m, c] : terms) {
            for (const auto &[v, e] : m.powers)
                if (v.width() != width) throw width_mismatch("polynomial: variable " + v.to_string() + " not in width " + std::to_string(width));
            p.add_term(m, c);
        }
        return p;
    }

    int width() const noexcept { return width_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational constant_term() const
    {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    Polynomial &operator+=(const Polynomial &q)
    {
        check_width(q, "add");
        for (const auto &[m, c] : q.terms_) add_term(m, c);
        return *this;
    }
    Polynomial &operator-=(const Polynomial &q)
    {
        check_width(q, "subtract");
        for (const auto &[m, c] : q.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial &operator*=(const Rational &c)
    {
        if (c == 0) terms_.clear();
        else
            for (auto &[m, x] : terms_) x *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial p, const Polynomial &q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial &q) { return p -= q; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
    friend Polynomial operator*(Polynomial p, const Rational &c) { return p *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial p) { return p *= c; }

    friend Polynomial operator*(const Polynomial &p, const Polynomial &q)
    {
        p.check_width(q, "multiply");
        Polynomial out(p.width_);
        for (const auto &[m1, c1] : p.terms_)
            for (const auto &[m2, c2] : q.terms_) out.add_term(m1 * m2, c1 * c2);
        return out;
    }
    Polynomial &operator*=(const Polynomial &q) { return *this = *this * q; }

    /// "c1*m1 + c2*m2 + ..." in canonical monomial order; "0" for zero.
    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto &[m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.get_str();
            if (!m.is_one()) s += "*" + m.to_string();
        }
        return s;
    }

    static Polynomial parse(std::string_view text, int width);

private:
    void check_width(const Polynomial &q, const char *op) const
    {
        if (q.width_ != width_)
            throw width_mismatch(std::string(op) + ": widths " + std::to_string(width_) + " and " +
                                 std::to_string(q.width_) + " differ");
    }

    void add_term(const Monomial &m, const Rational &c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int width_ = 0;
    Terms terms_;
};

inline Polynomial Polynomial::parse(std::string_view text, int width)
{
    auto s = detail::trim(text);
    if (s.empty()) throw parse_error("empty polynomial", "polynomial");
    std::vector<std::pair<Monomial, Rational>> terms;
    std::size_t pos = 0;
    const auto fail = [&](const std::string &msg) {
        throw parse_error(msg + " at offset " + std::to_string(pos) + " in '" + std::string(s) + "'", "polynomial");
    };
    const auto skip_ws = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    while (true) {
        skip_ws();
        bool negative = false;
        bool saw_sign = false;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            negative ^= s[pos] == '-';
            saw_sign = true;
            ++pos;
            skip_ws();
        }
        if (!terms.empty() && !saw_sign) fail("expected '+' or '-'");
        if (pos >= s.size()) fail("dangling sign");
        Rational coef(negative ? -1 : 1);
        Monomial mono;
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c >= '0' && c <= '9') {
                std::size_t start = pos;
                while (pos < s.size() && ((s[pos] >= '0' && s[pos] <= '9') || s[pos] == '/')) ++pos;
                coef *= parse_rational(s.substr(start, pos - start));
            } else if (c == 'x') {
                std::size_t close = s.find(']', pos);
                if (close == std::string_view::npos) fail("unterminated variable");
                auto v = VariableId::parse(s.substr(pos, close + 1 - pos), width);
                pos = close + 1;
                int e = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::size_t start = pos;
                    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
                    e = detail::parse_int(s.substr(start, pos - start), "exponent");
                }
                mono = mono * Monomial{{{v, e}}};
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any_factor = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any_factor) fail("empty term");
        terms.emplace_back(std::move(mono), coef);
        skip_ws();
        if (pos >= s.size()) break;
    }
    return from_terms(width, terms);
}

/// A(ε): x[i;π] -> x[i;ε∘π].
inline Polynomial push_forward(const Polynomial &p, const OIMorphism &eps)
{
    if (p.width() != eps.source())
        throw width_mismatch("push_forward: polynomial width " + std::to_string(p.width()) +
                             " differs from source " + std::to_string(eps.source()));
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        Monomial out;
        out.powers.reserve(m.powers.size());
        for (const auto &[v, e] : m.powers) out.powers.emplace_back(VariableId{v.factor, compose(eps, v.morphism)}, e);
        // Post-composition preserves the variable order, so `out` is still sorted.
        terms.emplace_back(std::move(out), c);
    }
    return Polynomial::from_terms(eps.target(), terms);
}

using Point = std::map<VariableId, Rational>;

inline Rational evaluate(const Polynomial &p, const Point &point)
{
    Rational acc(0);
    for (const auto &[m, c] : p.terms()) {
        Rational t = c;
        for (const auto &[v, e] : m.powers) {
            auto it = point.find(v);
            if (it == point.end()) throw invalid_input("evaluate: no value assigned to " + v.to_string());
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

/// Total degree (maximum over terms); nullopt for the zero polynomial, whose degree is "any".
inline std::optional<int> degree(const Polynomial &p, const Grading &g = {})
{
    std::optional<int> d;
    for (const auto &[m, c] : p.terms()) {
        int k = g.degree(m);
        if (!d || k > *d) d = k;
    }
    return d;
}

inline bool is_homogeneous(const Polynomial &p, const Grading &g = {})
{
    std::optional<int> d;
    for (const auto &[m, c] : p.terms()) {
        int k = g.degree(m);
        if (d && *d != k) return false;
        d = k;
    }
    return true;
}

/// True iff p is zero or homogeneous of degree d.
inline bool is_homogeneous_of_degree(const Polynomial &p, int d, const Grading &g = {})
{
    for (const auto &[m, c] : p.terms())
        if (g.degree(m) != d) return false;
    return true;
}

using PolyMatrix = Matrix<Polynomial>;
using RationalMatrix = Matrix<Rational>;

/// Determinant of a square polynomial matrix in A(width); the 0×0 determinant is 1.
inline Polynomial determinant(const PolyMatrix &m, int width)
{
    for (const auto &x : m.data())
        if (x.width() != width) throw width_mismatch("determinant: entry not in width " + std::to_string(width));
    return determinant(m, Polynomial::constant(1, width));
}

inline RationalMatrix evaluate(const PolyMatrix &m, const Point &point)
{
    return m.map([&](const Polynomial &p) { return evaluate(p, point); });
}

inline PolyMatrix push_forward(const PolyMatrix &m, const OIMorphism &eps)
{
    return m.map([&](const Polynomial &p) { return push_forward(p, eps); });
}

} // namespace oikomplex

#endif
