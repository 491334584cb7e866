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

#ifndef OIKOMPLEX_VERIFY_HPP
#define OIKOMPLEX_VERIFY_HPP

// Checks on width complexes: d∘d = 0, gradedness, minimality, naturality,
// and a probabilistic generic-acyclicity probe by exact rank computation
// at random rational points.

#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "complexes.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "oi_algebra.hpp"
#include "polyring.hpp"

namespace oikomplex {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness; ///< empty on pass
};

/// d_{j-1} d_j = 0 for all j.
inline CheckResult check_dd_zero(const WidthComplex &C)
{
    CheckResult out{"d^2=0", true, {}};
    const Polynomial zero(C.width);
    for (std::size_t j = 2; j <= C.length(); ++j) {
        auto prod = multiply(C.d(j - 1), C.d(j), zero);
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                if (!prod(r, c).is_zero()) {
                    std::ostringstream os;
                    os << "w=" << C.width << ": (d_" << j - 1 << " d_" << j << ")[" << r << "," << c
                       << "] = " << prod(r, c).to_string() << " (column " << C.modules[j].labels[c] << ")";
                    return {out.name, false, os.str()};
                }
    }
    return out;
}

/// Every entry of d_j at (row, col) is homogeneous of degree deg(col) - deg(row).
inline CheckResult check_graded(const WidthComplex &C)
{
    for (std::size_t j = 1; j <= C.length(); ++j) {
        const auto &d = C.d(j);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c) {
                const int expected = C.modules[j].degrees[c] - C.modules[j - 1].degrees[r];
                if (!is_homogeneous_of_degree(d(r, c), expected, C.grading)) {
                    std::ostringstream os;
                    os << "w=" << C.width << ": d_" << j << "[" << r << "," << c << "] = " << d(r, c).to_string()
                       << " is not homogeneous of degree " << expected;
                    return {"graded", false, os.str()};
                }
            }
    }
    return {"graded", true, {}};
}

struct MinimalityResult {
    bool passed = true;
    std::vector<std::string> offenders;
};

/// Pass iff no differential entry has a nonzero constant term.
inline MinimalityResult check_minimality(const WidthComplex &C)
{
    MinimalityResult out;
    for (std::size_t j = 1; j <= C.length(); ++j) {
        const auto &d = C.d(j);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                if (d(r, c).constant_term() != 0) {
                    out.passed = false;
                    std::ostringstream os;
                    os << "w=" << C.width << ": d_" << j << "[" << r << "," << c << "] = " << d(r, c).to_string();
                    out.offenders.push_back(os.str());
                }
    }
    return out;
}

/// ε_* d_j(w) = d_j(w+1) ε_* for every recorded transition ε: w -> w+1.
inline CheckResult check_naturality(const OIComplex &K)
{
    CheckResult out{"naturality", true, {}};
    for (const auto &t : K.transitions) {
        const auto &lo = K.widths[static_cast<std::size_t>(t.from_width)];
        const auto &hi = K.widths[static_cast<std::size_t>(t.from_width + 1)];
        for (std::size_t j = 1; j <= lo.length(); ++j) {
            if (j > hi.length()) {
                out.passed = false;
                out.witness = "d_" + std::to_string(j) + " missing at width " + std::to_string(t.from_width + 1);
                return out;
            }
            if (auto f = check_square(lo.d(j), hi.d(j), t.eps, t.module_maps[j], t.module_maps[j - 1])) {
                std::ostringstream os;
                os << "eps=" << t.eps.to_string() << ", d_" << j << ", column " << lo.modules[j].labels[f->column]
                   << ", row " << f->row << ": expected " << f->expected << ", got " << f->actual;
                out.passed = false;
                out.witness = os.str();
                return out;
            }
        }
    }
    return out;
}

inline RationalMatrix evaluate_differential(const WidthComplex &C, std::size_t j, const Point &p)
{
    return evaluate(C.d(j), p);
}

/// rank H_j of C ⊗ k(p) for j = 0..L.
inline std::vector<std::size_t> homology_at_point(const WidthComplex &C, const Point &p)
{
    const std::size_t L = C.length();
    std::vector<std::size_t> ranks(L + 2, 0); // ranks[j] = rank d_j
    for (std::size_t j = 1; j <= L; ++j) ranks[j] = rank(evaluate(C.d(j), p));
    std::vector<std::size_t> h;
    for (std::size_t j = 0; j <= L; ++j) h.push_back(C.rank(j) - ranks[j] - ranks[j + 1]);
    return h;
}

inline std::size_t homology_at_point(const WidthComplex &C, const Point &p, std::size_t j)
{
    if (j > C.length()) return 0;
    return homology_at_point(C, p)[j];
}

/// Deterministic point indexed by (seed, width, trial): numerators 1..box,
/// denominators 1..max_denominator, so every coordinate is nonzero.
inline Point random_point(const AlgebraSignature &sig, int w, std::uint64_t seed, int trial, long box = 10000,
                          long max_denominator = 100)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> num(1, box), den(1, max_denominator);
    Point p;
    for (auto &v : variables_at_width(sig, w)) {
        long a = num(rng);
        long b = den(rng);
        Rational q(a, b);
        q.canonicalize();
        p.emplace(std::move(v), q);
    }
    return p;
}

inline std::string point_to_string(const Point &p)
{
    std::string s = "{";
    for (const auto &[v, q] : p) {
        if (s.size() > 1) s += ", ";
        s += v.to_string() + "=" + to_string(q);
    }
    return s + "}";
}

struct HomologySample {
    int width = 0;
    int trial = 0;
    std::vector<std::size_t> homology;
    bool euler_ok = true;
    std::string point;
};

struct WidthSummary {
    int width = 0;
    std::vector<std::size_t> ranks;
    bool dd_zero = true;
    bool graded = true;
    bool minimal = true;
    bool acyclic = true; ///< all trials gave H_j = 0 for j ≥ 1
    std::optional<bool> strand_exact; ///< set when the graded-strand check ran
    std::vector<std::string> minimality_offenders;
};

struct VerificationReport {
    std::string certificate;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<CheckResult> checks;
    std::vector<HomologySample> homology;
    std::vector<WidthSummary> widths;

    bool passed() const
    {
        for (const auto &c : checks)
            if (!c.passed) return false;
        return true;
    }

    const CheckResult *find(const std::string &name) const
    {
        for (const auto &c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline std::vector<HomologySample> probe_width(const WidthComplex &C, const AlgebraSignature &sig, int trials,
                                               std::uint64_t seed)
{
    std::vector<HomologySample> out;
    for (int t = 0; t < trials; ++t) {
        auto p = random_point(sig, C.width, seed, t);
        HomologySample s{C.width, t, homology_at_point(C, p), true, point_to_string(p)};
        long chi_c = 0, chi_h = 0;
        for (std::size_t j = 0; j < s.homology.size(); ++j) {
            long sign = j % 2 == 0 ? 1 : -1;
            chi_c += sign * static_cast<long>(C.rank(j));
            chi_h += sign * static_cast<long>(s.homology[j]);
        }
        s.euler_ok = chi_c == chi_h;
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace detail

/// Generic-acyclicity probe over every width of K: exact in degrees ≥ 1 at
/// all `trials` random points. Probabilistic certificate, not a proof.
inline VerificationReport probe_generic_acyclicity(const OIComplex &K, int trials, std::uint64_t seed)
{
    if (trials < 1) throw invalid_input("probe_generic_acyclicity: trials must be at least 1");
    VerificationReport rep;
    rep.seed = seed;
    rep.trials = trials;
    rep.certificate = "probabilistic certificate (" + std::to_string(trials) + " trials, seed " + std::to_string(seed) + ")";
    const auto &sig = K.spec.phi.domain().algebra();

    std::vector<std::future<std::vector<HomologySample>>> jobs;
    for (const auto &C : K.widths)
        jobs.push_back(std::async(std::launch::async, [&C, &sig, trials, seed] {
            return detail::probe_width(C, sig, trials, seed);
        }));

    CheckResult acyclic{"acyclic-probe", true, {}};
    CheckResult euler{"euler-characteristic", true, {}};
    for (std::size_t w = 0; w < jobs.size(); ++w) {
        WidthSummary ws;
        ws.width = static_cast<int>(w);
        ws.ranks = K.widths[w].ranks();
        for (auto &s : jobs[w].get()) {
            for (std::size_t j = 1; j < s.homology.size(); ++j)
                if (s.homology[j] != 0) {
                    ws.acyclic = false;
                    if (acyclic.passed) {
                        acyclic.passed = false;
                        acyclic.witness = "not generically acyclic: w=" + std::to_string(w) + ", H_" + std::to_string(j) +
                                          " has rank " + std::to_string(s.homology[j]) + " at trial " +
                                          std::to_string(s.trial) + " (seed " + std::to_string(seed) + "), point " + s.point;
                    }
                }
            if (!s.euler_ok && euler.passed) {
                euler.passed = false;
                euler.witness = "w=" + std::to_string(w) + ", trial " + std::to_string(s.trial);
            }
            rep.homology.push_back(std::move(s));
        }
        rep.widths.push_back(std::move(ws));
    }
    rep.checks.push_back(acyclic);
    rep.checks.push_back(euler);
    return rep;
}

inline VerificationReport probe_generic_acyclicity(const OIComplexSpec &spec, int wmax, int trials, std::uint64_t seed)
{
    return probe_generic_acyclicity(assemble_oi_complex(spec, wmax), trials, seed);
}

namespace detail {

inline void monomials_of_degree(const std::vector<VariableId> &vars, const Grading &g, std::size_t from, int degree,
                                Monomial &current, std::vector<Monomial> &out)
{
    if (degree == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t k = from; k < vars.size(); ++k) {
        const int dv = g(vars[k]);
        if (dv <= 0) throw invalid_input("graded strand: variables must have positive degree");
        if (dv > degree) continue;
        bool extended = !current.powers.empty() && current.powers.back().first == vars[k];
        if (extended) ++current.powers.back().second;
        else current.powers.emplace_back(vars[k], 1);
        monomials_of_degree(vars, g, k, degree - dv, current, out);
        if (extended) --current.powers.back().second;
        else current.powers.pop_back();
    }
}

struct Strand {
    std::vector<std::pair<std::size_t, Monomial>> basis; // (module basis index, monomial)
    std::map<std::pair<std::size_t, Monomial>, std::size_t> position;
};

inline Strand strand(const WidthComplex &C, std::size_t j, int t, const std::vector<VariableId> &vars)
{
    Strand s;
    if (j >= C.modules.size()) return s;
    for (std::size_t b = 0; b < C.modules[j].rank(); ++b) {
        const int need = t - C.modules[j].degrees[b];
        if (need < 0) continue;
        std::vector<Monomial> monos;
        Monomial cur;
        monomials_of_degree(vars, C.grading, 0, need, cur, monos);
        for (auto &m : monos) {
            s.position.emplace(std::make_pair(b, m), s.basis.size());
            s.basis.emplace_back(b, std::move(m));
        }
    }
    return s;
}

inline std::size_t strand_rank(const WidthComplex &C, std::size_t j, const Strand &src, const Strand &dst)
{
    if (j == 0 || j > C.length() || src.basis.empty() || dst.basis.empty()) return 0;
    RationalMatrix M(dst.basis.size(), src.basis.size(), Rational(0));
    const auto &d = C.d(j);
    for (std::size_t col = 0; col < src.basis.size(); ++col) {
        const auto &[b, m] = src.basis[col];
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (const auto &[mono, c] : d(r, b).terms()) {
                auto it = dst.position.find({r, mono * m});
                if (it == dst.position.end())
                    throw invalid_input("graded strand: differential is not graded");
                M(it->second, col) += c;
            }
    }
    return rank(M);
}

} // namespace detail

/// Variables occurring in some differential entry, sorted.
inline std::vector<VariableId> occurring_variables(const WidthComplex &C)
{
    std::set<VariableId> seen;
    for (const auto &d : C.differentials)
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                for (const auto &[m, q] : d(r, c).terms())
                    for (const auto &[v, e] : m.powers) seen.insert(v);
    return {seen.begin(), seen.end()};
}

/// Exact dimension over ℚ of H_j(C) in internal degree t, with C viewed over
/// the polynomial ring in `vars` (C must be graded, vars of positive degree).
inline std::size_t graded_homology(const WidthComplex &C, std::size_t j, int t, std::vector<VariableId> vars)
{
    std::sort(vars.begin(), vars.end());
    auto here = detail::strand(C, j, t, vars);
    auto below = j == 0 ? detail::Strand{} : detail::strand(C, j - 1, t, vars);
    auto above = detail::strand(C, j + 1, t, vars);
    const std::size_t out_rank = detail::strand_rank(C, j, here, below);
    const std::size_t in_rank = detail::strand_rank(C, j + 1, above, here);
    return here.basis.size() - out_rank - in_rank;
}

inline std::size_t graded_homology(const WidthComplex &C, std::size_t j, int t)
{
    return graded_homology(C, j, t, occurring_variables(C));
}

/// Refutation check for exactness: searches internal degrees
/// [min degree of C_j, + span] for nonzero H_j, j ≥ 1, over the ring of the
/// occurring variables (a flat extension to A(w) preserves the verdict).
inline CheckResult check_strand_exactness(const WidthComplex &C, int span = 1)
{
    for (std::size_t j = 1; j <= C.length(); ++j) {
        if (C.modules[j].rank() == 0) continue;
        const int lo = *std::min_element(C.modules[j].degrees.begin(), C.modules[j].degrees.end());
        for (int t = lo; t <= lo + span; ++t) {
            auto h = graded_homology(C, j, t);
            if (h != 0) {
                std::ostringstream os;
                os << "w=" << C.width << ": H_" << j << " has dimension " << h << " in internal degree " << t;
                return {"strand-exactness", false, os.str()};
            }
        }
    }
    return {"strand-exactness", true, {}};
}

struct VerifyOptions {
    int trials = 3;
    std::uint64_t seed = 1;
    bool strand = false; ///< also run the exact graded-strand check
    int strand_span = 1;
};

/// Full report: d²=0, graded, minimal per width; naturality; acyclicity probe.
inline VerificationReport verify_complex(const OIComplex &K, const VerifyOptions &opt = {})
{
    auto rep = probe_generic_acyclicity(K, opt.trials, opt.seed);
    CheckResult dd{"d^2=0", true, {}}, gr{"graded", true, {}}, mn{"minimal", true, {}}, st{"strand-exactness", true, {}};
    for (std::size_t w = 0; w < K.widths.size(); ++w) {
        const auto &C = K.widths[w];
        auto &ws = rep.widths[w];
        auto a = check_dd_zero(C);
        auto b = check_graded(C);
        auto m = check_minimality(C);
        ws.dd_zero = a.passed;
        ws.graded = b.passed;
        ws.minimal = m.passed;
        ws.minimality_offenders = m.offenders;
        if (!a.passed && dd.passed) dd = a;
        if (!b.passed && gr.passed) gr = b;
        if (!m.passed && mn.passed) mn = {"minimal", false, m.offenders.front()};
        if (opt.strand && b.passed) {
            auto s = check_strand_exactness(C, opt.strand_span);
            ws.strand_exact = s.passed;
            if (!s.passed && st.passed) st = s;
        }
    }
    std::vector<CheckResult> checks{dd, gr, mn, check_naturality(K)};
    if (opt.strand) checks.push_back(st);
    for (auto &c : rep.checks) checks.push_back(c);
    rep.checks = std::move(checks);
    return rep;
}

} // namespace oikomplex

#endif
