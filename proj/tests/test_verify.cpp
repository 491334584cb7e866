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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace oikomplex;
using support::load;

namespace {

OIComplexSpec koszul_spec(const std::string &name) { return {ComplexKind::Koszul, load(name), 0, std::nullopt}; }
OIComplexSpec be_spec(const std::string &name, int i) { return {ComplexKind::BE, load(name), i, std::nullopt}; }

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64 &rng)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST(CheckDdZero, FixturesPass)
{
    for (int w = 0; w <= 4; ++w) EXPECT_TRUE(check_dd_zero(koszul_at_width(load("koszul_x1"), w)).passed);
    for (int w = 0; w <= 5; ++w) EXPECT_TRUE(check_dd_zero(be_at_width(load("running"), 0, w)).passed);
}

TEST(CheckDdZero, FlippedAlphaSignFailsWithWitness)
{
    auto C = be_at_width(load("running"), 0, 4, {Mutation::AlphaColumnNegated});
    auto r = check_dd_zero(C);
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.witness.find("(d_1 d_2)["), std::string::npos) << r.witness;
    EXPECT_NE(r.witness.find("w=4"), std::string::npos);
}

TEST(CheckGraded, DetectsWrongDegree)
{
    EXPECT_TRUE(check_graded(be_at_width(load("running"), 1, 5)).passed);
    PolyMatrix d(1, 1, Polynomial::parse("x[1;(1)] + 1", 1));
    auto C = WidthComplex::from_matrices(1, {d});
    auto r = check_graded(C);
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.witness.find("d_1[0,0]"), std::string::npos);
}

TEST(CheckMinimality, FixturesAndUnitEntry)
{
    for (int w = 0; w <= 5; ++w) EXPECT_TRUE(check_minimality(be_at_width(load("running"), 0, w)).passed);
    for (int w = 0; w <= 4; ++w) EXPECT_TRUE(check_minimality(koszul_at_width(load("koszul_width2"), w)).passed);
    PolyMatrix d(2, 1, Polynomial(2));
    d(1, 0) = Polynomial::constant(3, 2);
    auto r = check_minimality(WidthComplex::from_matrices(2, {d}));
    EXPECT_FALSE(r.passed);
    ASSERT_EQ(r.offenders.size(), 1u);
    EXPECT_EQ(r.offenders[0], "w=2: d_1[1,0] = 3");
}

TEST(Homology, RegularSequenceIsExactAtPoint)
{
    auto sig = AlgebraSignature::parse("1");
    for (int w = 1; w <= 4; ++w) {
        auto C = koszul_at_width(load("koszul_x1"), w);
        auto p = random_point(sig, w, 5, 0);
        auto h = homology_at_point(C, p);
        for (std::size_t j = 0; j < h.size(); ++j) EXPECT_EQ(h[j], 0u) << "w=" << w << " j=" << j;
    }
}

TEST(Homology, ZeroComplexes)
{
    auto empty = WidthComplex::from_matrices(0, {}, 0);
    EXPECT_EQ(homology_at_point(empty, {}), (std::vector<std::size_t>{0}));
    // Zero differentials between nonzero modules: H_j = rank C_j.
    auto C = WidthComplex::from_matrices(0, {PolyMatrix(2, 3, Polynomial(0)), PolyMatrix(3, 1, Polynomial(0))});
    EXPECT_EQ(homology_at_point(C, {}), (std::vector<std::size_t>{2, 3, 1}));
    EXPECT_EQ(homology_at_point(C, {}, 7), 0u);
}

TEST(Homology, MissingVariableThrows)
{
    auto C = koszul_at_width(load("koszul_x1"), 2);
    Point p{{VariableId{1, OIMorphism(2, {1})}, Rational(1)}};
    EXPECT_THROW(homology_at_point(C, p), invalid_input);
}

TEST(Homology, RankNullityAndEuler)
{
    auto sig = AlgebraSignature::parse("1,1,1");
    for (int w = 3; w <= 5; ++w)
        for (int i = 0; i <= 2; ++i) {
            auto C = be_at_width(load("running"), i, w);
            auto p = random_point(sig, w, 3, i);
            long chi = 0, chi_h = 0;
            auto h = homology_at_point(C, p);
            for (std::size_t j = 1; j <= C.length(); ++j) {
                auto m = evaluate(C.d(j), p);
                auto rk = rank(m);
                auto ker = rank(m.transpose()) == rk ? m.cols() - rk : 0;
                EXPECT_EQ(rk + ker, m.cols());
            }
            for (std::size_t j = 0; j <= C.length(); ++j) {
                chi += (j % 2 ? -1 : 1) * static_cast<long>(C.rank(j));
                chi_h += (j % 2 ? -1 : 1) * static_cast<long>(h[j]);
            }
            EXPECT_EQ(chi, chi_h);
        }
}

TEST(Homology, InvariantUnderBasisPermutation)
{
    std::mt19937_64 rng(31);
    auto sig = AlgebraSignature::parse("1,1,1");
    auto C = be_at_width(load("running"), 1, 5);
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t j = 0; j <= C.length(); ++j) perms.push_back(random_permutation(C.rank(j), rng));
    std::vector<PolyMatrix> ds;
    for (std::size_t j = 1; j <= C.length(); ++j) {
        const auto &d = C.d(j);
        PolyMatrix m(d.rows(), d.cols(), Polynomial(5));
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c) m(perms[j - 1][r], perms[j][c]) = d(r, c);
        ds.push_back(m);
    }
    auto P = WidthComplex::from_matrices(5, ds);
    for (int t = 0; t < 3; ++t) {
        auto p = random_point(sig, 5, 8, t);
        EXPECT_EQ(homology_at_point(C, p), homology_at_point(P, p));
    }
    EXPECT_TRUE(check_dd_zero(P).passed);
}

TEST(RandomPoint, DeterministicNonzeroAndComplete)
{
    auto sig = AlgebraSignature::parse("1,2");
    auto a = random_point(sig, 4, 42, 0);
    auto b = random_point(sig, 4, 42, 0);
    auto c = random_point(sig, 4, 42, 1);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    EXPECT_EQ(a.size(), variables_at_width(sig, 4).size());
    for (const auto &[v, q] : a) {
        EXPECT_NE(q, 0);
        EXPECT_GT(q, 0);
        EXPECT_LE(q, 10000);
        EXPECT_LE(q.get_den(), 100);
    }
}

TEST(Probe, RunningExampleIsGenericallyExact)
{
    auto rep = probe_generic_acyclicity(be_spec("running", 0), 5, 3, 1);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.certificate, "probabilistic certificate (3 trials, seed 1)");
    EXPECT_EQ(rep.homology.size(), 6u * 3u);
    for (const auto &s : rep.homology) EXPECT_TRUE(s.euler_ok);
    // H_0 at w ≥ 3 vanishes (the determinant is a unit at the point), at w < 3 it is A(w)/0.
    for (const auto &s : rep.homology) EXPECT_EQ(s.homology[0], s.width >= 3 ? 0u : 1u);
}

TEST(Probe, ZeroComplexIsNotExact)
{
    OIComplex K;
    K.spec = koszul_spec("koszul_x1");
    K.widths.push_back(WidthComplex::from_matrices(0, {PolyMatrix(1, 2, Polynomial(0))}));
    auto rep = probe_generic_acyclicity(K, 2, 1);
    EXPECT_FALSE(rep.passed());
    auto *c = rep.find("acyclic-probe");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_NE(c->witness.find("not generically acyclic: w=0, H_1 has rank 2"), std::string::npos) << c->witness;
    EXPECT_EQ(rep.homology[0].homology, (std::vector<std::size_t>{1, 2}));
    EXPECT_THROW(probe_generic_acyclicity(K, 0, 1), invalid_input);
}

TEST(Probe, NonAcyclicKoszulFibresAreExact)
{
    // The fibre of K(x_2, x_3, x_3) at a point with x_2 or x_3 nonzero is the
    // Koszul complex of a nonzero vector over ℚ, hence exact.
    auto K = assemble_oi_complex(koszul_spec("koszul_x2"), 3);
    auto sig = AlgebraSignature::parse("1");
    for (int t = 0; t < 3; ++t) EXPECT_EQ(homology_at_point(K.widths[3], random_point(sig, 3, 1, t), 1), 0u);
    Point origin;
    for (const auto &v : variables_at_width(sig, 3)) origin.emplace(v, Rational(0));
    EXPECT_EQ(homology_at_point(K.widths[3], origin, 1), 3u);
}

TEST(GradedStrand, DetectsNonAcyclicKoszul)
{
    auto K = assemble_oi_complex(koszul_spec("koszul_x2"), 3);
    const auto &C = K.widths[3];
    // e_2 - e_3 is a cycle of internal degree 1 that is not a boundary.
    EXPECT_EQ(graded_homology(C, 1, 1), 1u);
    EXPECT_EQ(graded_homology(C, 1, 1, variables_at_width(AlgebraSignature::parse("1"), 3)), 1u);
    EXPECT_EQ(graded_homology(C, 2, 2), 0u);
    VerifyOptions opt;
    opt.strand = true;
    auto rep = verify_complex(K, opt);
    auto *s = rep.find("strand-exactness");
    ASSERT_NE(s, nullptr);
    EXPECT_FALSE(s->passed);
    EXPECT_EQ(s->witness, "w=3: H_1 has dimension 1 in internal degree 1");
    for (const auto &w : rep.widths) EXPECT_EQ(*w.strand_exact, w.width != 3);
}

TEST(GradedStrand, ExactComplexesHaveNoStrandHomology)
{
    auto C = koszul_at_width(load("koszul_x1"), 3);
    for (std::size_t j = 1; j <= 3; ++j)
        for (int t = 0; t <= 4; ++t) EXPECT_EQ(graded_homology(C, j, t), 0u) << j << " " << t;
    auto B = be_at_width(load("running"), 0, 4);
    for (std::size_t j = 1; j <= B.length(); ++j)
        for (int t = 3; t <= 5; ++t) EXPECT_EQ(graded_homology(B, j, t), 0u) << j << " " << t;
    // H_0 of the Eagon-Northcott complex in degree 3: cubics modulo the four maximal minors.
    EXPECT_EQ(graded_homology(B, 0, 3, variables_at_width(AlgebraSignature::parse("1,1,1"), 4)), 364u - 4u);
}

TEST(VerifyComplex, FullReportOnFixtures)
{
    for (int i = 0; i <= 1; ++i) {
        auto K = assemble_oi_complex(be_spec("running", i), 5);
        VerifyOptions opt;
        opt.strand = true;
        auto rep = verify_complex(K, opt);
        for (const auto &c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
        EXPECT_EQ(rep.checks.size(), 7u);
    }
    auto K = assemble_oi_complex(koszul_spec("koszul_two_factors"), 4);
    EXPECT_TRUE(verify_complex(K).passed());
}

TEST(VerifyComplex, UnorderedBasisBreaksNaturality)
{
    auto K = assemble_oi_complex(be_spec("running", 0), 4, {Mutation::UnorderedBasis});
    auto r = check_naturality(K);
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.witness.find("eps="), std::string::npos);
    EXPECT_TRUE(check_naturality(assemble_oi_complex(be_spec("running", 0), 4)).passed);
}
