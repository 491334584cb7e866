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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oikomplex/oi_algebra.hpp"
#include "oikomplex/polyring.hpp"

using namespace oikomplex;

namespace {

Polynomial random_poly(int w, std::mt19937_64 &rng, int terms = 4)
{
    std::uniform_int_distribution<int> var(1, w), coef(-5, 5), expo(0, 2);
    Polynomial p(w);
    for (int t = 0; t < terms; ++t) {
        Polynomial m = Polynomial::constant(coef(rng), w);
        for (int k = 0; k < 2; ++k) {
            int e = expo(rng);
            if (e) m = m * Polynomial::variable({1, OIMorphism(w, {var(rng)})}, e);
        }
        p = p + m;
    }
    return p;
}

} // namespace

TEST(Rational, ParseCanonical)
{
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-3")), "-3");
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_THROW(parse_rational("1/0"), parse_error);
    EXPECT_THROW(parse_rational("1.5"), parse_error);
    EXPECT_THROW(parse_rational(""), parse_error);
}

TEST(Polynomial, ParseAndPrint)
{
    auto p = Polynomial::parse("x[1;(1)] - x[2;(2)]", 2);
    EXPECT_EQ(p.to_string(), "1*x[1;(1)] + -1*x[2;(2)]");
    EXPECT_EQ(Polynomial::parse(p.to_string(), 2), p);
    auto q = Polynomial::parse("3/2*x[1;(1)]^2*x[2;(2)] + 1/2", 2);
    EXPECT_EQ(Polynomial::parse(q.to_string(), 2), q);
    EXPECT_EQ(q.constant_term(), Rational(1, 2));
    EXPECT_EQ(Polynomial::parse("0", 3).to_string(), "0");
    EXPECT_TRUE(Polynomial::parse("x[1;(1)] - x[1;(1)]", 1).is_zero());
    EXPECT_THROW(Polynomial::parse("x[1;(3)]", 2), std::exception);
    EXPECT_THROW(Polynomial::parse("x[1;(1)] +", 2), parse_error);
    EXPECT_THROW(Polynomial::parse("y", 2), parse_error);
}

TEST(Polynomial, RingLaws)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_poly(3, rng), b = random_poly(3, rng), c = random_poly(3, rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * Polynomial::constant(1, 3), a);
    }
}

TEST(Polynomial, WidthMismatch)
{
    EXPECT_THROW(Polynomial(2) + Polynomial(3), width_mismatch);
    EXPECT_THROW(Polynomial(2) * Polynomial(3), width_mismatch);
    EXPECT_NE(Polynomial(2), Polynomial(3));
}

TEST(Polynomial, PushForwardIsRingMap)
{
    std::mt19937_64 rng(11);
    for (const auto &eps : enumerate_hom(3, 5)) {
        auto a = random_poly(3, rng), b = random_poly(3, rng);
        EXPECT_EQ(push_forward(a * b, eps), push_forward(a, eps) * push_forward(b, eps));
        EXPECT_EQ(push_forward(a + b, eps), push_forward(a, eps) + push_forward(b, eps));
        EXPECT_EQ(push_forward(a, eps).width(), 5);
    }
    auto x2 = Polynomial::parse("x[1;(2)]", 2);
    EXPECT_EQ(push_forward(x2, OIMorphism(3, {1, 3})), Polynomial::parse("x[1;(3)]", 3));
    EXPECT_THROW(push_forward(x2, OIMorphism(3, {1})), std::exception);
}

TEST(Polynomial, PushForwardFunctorial)
{
    std::mt19937_64 rng(3);
    auto a = random_poly(2, rng);
    for (const auto &e1 : enumerate_hom(2, 3))
        for (const auto &e2 : enumerate_hom(3, 4)) EXPECT_EQ(push_forward(push_forward(a, e1), e2), push_forward(a, compose(e2, e1)));
}

TEST(Polynomial, Evaluate)
{
    auto p = Polynomial::parse("2*x[1;(1)]^2*x[1;(2)] - 1/3", 2);
    Point pt{{VariableId{1, OIMorphism(2, {1})}, Rational(3)}, {VariableId{1, OIMorphism(2, {2})}, Rational(1, 2)}};
    EXPECT_EQ(evaluate(p, pt), Rational(9) - Rational(1, 3));
    Point partial{{VariableId{1, OIMorphism(2, {1})}, Rational(3)}};
    EXPECT_THROW(evaluate(p, partial), invalid_input);
}

TEST(Polynomial, Degrees)
{
    Grading g{{1, 2}, {}};
    auto p = Polynomial::parse("x[1;(1)]^2 + x[2;(1)]", 1);
    EXPECT_TRUE(is_homogeneous(p, g));
    EXPECT_EQ(degree(p, g), 2);
    EXPECT_FALSE(is_homogeneous(p));
    EXPECT_FALSE(degree(Polynomial(1)).has_value());
    EXPECT_TRUE(is_homogeneous_of_degree(Polynomial(1), 5));
    EXPECT_FALSE(is_homogeneous_of_degree(Polynomial::constant(1, 1), 1));
}

TEST(Determinant, MatchesLeibnizFormula)
{
    std::mt19937_64 rng(5);
    for (int n = 0; n <= 4; ++n) {
        PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Polynomial(2));
        for (auto r = 0; r < n; ++r)
            for (auto c = 0; c < n; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = random_poly(2, rng, 2);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        Polynomial expected(2);
        do {
            int inv = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inv;
            Polynomial term = Polynomial::constant(inv % 2 ? -1 : 1, 2);
            for (int r = 0; r < n; ++r)
                term = term * m(static_cast<std::size_t>(r), static_cast<std::size_t>(perm[static_cast<std::size_t>(r)]));
            expected = expected + term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(determinant(m, 2), expected) << "n=" << n;
    }
}

TEST(Matrix, RankOverRationals)
{
    RationalMatrix m(3, 3, Rational(0));
    int v = 1;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = v++;
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(rank(RationalMatrix(0, 4, Rational(0))), 0u);
    EXPECT_EQ(rank(RationalMatrix(3, 2, Rational(0))), 0u);
    m(2, 2) = 10;
    EXPECT_EQ(rank(m), 3u);
}
