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

// Free OI-modules, their multilinear constructions, and two OI Koszul complexes:
// one generically acyclic, one that is not.

#include <iostream>

#include "oikomplex/oikomplex.hpp"

using namespace oikomplex;

namespace {

void show(const OIComplex &K, bool strand)
{
    VerifyOptions opt;
    opt.strand = strand;
    auto rep = verify_complex(K, opt);
    for (const auto &w : rep.widths) {
        std::cout << "  w=" << w.width << "  ranks";
        for (auto r : w.ranks) std::cout << ' ' << r;
        std::cout << (w.acyclic ? "  exact at random points" : "  homology at random points");
        if (w.strand_exact) std::cout << (*w.strand_exact ? ", no strand homology" : ", strand homology found");
        std::cout << '\n';
    }
    for (const auto &c : rep.checks)
        if (!c.passed) std::cout << "  " << c.name << ": " << c.witness << '\n';
}

} // namespace

int main()
{
    auto A = AlgebraSignature::parse("1");
    auto F2 = FreeOIModule::from_widths(A, {2});
    auto F3 = FreeOIModule::from_widths(A, {3});

    std::cout << "basis of F(2) at width 3:";
    for (const auto &k : F2.basis_at_width(3)) std::cout << ' ' << k.to_string();
    std::cout << "\n\n";

    auto t = tensor_decompose(F2, F3);
    std::cout << "F(2) (x) F(3): " << t.summary() << '\n';
    auto c = Construction::tensor(F2, F3);
    std::cout << "  " << certify_rank_identity(t, c, 10).identity << "\n";
    auto e = wedge_decompose(F3, 2);
    std::cout << "wedge^2 F(3): " << e.summary() << "\n\n";

    auto X1 = FreeOIModule::parse("1:1", A);
    auto A0 = FreeOIModule::width_zero(A, 1);
    ModuleElement x1{1, {}};
    x1.add({1, OIMorphism(1, {})}, Polynomial::parse("x[1;(1)]", 1));
    ModuleMorphism phi(X1, A0, {x1});
    std::cout << "Koszul complex on x_1 (width w is K(x_1, ..., x_w)):\n";
    show(assemble_oi_complex({ComplexKind::Koszul, phi, 0, std::nullopt}, 4), false);

    auto X2 = FreeOIModule::parse("2:1", A);
    ModuleElement x2{2, {}};
    x2.add({1, OIMorphism(2, {})}, Polynomial::parse("x[1;(2)]", 2));
    ModuleMorphism psi(X2, A0, {x2});
    std::cout << "\nKoszul complex on x_2 in A(2) (width 3 is K(x_2, x_3, x_3)):\n";
    show(assemble_oi_complex({ComplexKind::Koszul, psi, 0, std::nullopt}, 3), true);
}
