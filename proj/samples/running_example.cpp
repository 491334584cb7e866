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

// The running example: φ: F^{OI,1}(-1) -> (A)^3 over X^{OI,1} ⊗ X^{OI,1} ⊗ X^{OI,1},
// φ(e_id) = x_{1,1} g_1 + x_{2,1} g_2 + x_{3,1} g_3. Builds BE^0, BE^1, BE^2 up to
// width 5 and verifies them.

#include <iostream>

#include "oikomplex/oikomplex.hpp"

using namespace oikomplex;

int main()
{
    auto A = AlgebraSignature::parse("1,1,1");
    auto F = FreeOIModule::parse("1:1", A);
    auto G = FreeOIModule::width_zero(A, 3);
    ModuleElement image{1, {}};
    for (int k = 1; k <= 3; ++k)
        image.add({k, OIMorphism(1, {})}, Polynomial::parse("x[" + std::to_string(k) + ";(1)]", 1));
    ModuleMorphism phi(F, G, {image});

    std::cout << "phi: " << F.to_string() << " -> " << G.to_string() << "\n";
    for (int w = 1; w <= 3; ++w) {
        auto m = matrix_at_width(phi, w);
        std::cout << "  phi(" << w << ") is " << m.rows() << " x " << m.cols() << "\n";
    }

    std::cout << "\nwidth 3 of BE^0 is the generic determinant:\n  "
              << be_at_width(phi, 0, 3).d(1)(0, 0).to_string() << "\n";

    for (int i = 0; i <= 2; ++i) {
        auto K = assemble_oi_complex({ComplexKind::BE, phi, i, std::nullopt}, 5);
        std::cout << "\nBE^" << i << ":\n";
        for (const auto &C : K.widths) {
            std::cout << "  w=" << C.width << "  ranks";
            for (auto r : C.ranks()) std::cout << ' ' << r;
            std::cout << '\n';
        }
        auto rep = verify_complex(K);
        for (const auto &c : rep.checks)
            std::cout << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL " + c.witness) << '\n';
    }
}
