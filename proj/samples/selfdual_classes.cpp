// Copyright 2026 The qgf4 Authors
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

// Classifies self-dual codes of length 4 and prints the mass check.

#include <iostream>

#include "qgf4/selfdual.hpp"

using namespace qgf4;

int main() {
    size_t n = 4;
    SelfDualClassification cl = classify_selfdual(n);
    for (const auto &c : cl.classes) {
        std::cout << "d=" << c.params.d << (c.even ? " even " : " odd  ") << "|Aut|=" << c.aut_order;
        if (c.indecomposable) {
            std::cout << " indecomposable";
        } else if (c.params.d == 2) {
            std::cout << " components:";
            for (const auto &w : weight2_decomposition(c.representative)) {
                std::cout << " " << w.name();
            }
        }
        std::cout << "\n";
    }
    std::cout << "sum 1/|Aut| = " << cl.mass() << ", formula " << mass_formula(n) << "\n";
}
