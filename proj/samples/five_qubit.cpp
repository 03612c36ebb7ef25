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

// Builds the [[5,1,3]] code, checks it, and concatenates it with itself.

#include <iostream>

#include "qgf4/constructions.hpp"
#include "qgf4/io.hpp"

using namespace qgf4;

int main() {
    AdditiveCode h = AdditiveCode::linear_span({"01111", "101wW"});
    std::cout << format_code(h, {" five-qubit code"});
    QuantumReport r = quantum_report(h);
    std::cout << r.params.str() << "\n";
    std::cout << "C:      " << r.code.str() << "\n";
    std::cout << "C-perp: " << r.dual.str() << "\n";

    Concatenation cc = concatenate(h, h, std::nullopt, true);
    std::cout << "concatenated: " << cc.params.str() << " (block distance " << cc.block_distance << ", inner "
              << cc.inner_distance << ")\n";
    std::cout << "lengthened:   " << quantum_params(lengthen(h)).str() << "\n";
    std::cout << "shortened:    " << quantum_params(shorten_pure(h)).str() << "\n";
}
