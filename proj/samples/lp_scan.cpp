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

// Scans the linear-programming bound for one column of the table and prints
// the certificate for the first excluded distance.

#include <cstdlib>
#include <iostream>

#include "qgf4/lp.hpp"

using namespace qgf4;

int main(int argc, char **argv) {
    size_t k = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1;
    for (size_t n = std::max<size_t>(k, 3); n <= 14; n++) {
        std::cout << "n=" << n << " k=" << k << "  d <= " << lp_max_distance(n, k) << "\n";
    }
    LpOutcome o = lp_feasible(10, 1, 5);
    std::cout << "\n[[10,1,5]]:\n" << lp_report(o);
}
