/*
   Copyright 2026 the qwolst authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Brute-force rational-function oracle, test-only. Builds each sum as a
// single fraction num/den over a cleared common denominator and decides
// congruences by polynomial divisibility of num - target*den. Deliberately
// avoids the modular-inversion path used by the library, so the two routes
// are independent.

#ifndef QWOLST_TESTS_ORACLE_HPP
#define QWOLST_TESTS_ORACLE_HPP

#include "poly.hpp"

namespace qwolst::oracle {

struct Fraction {
    Poly num;
    Poly den;
};

// sum_{j=1..n} 1/[j]_q as one fraction.
Fraction harmonic_sum(std::size_t n);

// sum_{j=1..n} q^j/[j]_q^2 (weighted) or 1/[j]_q^2 as one fraction.
Fraction power_sum(std::size_t n, bool weighted);

// True iff f == target in Q[q]/(modulus): den coprime to the modulus and
// modulus | (num - target*den).
bool congruent(const Fraction& f, const Poly& target, const Poly& modulus);

}  // namespace qwolst::oracle

#endif
