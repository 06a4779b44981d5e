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

#include "oracle.hpp"

#include "qring.hpp"

namespace qwolst::oracle {

Fraction harmonic_sum(std::size_t n) {
    Fraction acc{Poly(), Poly(Rat(1))};
    for (std::size_t j = 1; j <= n; ++j) {
        Poly qj = q_int(j);
        acc.num = acc.num * qj + acc.den;
        acc.den = acc.den * qj;
    }
    return acc;
}

Fraction power_sum(std::size_t n, bool weighted) {
    Fraction acc{Poly(), Poly(Rat(1))};
    for (std::size_t j = 1; j <= n; ++j) {
        Poly qj2 = q_int(j) * q_int(j);
        Poly term_num = weighted ? Poly::monomial(Rat(1), j) : Poly(Rat(1));
        acc.num = acc.num * qj2 + term_num * acc.den;
        acc.den = acc.den * qj2;
    }
    return acc;
}

bool congruent(const Fraction& f, const Poly& target, const Poly& modulus) {
    ExtGcd g = ext_gcd(f.den, modulus);
    if (!g.g.is_constant()) return false;  // denominator not invertible
    Poly diff = f.num - target * f.den;
    return divrem(diff, modulus).remainder.is_zero();
}

}  // namespace qwolst::oracle
