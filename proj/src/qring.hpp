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

#ifndef QWOLST_QRING_HPP
#define QWOLST_QRING_HPP

#include <cstddef>

#include "poly.hpp"

namespace qwolst {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q is the zero polynomial.
Poly q_int(std::size_t n);

// ([p]_q)^k, the modulus of the congruences; degree k*(p-1).
// Preconditions p >= 2, k >= 1 are hard errors (BadModulus).
Poly q_modulus(std::size_t p, std::size_t k);

// Canonical element of Q[q]/(modulus): rep has degree < deg(modulus).
// Arithmetic between residues demands identical moduli (ModulusMismatch);
// the modulus must be nonconstant (BadModulus).
class Residue {
  public:
    Residue(const Poly& a, Poly modulus);

    const Poly& rep() const { return rep_; }
    const Poly& modulus() const { return mod_; }
    bool is_zero() const { return rep_.is_zero(); }

    Residue operator-() const;
    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    Residue& operator+=(const Residue& o) { return *this = *this + o; }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.mod_ == b.mod_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

    // Modular inverse via extended Euclid. Throws ZeroElement on the zero
    // residue and NotInvertible when rep shares a factor with the modulus.
    Residue inv() const;

  private:
    Poly rep_;
    Poly mod_;
};

// H_n(q) = sum_{j=1..n} 1/[j]_q in Q[q]/(modulus), term by term.
// NotInvertible (naming the offending j) if some [j]_q is not a unit.
Residue q_harmonic_res(std::size_t n, const Poly& modulus);

enum class Weighting { plain, weighted };

// sum_{j=1..n} 1/[j]_q^2 (plain) or sum_{j=1..n} q^j/[j]_q^2 (weighted),
// in Q[q]/(modulus).
Residue q_power_sum_res(std::size_t n, const Poly& modulus, Weighting w);

}  // namespace qwolst

#endif
