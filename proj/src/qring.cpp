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

#include "qring.hpp"

#include <string>
#include <utility>

namespace qwolst {

Poly q_int(std::size_t n) {
    return Poly(std::vector<Rat>(n, Rat(1)));
}

Poly q_modulus(std::size_t p, std::size_t k) {
    if (p < 2) throw BadModulus("q_modulus requires p >= 2, got " + std::to_string(p));
    if (k < 1) throw BadModulus("q_modulus requires k >= 1, got " + std::to_string(k));
    return pow(q_int(p), k);
}

namespace {

void require_usable_modulus(const Poly& m) {
    if (m.is_zero() || *m.degree() < 1) {
        throw BadModulus("modulus must have degree >= 1, got " + m.str());
    }
}

void require_same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch("residues combined across moduli " + a.modulus().str() +
                              " and " + b.modulus().str());
    }
}

}  // namespace

Residue::Residue(const Poly& a, Poly modulus) : mod_(std::move(modulus)) {
    require_usable_modulus(mod_);
    rep_ = divrem(a, mod_).remainder;
}

Residue Residue::operator-() const {
    Residue r = *this;
    r.rep_ = -r.rep_;
    return r;
}

Residue operator+(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return Residue(a.rep_ + b.rep_, a.mod_);
}

Residue operator-(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return Residue(a.rep_ - b.rep_, a.mod_);
}

Residue operator*(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return Residue(a.rep_ * b.rep_, a.mod_);
}

Residue Residue::inv() const {
    if (rep_.is_zero()) throw ZeroElement("inverse of the zero residue");
    ExtGcd e = ext_gcd(rep_, mod_);
    if (*e.g.degree() >= 1) {
        throw NotInvertible("element shares factor " + e.g.str() + " with the modulus");
    }
    // e.g is monic, hence exactly 1: s*rep == 1 (mod modulus).
    return Residue(e.s, mod_);
}

Residue q_harmonic_res(std::size_t n, const Poly& modulus) {
    Residue acc(Poly(), modulus);
    for (std::size_t j = 1; j <= n; ++j) {
        try {
            acc += Residue(q_int(j), modulus).inv();
        } catch (const NotInvertible&) {
            throw NotInvertible("[" + std::to_string(j) + "]_q is not invertible modulo " +
                                modulus.str());
        }
    }
    return acc;
}

Residue q_power_sum_res(std::size_t n, const Poly& modulus, Weighting w) {
    Residue acc(Poly(), modulus);
    for (std::size_t j = 1; j <= n; ++j) {
        Residue inv_j(Poly(), modulus);
        try {
            inv_j = Residue(q_int(j), modulus).inv();
        } catch (const NotInvertible&) {
            throw NotInvertible("[" + std::to_string(j) + "]_q is not invertible modulo " +
                                modulus.str());
        }
        Residue term = inv_j * inv_j;
        if (w == Weighting::weighted) {
            term = Residue(Poly::monomial(Rat(1), j), modulus) * term;
        }
        acc += term;
    }
    return acc;
}

}  // namespace qwolst
