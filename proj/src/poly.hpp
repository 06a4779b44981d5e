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

#ifndef QWOLST_POLY_HPP
#define QWOLST_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qwolst {

// Dense univariate polynomial over Rat. coeffs()[i] is the coefficient of
// q^i. Canonical form: no trailing zero coefficients; the zero polynomial
// stores an empty vector and its degree() is empty (minus infinity).
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly monomial(Rat coeff, std::size_t power);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    std::optional<std::size_t> degree() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    // Coefficient of q^i; zero beyond the stored length.
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const;  // precondition: nonzero

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& a);
    friend Poly operator*(const Poly& a, const Rat& s) { return s * a; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& x) const;

    // a(q^n); n >= 1.
    Poly dilate(std::size_t n) const;

    // Human-readable form, e.g. "2 - 2*q + q^5"; for diagnostics only.
    std::string str(const std::string& var = "q") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

// Euclidean division: a = b*quotient + remainder, deg(remainder) < deg(b).
// Throws DivisionByZeroPoly when b is zero.
DivRem divrem(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // g == s*a + t*b
};

// Extended Euclid over Q[q]. Throws BothZero when a and b are both zero.
ExtGcd ext_gcd(const Poly& a, const Poly& b);

// a^k by binary powering; a^0 == 1.
Poly pow(const Poly& a, unsigned long k);

}  // namespace qwolst

#endif
