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

#ifndef QWOLST_RATIONAL_HPP
#define QWOLST_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "errors.hpp"

namespace qwolst {

// Exact rational number. Always canonical: lowest terms, denominator > 0,
// zero is 0/1. GMP supplies the arbitrary-precision arithmetic.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients read naturally
    Rat(long num, long den);
    explicit Rat(mpq_class v);
    explicit Rat(const mpz_class& n) : v_(n) {}

    // Accepts GMP's canonical text forms: "n" or "n/d".
    static Rat from_string(const std::string& s);

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);  // throws ZeroDenominator on o == 0

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }

    // x^k with integer k; k < 0 requires x != 0.
    static Rat pow(const Rat& x, long k);

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

// Exponent of p in the factorization of x. Empty for x == 0 (+infinity).
std::optional<long> padic_valuation(const Rat& x, unsigned long p);

}  // namespace qwolst

#endif
