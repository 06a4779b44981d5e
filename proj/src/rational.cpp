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

#include "rational.hpp"

namespace qwolst {

Rat::Rat(long num, long den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw ZeroDenominator("rational with zero denominator");
    v_.canonicalize();
}

Rat Rat::from_string(const std::string& s) {
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0) {
        throw ZeroDenominator("unparsable rational '" + s + "'");
    }
    if (sgn(v.get_den()) == 0) throw ZeroDenominator("rational with zero denominator");
    v.canonicalize();
    Rat r;
    r.v_ = std::move(v);
    return r;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw ZeroDenominator("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(const Rat& x, long k) {
    if (k < 0) {
        if (x.is_zero()) throw ZeroDenominator("0 raised to a negative power");
        return Rat(1) / pow(x, -k);
    }
    Rat acc(1);
    Rat base = x;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::optional<long> padic_valuation(const Rat& x, unsigned long p) {
    if (x.is_zero()) return std::nullopt;
    mpz_class prime(static_cast<unsigned long>(p));
    mpz_class tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.numerator().get_mpz_t(),
                                           prime.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.denominator().get_mpz_t(),
                                           prime.get_mpz_t()));
    return vn - vd;
}

}  // namespace qwolst
