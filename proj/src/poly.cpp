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

#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace qwolst {

Poly::Poly(Rat constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(Rat coeff, std::size_t power) {
    Poly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(power + 1, Rat(0));
    p.c_[power] = std::move(coeff);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw DivisionByZeroPoly("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly operator*(const Rat& s, const Poly& a) {
    if (s.is_zero()) return Poly();
    Poly r = a;
    for (Rat& c : r.c_) c *= s;
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

Poly Poly::dilate(std::size_t n) const {
    if (n == 0) throw BadModulus("dilate requires n >= 1");
    if (is_zero()) return Poly();
    Poly r;
    r.c_.assign((c_.size() - 1) * n + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * n] = c_[i];
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        const bool neg = c < Rat(0);
        Rat mag = neg ? -c : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.str();
        } else {
            if (!mag.is_one()) out << mag.str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    const std::size_t db = *b.degree();
    if (a.is_zero() || *a.degree() < db) return {Poly(), a};

    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot(rem.size() - db, Rat(0));
    const std::vector<Rat>& bc = b.coeffs();
    const Rat& lead = bc[db];

    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top].is_zero()) continue;
        Rat c = rem[top] / lead;
        quot[top - db] = c;
        rem[top] = Rat(0);
        for (std::size_t i = 0; i < db; ++i) {
            rem[top - db + i] -= c * bc[i];
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd of two zero polynomials");

    Poly r0 = a, r1 = b;
    Poly s0(Rat(1)), s1;
    Poly t0, t1(Rat(1));

    while (!r1.is_zero()) {
        DivRem d = divrem(r0, r1);
        Poly r2 = std::move(d.remainder);
        Poly s2 = s0 - d.quotient * s1;
        Poly t2 = t0 - d.quotient * t1;
        r0 = std::move(r1);
        s0 = std::move(s1);
        t0 = std::move(t1);
        r1 = std::move(r2);
        s1 = std::move(s2);
        t1 = std::move(t2);
    }

    Rat inv_lead = Rat(1) / r0.leading();
    return {inv_lead * r0, inv_lead * s0, inv_lead * t0};
}

Poly pow(const Poly& a, unsigned long k) {
    Poly acc(Rat(1));
    Poly base = a;
    while (k > 0) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

}  // namespace qwolst
