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

#include <doctest.h>

#include "qring.hpp"
#include "testutil.hpp"

using namespace qwolst;
using testutil::PolyGen;

TEST_CASE("canonical form and degree") {
    CHECK(Poly{}.is_zero());
    CHECK_FALSE(Poly{}.degree().has_value());
    CHECK(Poly{1, 2, 0, 0}.degree() == 1);
    CHECK(Poly{0, 0, 0} == Poly{});
    CHECK(Poly(Rat(0)).is_zero());
    CHECK(Poly::monomial(Rat(1), 5).degree() == 5);
    CHECK(Poly::monomial(Rat(0), 5).is_zero());
}

TEST_CASE("product examples") {
    CHECK(Poly{1, 1} * Poly{1, -1} == Poly{1, 0, -1});
    CHECK(Poly{1, 1, 1, 1, 1} * Poly{1} == Poly{1, 1, 1, 1, 1});
    CHECK(Poly{1, 1, 1} * Poly{1, 1, 1} == Poly{1, 2, 3, 2, 1});
    CHECK((Poly{1, 1} * Poly{}).is_zero());
}

TEST_CASE("division examples") {
    SUBCASE("(q^5 - 1) / (q - 1) = [5]_q") {
        DivRem d = divrem(Poly{-1, 0, 0, 0, 0, 1}, Poly{-1, 1});
        CHECK(d.quotient == Poly{1, 1, 1, 1, 1});
        CHECK(d.remainder.is_zero());
    }
    SUBCASE("self-division") {
        Poly b{3, 0, 2, 7};
        DivRem d = divrem(b, b);
        CHECK(d.quotient == Poly{1});
        CHECK(d.remainder.is_zero());
    }
    SUBCASE("(q^2 + 1) / (q + 1) = q - 1 remainder 2") {
        DivRem d = divrem(Poly{1, 0, 1}, Poly{1, 1});
        CHECK(d.quotient == Poly{-1, 1});
        CHECK(d.remainder == Poly{2});
    }
    SUBCASE("division by zero") {
        CHECK_THROWS_AS(divrem(Poly{1, 1}, Poly{}), DivisionByZeroPoly);
    }
}

TEST_CASE("extended gcd examples") {
    SUBCASE("coprime: 1+q vs [5]_q") {
        Poly a{1, 1};
        Poly b{1, 1, 1, 1, 1};
        ExtGcd e = ext_gcd(a, b);
        CHECK(e.g == Poly{1});
        CHECK(e.s * a + e.t * b == Poly{1});
    }
    SUBCASE("gcd with zero is the monic version") {
        Poly a{2, 4};
        ExtGcd e = ext_gcd(a, Poly{});
        CHECK(e.g == Poly{Rat(1, 2), 1});
        CHECK(e.s == Poly{Rat(1, 4)});
        CHECK(e.t.is_zero());
        CHECK(e.s * a == e.g);
    }
    SUBCASE("[2]_q divides [4]_q") {
        Poly a{1, 1};
        Poly b{1, 1, 1, 1};
        ExtGcd e = ext_gcd(a, b);
        CHECK(e.g == Poly{1, 1});
        CHECK(e.s * a + e.t * b == e.g);
    }
    SUBCASE("both zero") {
        CHECK_THROWS_AS(ext_gcd(Poly{}, Poly{}), BothZero);
    }
}

TEST_CASE("evaluation examples") {
    CHECK(Poly{1, 1, 1, 1, 1}.eval(Rat(1)) == Rat(5));
    CHECK(Poly{1, 0, -1}.eval(Rat(3)) == Rat(-8));
    CHECK(Poly{}.eval(Rat(7, 3)) == Rat(0));
}

TEST_CASE("power examples") {
    Poly a{1, 1, 1};
    CHECK(pow(a, 0) == Poly{1});
    CHECK(pow(a, 1) == a);
    CHECK(pow(a, 2) == Poly{1, 2, 3, 2, 1});
    CHECK(pow(Poly{}, 0) == Poly{1});
    CHECK(pow(Poly{}, 3).is_zero());
}

TEST_CASE("dilation substitutes q^n") {
    CHECK(Poly{1, 1}.dilate(3) == Poly{1, 0, 0, 1});
    CHECK(Poly{2}.dilate(5) == Poly{2});
    CHECK(Poly{}.dilate(2).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    PolyGen gen(0xc0ffee);
    for (int i = 0; i < 1000; ++i) {
        Poly a = gen.next(), b = gen.next(), c = gen.next();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Poly{} == a);
        CHECK(a * Poly{1} == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("degree of a product adds") {
    PolyGen gen(7);
    for (int i = 0; i < 200; ++i) {
        Poly a = gen.next_nonzero(), b = gen.next_nonzero();
        CHECK(*(a * b).degree() == *a.degree() + *b.degree());
    }
}

TEST_CASE("division round trip on random inputs") {
    PolyGen gen(42);
    for (int i = 0; i < 1000; ++i) {
        Poly a = gen.next(10), b = gen.next_nonzero(6);
        DivRem d = divrem(a, b);
        CHECK(b * d.quotient + d.remainder == a);
        if (!d.remainder.is_zero()) CHECK(*d.remainder.degree() < *b.degree());
    }
}

TEST_CASE("extended gcd satisfies Bezout and divides both inputs") {
    PolyGen gen(2024);
    for (int i = 0; i < 300; ++i) {
        Poly a = gen.next(6), b = gen.next(6);
        if (a.is_zero() && b.is_zero()) continue;
        ExtGcd e = ext_gcd(a, b);
        CHECK(e.s * a + e.t * b == e.g);
        CHECK(e.g.leading() == Rat(1));
        if (!a.is_zero()) CHECK(divrem(a, e.g).remainder.is_zero());
        if (!b.is_zero()) CHECK(divrem(b, e.g).remainder.is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    PolyGen gen(99);
    for (int i = 0; i < 300; ++i) {
        Poly a = gen.next(), b = gen.next();
        Rat x = gen.next_rat();
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("q-integer multiplicativity: [mn]_q = [n]_q * [m]_{q^n}") {
    for (std::size_t m = 1; m <= 10; ++m) {
        for (std::size_t n = 1; n <= 10; ++n) {
            CHECK(q_int(m * n) == q_int(n) * q_int(m).dilate(n));
        }
    }
}
