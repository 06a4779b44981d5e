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

#include "rational.hpp"

using namespace qwolst;

TEST_CASE("rationals are stored canonically") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(3, -6).denominator() == 2);
    CHECK(Rat(0, 5).is_zero());
    CHECK(Rat(0, 5).denominator() == 1);
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK_THROWS_AS(Rat(1, 0), ZeroDenominator);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) / Rat(3, 4) == Rat(2, 3));
    CHECK(-Rat(3, 7) == Rat(-3, 7));
    CHECK_THROWS_AS(Rat(1) / Rat(0), ZeroDenominator);
}

TEST_CASE("string round trip") {
    for (const char* s : {"25/12", "-3", "0", "49/20", "-1/2"}) {
        CHECK(Rat::from_string(s).str() == s);
    }
    CHECK(Rat::from_string("2/4") == Rat(1, 2));
    CHECK_THROWS_AS(Rat::from_string(""), ZeroDenominator);
    CHECK_THROWS_AS(Rat::from_string("abc"), ZeroDenominator);
    CHECK_THROWS_AS(Rat::from_string("1/0"), ZeroDenominator);
}

TEST_CASE("integer powers") {
    CHECK(Rat::pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(Rat::pow(Rat(5), 0) == Rat(1));
    CHECK(Rat::pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(Rat::pow(Rat(0), 5) == Rat(0));
    CHECK_THROWS_AS(Rat::pow(Rat(0), -1), ZeroDenominator);
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(Rat(25, 12), 5) == 2);
    CHECK(padic_valuation(Rat(49, 20), 7) == 2);
    CHECK(padic_valuation(Rat(1, 5), 5) == -1);
    CHECK(padic_valuation(Rat(205, 144), 5) == 1);
    CHECK(padic_valuation(Rat(3, 7), 5) == 0);
    CHECK_FALSE(padic_valuation(Rat(0), 5).has_value());
}
