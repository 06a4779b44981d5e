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

#ifndef QWOLST_TESTS_TESTUTIL_HPP
#define QWOLST_TESTS_TESTUTIL_HPP

#include <random>

#include "poly.hpp"

namespace qwolst::testutil {

// Deterministic generator for property tests: degree <= max_degree,
// integer coefficients in [-9, 9] (zero polynomial possible).
class PolyGen {
  public:
    explicit PolyGen(unsigned seed) : rng_(seed) {}

    Poly next(int max_degree = 8) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        std::uniform_int_distribution<int> coeff(-9, 9);
        int d = deg(rng_);
        std::vector<Rat> c;
        c.reserve(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng_));
        return Poly(std::move(c));
    }

    Poly next_nonzero(int max_degree = 8) {
        for (;;) {
            Poly p = next(max_degree);
            if (!p.is_zero()) return p;
        }
    }

    Rat next_rat() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        return Rat(num(rng_), den(rng_));
    }

  private:
    std::mt19937 rng_;
};

}  // namespace qwolst::testutil

#endif
