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

#ifndef QWOLST_ZETA_HPP
#define QWOLST_ZETA_HPP

#include <complex>
#include <cstdint>
#include <string>

namespace qwolst {

using ComplexVal = std::complex<double>;

// Outcome of one floating-point verification.
struct NumericCheck {
    std::string check_id;
    int p = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
    double elapsed_ms = 0.0;
};

// e^{2 pi i m / p}, computed as cos/sin of the reduced angle. p >= 2.
ComplexVal zeta_pow(int p, long m);

// G(zeta^m) = sum_{j=1..p-1} zeta^{mj} / (1 - zeta^{mj})^2 for prime p and
// 1 <= m <= p-1. Provably equal to (1-p^2)/12 for every such m.
ComplexVal g_at_root(int p, int m);

// sum_{j=1..p-1} zeta^{kj}: p-1 when p | k, otherwise -1.
ComplexVal root_sum(int p, long k);

// Compares sum_{j=1..p-1} zeta^j/(1 - zeta^j z)^2 against the closed form
// p^2 z^{p-1}/(1-z^p)^2 - 1/(1-z)^2. Requires |z| < 1 (DomainZ otherwise);
// tolerance 1e-9.
NumericCheck closed_form_check(int p, ComplexVal z);

// Expands prod_{m=1..p-1}(q - zeta^m) by incremental convolution (factors
// taken in Leja order to keep intermediate coefficients near unit size) and
// measures the worst deviation of the coefficients from 1, i.e. from [p]_q.
// Tolerance 1e-9 * p.
NumericCheck cyclotomic_product_check(int p);

// Sweep aggregates; each folds a family of the primitive checks above into
// one NumericCheck with the worst-case residual.

// max over 1 <= m <= p-1 of |g_at_root(p,m) - (1-p^2)/12|, tolerance
// 1e-6 * max(1, p^2/100). mutate_expected shifts the expected constant by
// +1 (negative control).
NumericCheck zeta_g_check(int p, bool mutate_expected = false);

// max over 0 <= k <= 3p of the deviation of root_sum from its two-case
// formula, tolerance 1e-9 * p.
NumericCheck zeta_rootsum_check(int p);

// closed_form_check at 20 pseudo-random samples with |z| <= 0.9 drawn from
// the given seed (mixed with p); worst residual, tolerance 1e-9. Seed and
// samples are recorded in the detail field.
NumericCheck closed_form_samples_check(int p, std::uint64_t seed);

}  // namespace qwolst

#endif
