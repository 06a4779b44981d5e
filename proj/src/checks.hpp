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

#ifndef QWOLST_CHECKS_HPP
#define QWOLST_CHECKS_HPP

#include <span>
#include <string>
#include <vector>

#include "qring.hpp"

namespace qwolst {

// Deterministic trial division; n >= 0.
bool is_prime(long n);

// Outcome of one verification. For residue checks, passed is true exactly
// when lhs_rep == rhs_rep; for the rational divisibility checks, lhs_rep
// and rhs_rep carry the exact sum and the expected constant and passed
// reflects the p-adic valuation of their difference.
struct CheckResult {
    std::string check_id;
    int p = 0;
    bool passed = false;
    Poly lhs_rep;
    Poly rhs_rep;
    std::string detail;
    double elapsed_ms = 0.0;
};

// Negative-control knob: bit k adds +1 to the k-th constant of the check's
// expected right-hand side. Constant 0 is each check's main constant
// ((p-1)/2 for andrews, -(p^2-1)/12 for lemma2w, ...); theorem1 also has
// constant 1, the (p^2-1)/24 factor. Checks without an expected constant
// (telescope, symmetrize) ignore the mask.
struct CheckOptions {
    unsigned mutate_mask = 0;
};

// H_{p-1} = sum 1/j has numerator divisible by p^2 (p >= 5 prime).
CheckResult verify_wolstenholme(int p, const CheckOptions& opt = {});

// sum_{j<p} 1/j^2 has numerator divisible by p (p >= 5 prime).
CheckResult verify_classical_squares(int p, const CheckOptions& opt = {});

// H_{p-1}(q) == (p-1)/2 (1-q) in Q[q]/([p]_q), p odd prime.
CheckResult verify_andrews(int p, const CheckOptions& opt = {});

// H_{p-1}(q) == (p-1)/2 (1-q) + (p^2-1)/24 (1-q)^2 [p]_q in Q[q]/([p]_q^2).
CheckResult verify_theorem1(int p, const CheckOptions& opt = {});

// sum q^j/[j]_q^2 == -(p^2-1)/12 (1-q)^2 in Q[q]/([p]_q).
CheckResult verify_lemma2_weighted(int p, const CheckOptions& opt = {});

// sum 1/[j]_q^2 == -(p-1)(p-5)/12 (1-q)^2 in Q[q]/([p]_q).
CheckResult verify_lemma2_plain(int p, const CheckOptions& opt = {});

// lim_{z->1} (p^2 z^{p-1}(1-z)^2 - (1-z^p)^2) / ((1-z^p)^2 (1-z)^2)
// == (1-p^2)/12, computed by exact deflation by (1-z)^4 on both sides.
// Accepts any p >= 2; the identity is algebraic and needs no primality.
CheckResult verify_lhospital_limit(int p, const CheckOptions& opt = {});

// sum 1/[j]^2 == (1-q) H_{p-1}(q) + sum q^j/[j]^2 in both Q[q]/([p]_q)
// and Q[q]/([p]_q^2), p odd prime.
CheckResult check_telescoping(int p, const CheckOptions& opt = {});

// Exact sample evaluation of the symmetrization step:
//   sum_k (1/(1-q^k) + 1/(1-q^{p-k}) - 1) == sum_k (1-q^p)/((1-q^k)(1-q^{p-k}))
// and H_{p-1}(q) - (p-1)/2 (1-q) == (1-q)/2 times the left sum.
// Empty `samples` selects the defaults {1/2, -1/3, 2}.
CheckResult check_symmetrization(int p, std::span<const Rat> samples = {},
                                 const CheckOptions& opt = {});

// Default sample set for check_symmetrization.
std::vector<Rat> symmetrization_default_samples();

}  // namespace qwolst

#endif
