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

#include "checks.hpp"

#include <chrono>
#include <sstream>
#include <utility>

namespace qwolst {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_prime(int p, const char* check) {
    if (!is_prime(p)) {
        throw NotPrime(std::string(check) + " requires a prime, got " + std::to_string(p));
    }
}

void require_min(int p, int min_p, const char* check) {
    if (p < min_p) {
        throw PrimeTooSmall(std::string(check) + " requires p >= " + std::to_string(min_p) +
                            ", got " + std::to_string(p));
    }
}

// First differing coefficient index with both values; the failure witness.
std::string diff_detail(const Poly& lhs, const Poly& rhs) {
    std::size_t n = std::max(lhs.coeffs().size(), rhs.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) {
            std::ostringstream out;
            out << "first differing coefficient at q^" << i << ": lhs=" << lhs.coeff(i).str()
                << " rhs=" << rhs.coeff(i).str();
            return out.str();
        }
    }
    return "";
}

// Observed lcm of coefficient denominators. The residues of the paper's
// congruences come out integral in practice; we report the fact rather
// than assert it.
mpz_class denominator_lcm(const Poly& a) {
    mpz_class l(1);
    for (const Rat& c : a.coeffs()) {
        mpz_class d = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

CheckResult residue_result(std::string check_id, int p, const Residue& lhs, const Residue& rhs,
                           Clock::time_point t0, const std::string& note = "") {
    CheckResult r;
    r.check_id = std::move(check_id);
    r.p = p;
    r.lhs_rep = lhs.rep();
    r.rhs_rep = rhs.rep();
    r.passed = lhs == rhs;
    std::ostringstream detail;
    if (!r.passed) detail << diff_detail(r.lhs_rep, r.rhs_rep) << "; ";
    detail << "coeff_den_lcm=" << denominator_lcm(r.lhs_rep).get_str();
    if (!note.empty()) detail << "; " << note;
    r.detail = detail.str();
    r.elapsed_ms = ms_since(t0);
    return r;
}

Rat maybe_bumped(Rat c, const CheckOptions& opt, unsigned bit) {
    if (opt.mutate_mask & (1u << bit)) c += Rat(1);
    return c;
}

// Divisibility-of-numerator check shared by the two classical congruences.
CheckResult rational_divisibility(const char* check_id, int p, const Rat& sum,
                                  const Rat& expected, long min_valuation,
                                  Clock::time_point t0) {
    CheckResult r;
    r.check_id = check_id;
    r.p = p;
    r.lhs_rep = Poly(sum);
    r.rhs_rep = Poly(expected);

    Rat diff = sum - expected;
    auto den_val = padic_valuation(Rat(mpz_class(diff.denominator())), p);
    if (den_val && *den_val != 0) {
        // j < p throughout the sums, so this cannot happen.
        throw NotPrime(std::string(check_id) + ": denominator not coprime to p");
    }
    auto val = padic_valuation(diff, p);
    r.passed = !val || *val >= min_valuation;

    std::ostringstream detail;
    detail << "sum=" << sum.str() << " nu_p=";
    if (val) {
        detail << *val;
    } else {
        detail << "inf";
    }
    detail << " required>=" << min_valuation;
    r.detail = detail.str();
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace

CheckResult verify_wolstenholme(int p, const CheckOptions& opt) {
    auto t0 = Clock::now();
    require_prime(p, "wolstenholme");
    require_min(p, 5, "wolstenholme");
    Rat sum(0);
    for (int j = 1; j < p; ++j) sum += Rat(1, j);
    return rational_divisibility("wolstenholme", p, sum, maybe_bumped(Rat(0), opt, 0), 2, t0);
}

CheckResult verify_classical_squares(int p, const CheckOptions& opt) {
    auto t0 = Clock::now();
    require_prime(p, "squares");
    require_min(p, 5, "squares");
    Rat sum(0);
    for (int j = 1; j < p; ++j) sum += Rat(1, static_cast<long>(j) * j);
    return rational_divisibility("squares", p, sum, maybe_bumped(Rat(0), opt, 0), 1, t0);
}

CheckResult verify_andrews(int p, const CheckOptions& opt) {
    auto t0 = Clock::now();
    require_prime(p, "andrews");
    if (p == 2) throw NotOdd("andrews requires an odd prime");
    Poly modulus = q_modulus(p, 1);
    Residue lhs = q_harmonic_res(p - 1, modulus);
    Rat c = maybe_bumped(Rat(p - 1, 2), opt, 0);
    Residue rhs(Poly{c, -c}, modulus);
    return residue_result("andrews", p, lhs, rhs, t0);
}

CheckResult verify_theorem1(int p, const CheckOptions& opt) {
    auto t0 = Clock::now();
    require_prime(p, "theorem1");
    require_min(p, 5, "theorem1");
    Poly modulus = q_modulus(p, 2);
    Residue lhs = q_harmonic_res(p - 1, modulus);
    Rat c1 = maybe_bumped(Rat(p - 1, 2), opt, 0);
    Rat c2 = maybe_bumped(Rat(static_cast<long>(p) * p - 1, 24), opt, 1);
    Poly one_minus_q{1, -1};
    Poly rhs_poly = c1 * one_minus_q + c2 * (one_minus_q * one_minus_q * q_int(p));
    Residue rhs(rhs_poly, modulus);
    return residue_result("theorem1", p, lhs, rhs, t0);
}

CheckResult verify_lemma2_weighted(int p, const CheckOptions& opt) {
    auto t0 = Clock::now();
    require_prime(p, "lemma2w");
    require_min(p, 5, "lemma2w");
    Poly modulus = q_modulus(p, 1);
    Residue lhs = q_power_sum_res(p - 1, modulus, Weighting::weighted);
    Rat c = maybe_bumped(-Rat(static_cast<long>(p) * p - 1, 12), opt, 0);
    Poly one_minus_q{1, -1};
    Residue rhs(c * (one_minus_q * one_minus_q), modulus);
    return residue_result("lemma2w", p, lhs, rhs, t0);
}

CheckResult verify_lemma2_plain(int p, const CheckOptions& opt) {
    auto t0 = Clock::now();
    require_prime(p, "lemma2p");
    require_min(p, 5, "lemma2p");
    Poly modulus = q_modulus(p, 1);
    Residue lhs = q_power_sum_res(p - 1, modulus, Weighting::plain);
    Rat c = maybe_bumped(-Rat(static_cast<long>(p - 1) * (p - 5), 12), opt, 0);
    Poly one_minus_q{1, -1};
    Residue rhs(c * (one_minus_q * one_minus_q), modulus);
    return residue_result("lemma2p", p, lhs, rhs, t0);
}

CheckResult verify_lhospital_limit(int p, const CheckOptions& opt) {
    auto t0 = Clock::now();
    require_min(p, 2, "limit");

    Poly one_minus_z{1, -1};
    // 1 - z^p = (1-z) * [p]_z, assembled directly as coefficients.
    std::vector<Rat> c(static_cast<std::size_t>(p) + 1, Rat(0));
    c[0] = Rat(1);
    c[static_cast<std::size_t>(p)] = Rat(-1);
    Poly one_minus_zp(std::move(c));

    Rat p2(static_cast<long>(p) * p);
    Poly numer = Poly::monomial(p2, static_cast<std::size_t>(p - 1)) *
                     (one_minus_z * one_minus_z) -
                 one_minus_zp * one_minus_zp;
    Poly denom = (one_minus_zp * one_minus_zp) * (one_minus_z * one_minus_z);

    Poly deflator = pow(one_minus_z, 4);
    DivRem dn = divrem(numer, deflator);
    if (!dn.remainder.is_zero()) {
        throw NotDeflatable("numerator not divisible by (1-z)^4 at p=" + std::to_string(p));
    }
    DivRem dd = divrem(denom, deflator);
    if (!dd.remainder.is_zero()) {
        throw NotDeflatable("denominator not divisible by (1-z)^4 at p=" + std::to_string(p));
    }

    Rat denom_at_1 = dd.quotient.eval(Rat(1));
    Rat value = dn.quotient.eval(Rat(1)) / denom_at_1;
    Rat expected = maybe_bumped(Rat(1 - static_cast<long>(p) * p, 12), opt, 0);

    CheckResult r;
    r.check_id = "limit";
    r.p = p;
    r.lhs_rep = Poly(value);
    r.rhs_rep = Poly(expected);
    r.passed = value == expected;
    std::ostringstream detail;
    detail << "limit=" << value.str() << " expected=" << expected.str()
           << " deflated_denominator_at_1=" << denom_at_1.str();
    if (dd.quotient == q_modulus(static_cast<std::size_t>(p), 2)) {
        detail << " (equals [p]_z^2)";
    }
    r.detail = detail.str();
    r.elapsed_ms = ms_since(t0);
    return r;
}

CheckResult check_telescoping(int p, const CheckOptions&) {
    auto t0 = Clock::now();
    require_prime(p, "telescope");
    require_min(p, 3, "telescope");

    Poly one_minus_q{1, -1};
    bool all_ok = true;
    Residue last_lhs(Poly(), q_modulus(p, 1));
    Residue last_rhs(Poly(), q_modulus(p, 1));
    for (std::size_t k = 1; k <= 2; ++k) {
        Poly modulus = q_modulus(p, k);
        Residue lhs = q_power_sum_res(p - 1, modulus, Weighting::plain);
        Residue rhs = Residue(one_minus_q, modulus) * q_harmonic_res(p - 1, modulus) +
                      q_power_sum_res(p - 1, modulus, Weighting::weighted);
        all_ok = all_ok && lhs == rhs;
        last_lhs = lhs;
        last_rhs = rhs;
    }
    CheckResult r = residue_result("telescope", p, last_lhs, last_rhs, t0,
                                   "verified modulo [p]_q and [p]_q^2");
    r.passed = all_ok && r.passed;
    return r;
}

std::vector<Rat> symmetrization_default_samples() {
    return {Rat(1, 2), Rat(-1, 3), Rat(2)};
}

CheckResult check_symmetrization(int p, std::span<const Rat> samples, const CheckOptions&) {
    auto t0 = Clock::now();
    require_prime(p, "symmetrize");
    require_min(p, 3, "symmetrize");

    std::vector<Rat> defaults;
    if (samples.empty()) {
        defaults = symmetrization_default_samples();
        samples = defaults;
    }

    CheckResult r;
    r.check_id = "symmetrize";
    r.p = p;
    r.passed = true;

    for (const Rat& x : samples) {
        // Precondition: x^k != 1 for 1 <= k <= p.
        Rat xk(1);
        for (int k = 1; k <= p; ++k) {
            xk *= x;
            if (xk == Rat(1)) {
                throw PoleAtSample("sample " + x.str() + " satisfies x^" + std::to_string(k) +
                                   " = 1");
            }
        }

        std::vector<Rat> xpow(static_cast<std::size_t>(p) + 1, Rat(1));
        for (int k = 1; k <= p; ++k) xpow[k] = xpow[k - 1] * x;

        Rat side_a(0), side_b(0);
        Rat one(1);
        for (int k = 1; k < p; ++k) {
            Rat dk = one - xpow[k];
            Rat dpk = one - xpow[p - k];
            side_a += one / dk + one / dpk - one;
            side_b += (one - xpow[p]) / (dk * dpk);
        }

        Rat harmonic(0);
        for (int j = 1; j < p; ++j) harmonic += one / q_int(j).eval(x);
        Rat rearranged_lhs = harmonic - Rat(p - 1, 2) * (one - x);
        Rat rearranged_rhs = (one - x) / Rat(2) * side_a;

        if (side_a != side_b) {
            r.passed = false;
            r.lhs_rep = Poly(side_a);
            r.rhs_rep = Poly(side_b);
            r.detail = "sum identity fails at sample " + x.str();
            break;
        }
        if (rearranged_lhs != rearranged_rhs) {
            r.passed = false;
            r.lhs_rep = Poly(rearranged_lhs);
            r.rhs_rep = Poly(rearranged_rhs);
            r.detail = "harmonic rearrangement fails at sample " + x.str();
            break;
        }
        r.lhs_rep = Poly(side_a);
        r.rhs_rep = Poly(side_b);
    }

    if (r.passed) {
        std::ostringstream detail;
        detail << "samples=";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (i) detail << ",";
            detail << samples[i].str();
        }
        r.detail = detail.str();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace qwolst
