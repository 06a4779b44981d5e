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

#include "zeta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace qwolst {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void require_p(int p) {
    if (p < 2) throw DomainZ("root-of-unity checks require p >= 2, got " + std::to_string(p));
}

// All p-th roots of unity, each from its own reduced angle.
std::vector<ComplexVal> root_table(int p) {
    std::vector<ComplexVal> roots(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r) {
        double angle = 2.0 * std::numbers::pi * r / p;
        roots[static_cast<std::size_t>(r)] = {std::cos(angle), std::sin(angle)};
    }
    roots[0] = {1.0, 0.0};
    return roots;
}

// Greedy Leja order: each factor maximizes the product of distances to the
// factors already taken. Keeps every partial product of (q - root) flat;
// the natural order lets intermediate coefficients grow past 1e6 by p = 53,
// which is fatal in doubles.
std::vector<ComplexVal> leja_order(const std::vector<ComplexVal>& roots) {
    const std::size_t n = roots.size();
    std::vector<bool> taken(n, false);
    std::vector<double> logdist(n, 0.0);
    std::vector<ComplexVal> out;
    out.reserve(n);

    std::size_t pick = 0;  // all on the unit circle; start at the first
    for (std::size_t step = 0; step < n; ++step) {
        taken[pick] = true;
        out.push_back(roots[pick]);
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (taken[i]) continue;
            logdist[i] += std::log(std::abs(roots[i] - roots[pick]));
            if (best == n || logdist[i] > logdist[best]) best = i;
        }
        pick = best;
    }
    return out;
}

}  // namespace

ComplexVal zeta_pow(int p, long m) {
    require_p(p);
    long r = m % p;
    if (r < 0) r += p;
    if (r == 0) return {1.0, 0.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / p;
    return {std::cos(angle), std::sin(angle)};
}

ComplexVal g_at_root(int p, int m) {
    require_p(p);
    auto roots = root_table(p);
    ComplexVal sum = 0.0;
    for (int j = 1; j < p; ++j) {
        ComplexVal w = roots[static_cast<std::size_t>((static_cast<long>(m) * j) % p)];
        ComplexVal d = 1.0 - w;
        sum += w / (d * d);
    }
    return sum;
}

ComplexVal root_sum(int p, long k) {
    require_p(p);
    auto roots = root_table(p);
    ComplexVal sum = 0.0;
    for (int j = 1; j < p; ++j) {
        long r = (k % p) * j % p;
        sum += roots[static_cast<std::size_t>(r)];
    }
    return sum;
}

NumericCheck closed_form_check(int p, ComplexVal z) {
    auto t0 = Clock::now();
    require_p(p);
    if (std::abs(z) >= 1.0) {
        throw DomainZ("closed form valid only for |z| < 1, got |z| = " +
                      fmt_double(std::abs(z)));
    }

    auto roots = root_table(p);
    ComplexVal lhs = 0.0;
    for (int j = 1; j < p; ++j) {
        ComplexVal w = roots[static_cast<std::size_t>(j)];
        ComplexVal d = 1.0 - w * z;
        lhs += w / (d * d);
    }

    ComplexVal z_pm1 = 1.0;
    for (int i = 0; i < p - 1; ++i) z_pm1 *= z;
    ComplexVal z_p = z_pm1 * z;
    ComplexVal one = 1.0;
    ComplexVal rhs = static_cast<double>(p) * static_cast<double>(p) * z_pm1 /
                         ((one - z_p) * (one - z_p)) -
                     one / ((one - z) * (one - z));

    NumericCheck r;
    r.check_id = "closedform";
    r.p = p;
    r.residual = std::abs(lhs - rhs);
    r.tolerance = 1e-9;
    r.passed = r.residual <= r.tolerance;
    r.detail = "z=" + fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") +
               fmt_double(z.imag()) + "i";
    r.elapsed_ms = ms_since(t0);
    return r;
}

NumericCheck cyclotomic_product_check(int p) {
    auto t0 = Clock::now();
    require_p(p);

    auto roots = root_table(p);
    roots.erase(roots.begin());  // primitive roots only: m = 1 .. p-1
    std::vector<ComplexVal> ordered = leja_order(roots);

    std::vector<ComplexVal> coeffs{1.0};
    for (const ComplexVal& root : ordered) {
        std::vector<ComplexVal> next(coeffs.size() + 1, 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= root * coeffs[i];
        }
        coeffs = std::move(next);
    }

    double residual = 0.0;
    for (const ComplexVal& c : coeffs) residual = std::max(residual, std::abs(c - 1.0));

    NumericCheck r;
    r.check_id = "cycloprod";
    r.p = p;
    r.residual = residual;
    r.tolerance = 1e-9 * p;
    r.passed = r.residual <= r.tolerance;
    r.detail = "degree=" + std::to_string(coeffs.size() - 1);
    r.elapsed_ms = ms_since(t0);
    return r;
}

NumericCheck zeta_g_check(int p, bool mutate_expected) {
    auto t0 = Clock::now();
    require_p(p);
    double expected = (1.0 - static_cast<double>(p) * p) / 12.0 + (mutate_expected ? 1.0 : 0.0);

    double residual = 0.0;
    int worst_m = 1;
    for (int m = 1; m < p; ++m) {
        double dev = std::abs(g_at_root(p, m) - expected);
        if (dev > residual) {
            residual = dev;
            worst_m = m;
        }
    }

    NumericCheck r;
    r.check_id = "zeta.g";
    r.p = p;
    r.residual = residual;
    r.tolerance = 1e-6 * std::max(1.0, static_cast<double>(p) * p / 100.0);
    r.passed = r.residual <= r.tolerance;
    r.detail = "expected=" + fmt_double(expected) + " worst_m=" + std::to_string(worst_m);
    r.elapsed_ms = ms_since(t0);
    return r;
}

NumericCheck zeta_rootsum_check(int p) {
    auto t0 = Clock::now();
    require_p(p);

    double residual = 0.0;
    long worst_k = 0;
    for (long k = 0; k <= 3L * p; ++k) {
        double expected = (k % p == 0) ? p - 1.0 : -1.0;
        double dev = std::abs(root_sum(p, k) - expected);
        if (dev > residual) {
            residual = dev;
            worst_k = k;
        }
    }

    NumericCheck r;
    r.check_id = "zeta.rootsum";
    r.p = p;
    r.residual = residual;
    r.tolerance = 1e-9 * p;
    r.passed = r.residual <= r.tolerance;
    r.detail = "k_max=" + std::to_string(3L * p) + " worst_k=" + std::to_string(worst_k);
    r.elapsed_ms = ms_since(t0);
    return r;
}

NumericCheck closed_form_samples_check(int p, std::uint64_t seed) {
    auto t0 = Clock::now();
    require_p(p);

    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(p)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double residual = 0.0;
    std::ostringstream samples;
    for (int i = 0; i < 20; ++i) {
        double radius = 0.9 * std::sqrt(unit(rng));
        double angle = 2.0 * std::numbers::pi * unit(rng);
        ComplexVal z{radius * std::cos(angle), radius * std::sin(angle)};
        NumericCheck one = closed_form_check(p, z);
        residual = std::max(residual, one.residual);
        if (i) samples << ",";
        samples << fmt_double(z.real()) << (z.imag() < 0 ? "" : "+") << fmt_double(z.imag())
                << "i";
    }

    NumericCheck r;
    r.check_id = "closedform";
    r.p = p;
    r.residual = residual;
    r.tolerance = 1e-9;
    r.passed = r.residual <= r.tolerance;
    r.detail = "seed=" + std::to_string(seed) + " samples=[" + samples.str() + "]";
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace qwolst
