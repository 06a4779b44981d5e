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

// Command-line front end for the qwolst verification engine. Talks to the
// shared library strictly through its C interface.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwolst.h"

namespace {

constexpr int kExitConfig = 2;

struct ConfigDeleter {
    void operator()(qw_config* c) const { qw_config_free(c); }
};
struct ReportDeleter {
    void operator()(qw_report* r) const { qw_report_free(r); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verifies the q-analogue of Wolstenholme's harmonic congruence "
                 "and the identities behind it, exactly where possible and "
                 "numerically for the root-of-unity machinery."};
    app.set_version_flag("--version", std::string("verify ") + qw_version());

    int min_p = 2;
    int max_p = 53;
    std::vector<int> primes;
    std::string checks = "all";
    std::string out_path;
    int parallel = 1;
    std::uint64_t seed = 12345;
    bool mutate = false;

    app.add_option("--min", min_p, "Smallest prime of the sweep range")
        ->capture_default_str();
    app.add_option("--max", max_p, "Largest prime of the sweep range")
        ->capture_default_str();
    app.add_option("--primes", primes,
                   "Explicit comma-separated integers to check instead of a range; "
                   "non-primes become NotPrime entries")
        ->delimiter(',');
    app.add_option("--checks", checks,
                   "Comma-separated check names (wolstenholme, squares, andrews, "
                   "theorem1, lemma2w, lemma2p, limit, telescope, symmetrize, zeta, "
                   "closedform, cycloprod) or the aliases all, exact, numeric")
        ->capture_default_str();
    app.add_option("--out", out_path, "Write the JSON report to FILE instead of stdout");
    app.add_option("--parallel", parallel, "Worker threads for the sweep")
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for the closed-form sample points")
        ->capture_default_str();
    app.add_flag("--mutate", mutate,
                 "Negative control: add +1 to every expected constant, so each "
                 "affected check must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    std::unique_ptr<qw_config, ConfigDeleter> config(qw_config_new());
    if (!config) {
        std::cerr << "verify: out of memory\n";
        return kExitConfig;
    }

    qw_status rc = qw_config_set_range(config.get(), min_p, max_p);
    if (rc == QW_OK && !primes.empty()) {
        rc = qw_config_set_primes(config.get(), primes.data(), primes.size());
    }
    if (rc == QW_OK) rc = qw_config_set_checks(config.get(), checks.c_str());
    if (rc == QW_OK) rc = qw_config_set_parallelism(config.get(), parallel);
    if (rc == QW_OK) rc = qw_config_set_seed(config.get(), seed);
    if (rc == QW_OK) rc = qw_config_set_mutation(config.get(), mutate ? 1 : 0);
    if (rc != QW_OK) {
        std::cerr << "verify: " << qw_last_error() << "\n";
        return kExitConfig;
    }

    // Open the output before the sweep so an unwritable path fails fast.
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::out | std::ios::trunc);
        if (!file) {
            std::cerr << "verify: cannot write to '" << out_path << "'\n";
            return kExitConfig;
        }
    }

    qw_report* raw_report = nullptr;
    rc = qw_run(config.get(), &raw_report);
    if (rc != QW_OK) {
        std::cerr << "verify: " << qw_last_error() << "\n";
        return rc == QW_EINVAL ? kExitConfig : 1;
    }
    std::unique_ptr<qw_report, ReportDeleter> report(raw_report);

    std::ostream& out = out_path.empty() ? std::cout : file;
    out << qw_report_json(report.get());
    if (!out) {
        std::cerr << "verify: failed to write report\n";
        return kExitConfig;
    }

    int n_pass = 0, n_fail = 0, n_error = 0;
    qw_report_counts(report.get(), &n_pass, &n_fail, &n_error);
    std::cerr << "verify: " << n_pass << " passed, " << n_fail << " failed, " << n_error
              << " errored\n";
    return qw_report_exit_status(report.get());
}
