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

#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "checks.hpp"
#include "zeta.hpp"

namespace qwolst {

namespace {

constexpr int kNumericCap = 53;

struct Selector {
    const char* name;
    int min_p;        // smallest prime the check accepts
    bool numeric;     // capped at kNumericCap in range mode
    std::function<std::vector<ReportEntry>(int p, const RunConfig&)> run;
};

ReportEntry from_check(const CheckResult& c) {
    ReportEntry e;
    e.check_id = c.check_id;
    e.p = c.p;
    e.status = c.passed ? EntryStatus::pass : EntryStatus::fail;
    e.lhs = c.lhs_rep;
    e.rhs = c.rhs_rep;
    e.detail = c.detail;
    e.elapsed_ms = c.elapsed_ms;
    return e;
}

ReportEntry from_numeric(const NumericCheck& c) {
    ReportEntry e;
    e.check_id = c.check_id;
    e.p = c.p;
    e.status = c.passed ? EntryStatus::pass : EntryStatus::fail;
    e.residual = c.residual;
    e.tolerance = c.tolerance;
    e.detail = c.detail;
    e.elapsed_ms = c.elapsed_ms;
    return e;
}

CheckOptions options_for(const RunConfig& cfg) {
    CheckOptions opt;
    if (cfg.mutate) opt.mutate_mask = ~0u;
    return opt;
}

const std::vector<Selector>& selector_table() {
    static const std::vector<Selector> table = {
        {"wolstenholme", 5, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{from_check(verify_wolstenholme(p, options_for(c)))};
         }},
        {"squares", 5, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{
                 from_check(verify_classical_squares(p, options_for(c)))};
         }},
        {"andrews", 3, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{from_check(verify_andrews(p, options_for(c)))};
         }},
        {"theorem1", 5, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{from_check(verify_theorem1(p, options_for(c)))};
         }},
        {"lemma2w", 5, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{
                 from_check(verify_lemma2_weighted(p, options_for(c)))};
         }},
        {"lemma2p", 5, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{from_check(verify_lemma2_plain(p, options_for(c)))};
         }},
        {"limit", 2, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{
                 from_check(verify_lhospital_limit(p, options_for(c)))};
         }},
        {"telescope", 3, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{from_check(check_telescoping(p, options_for(c)))};
         }},
        {"symmetrize", 3, false,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{
                 from_check(check_symmetrization(p, {}, options_for(c)))};
         }},
        {"zeta", 2, true,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{from_numeric(zeta_g_check(p, c.mutate)),
                                             from_numeric(zeta_rootsum_check(p))};
         }},
        {"closedform", 2, true,
         [](int p, const RunConfig& c) {
             return std::vector<ReportEntry>{from_numeric(closed_form_samples_check(p, c.seed))};
         }},
        {"cycloprod", 2, true,
         [](int p, const RunConfig&) {
             return std::vector<ReportEntry>{from_numeric(cyclotomic_product_check(p))};
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& known_selectors() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const Selector& s : selector_table()) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

std::vector<std::string> normalize_checks(const std::vector<std::string>& requested) {
    if (requested.empty()) throw ConfigError("no checks selected");
    std::set<std::string> wanted;
    for (const std::string& name : requested) {
        if (name == "all") {
            for (const Selector& s : selector_table()) wanted.insert(s.name);
        } else if (name == "exact") {
            for (const Selector& s : selector_table()) {
                if (!s.numeric) wanted.insert(s.name);
            }
        } else if (name == "numeric") {
            for (const Selector& s : selector_table()) {
                if (s.numeric) wanted.insert(s.name);
            }
        } else {
            bool known = std::any_of(selector_table().begin(), selector_table().end(),
                                     [&](const Selector& s) { return name == s.name; });
            if (!known) throw ConfigError("unknown check '" + name + "'");
            wanted.insert(name);
        }
    }
    std::vector<std::string> out;
    for (const Selector& s : selector_table()) {
        if (wanted.count(s.name)) out.emplace_back(s.name);
    }
    return out;
}

Report run_verify(const RunConfig& config) {
    auto t0 = std::chrono::steady_clock::now();

    if (config.parallelism < 1) throw ConfigError("parallelism must be >= 1");

    Report report;
    report.config = config;
    report.config.checks = normalize_checks(config.checks);

    std::vector<int> scope;
    const bool explicit_mode = config.explicit_list.has_value();
    if (explicit_mode) {
        if (config.explicit_list->empty()) throw ConfigError("empty prime list");
        std::set<int> uniq(config.explicit_list->begin(), config.explicit_list->end());
        scope.assign(uniq.begin(), uniq.end());
    } else {
        if (config.min_p > config.max_p) {
            throw ConfigError("empty range: min " + std::to_string(config.min_p) + " > max " +
                              std::to_string(config.max_p));
        }
        for (int n = std::max(2, config.min_p); n <= config.max_p; ++n) {
            if (is_prime(n)) scope.push_back(n);
        }
    }

    struct Task {
        const Selector* selector;
        int p;
    };
    std::vector<Task> tasks;
    for (int p : scope) {
        for (const Selector& s : selector_table()) {
            if (std::find(report.config.checks.begin(), report.config.checks.end(), s.name) ==
                report.config.checks.end()) {
                continue;
            }
            if (!explicit_mode) {
                if (p < s.min_p) continue;
                if (s.numeric && p > kNumericCap) continue;
            }
            tasks.push_back({&s, p});
        }
    }

    std::vector<std::vector<ReportEntry>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& t = tasks[i];
            try {
                slots[i] = t.selector->run(t.p, config);
            } catch (const Error& err) {
                ReportEntry e;
                e.check_id = t.selector->name;
                e.p = t.p;
                e.status = EntryStatus::error;
                e.error_kind = err.kind();
                e.detail = err.what();
                slots[i] = {std::move(e)};
            } catch (const std::exception& err) {
                ReportEntry e;
                e.check_id = t.selector->name;
                e.p = t.p;
                e.status = EntryStatus::error;
                e.error_kind = "Internal";
                e.detail = err.what();
                slots[i] = {std::move(e)};
            }
        }
    };

    const int extra = std::min<int>(config.parallelism - 1,
                                    static_cast<int>(tasks.size()) - 1);
    std::vector<std::thread> pool;
    for (int i = 0; i < extra; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    for (std::vector<ReportEntry>& group : slots) {
        for (ReportEntry& e : group) report.results.push_back(std::move(e));
    }
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const ReportEntry& a, const ReportEntry& b) {
                         if (a.p != b.p) return a.p < b.p;
                         return a.check_id < b.check_id;
                     });

    for (const ReportEntry& e : report.results) {
        switch (e.status) {
            case EntryStatus::pass: ++report.n_pass; break;
            case EntryStatus::fail: ++report.n_fail; break;
            case EntryStatus::error: ++report.n_error; break;
        }
    }
    report.total_elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

int exit_status_for(const Report& report) {
    return (report.n_fail == 0 && report.n_error == 0) ? 0 : 1;
}

}  // namespace qwolst
