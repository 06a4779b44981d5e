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

#include "qwolst.h"

#include <cstring>
#include <sstream>
#include <string>

#include "report.hpp"
#include "runner.hpp"

namespace {

thread_local std::string g_last_error;

void set_last_error(const std::string& msg) { g_last_error = msg; }

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

struct qw_config {
    qwolst::RunConfig cfg;
};

struct qw_report {
    qwolst::Report report;
    std::string json_cache;
};

extern "C" {

const char* qw_version(void) { return qwolst::kToolVersion; }

const char* qw_strerror(qw_status status) {
    switch (status) {
        case QW_OK: return "ok";
        case QW_EINVAL: return "invalid configuration or argument";
        case QW_EIO: return "i/o failure";
        case QW_EINTERNAL: return "internal failure";
    }
    return "unknown status";
}

const char* qw_last_error(void) { return g_last_error.c_str(); }

qw_config* qw_config_new(void) {
    auto* c = new (std::nothrow) qw_config;
    if (c) c->cfg.checks = {"all"};
    return c;
}

void qw_config_free(qw_config* config) { delete config; }

qw_status qw_config_set_range(qw_config* config, int min_p, int max_p) {
    if (!config) {
        set_last_error("null config");
        return QW_EINVAL;
    }
    if (min_p > max_p) {
        set_last_error("empty range: min " + std::to_string(min_p) + " > max " +
                       std::to_string(max_p));
        return QW_EINVAL;
    }
    config->cfg.min_p = min_p;
    config->cfg.max_p = max_p;
    config->cfg.explicit_list.reset();
    return QW_OK;
}

qw_status qw_config_set_primes(qw_config* config, const int* values, size_t count) {
    if (!config || (!values && count > 0)) {
        set_last_error("null argument");
        return QW_EINVAL;
    }
    if (count == 0) {
        set_last_error("empty prime list");
        return QW_EINVAL;
    }
    config->cfg.explicit_list = std::vector<int>(values, values + count);
    return QW_OK;
}

qw_status qw_config_set_checks(qw_config* config, const char* csv) {
    if (!config || !csv) {
        set_last_error("null argument");
        return QW_EINVAL;
    }
    try {
        std::vector<std::string> names = split_csv(csv);
        config->cfg.checks = qwolst::normalize_checks(names);
        return QW_OK;
    } catch (const qwolst::Error& e) {
        set_last_error(e.what());
        return QW_EINVAL;
    }
}

qw_status qw_config_set_parallelism(qw_config* config, int workers) {
    if (!config || workers < 1) {
        set_last_error(config ? "parallelism must be >= 1" : "null config");
        return QW_EINVAL;
    }
    config->cfg.parallelism = workers;
    return QW_OK;
}

qw_status qw_config_set_seed(qw_config* config, uint64_t seed) {
    if (!config) {
        set_last_error("null config");
        return QW_EINVAL;
    }
    config->cfg.seed = seed;
    return QW_OK;
}

qw_status qw_config_set_mutation(qw_config* config, int enabled) {
    if (!config) {
        set_last_error("null config");
        return QW_EINVAL;
    }
    config->cfg.mutate = enabled != 0;
    return QW_OK;
}

qw_status qw_run(const qw_config* config, qw_report** out_report) {
    if (!config || !out_report) {
        set_last_error("null argument");
        return QW_EINVAL;
    }
    *out_report = nullptr;
    try {
        auto* r = new qw_report;
        r->report = qwolst::run_verify(config->cfg);
        *out_report = r;
        return QW_OK;
    } catch (const qwolst::ConfigError& e) {
        set_last_error(e.what());
        return QW_EINVAL;
    } catch (const qwolst::IoError& e) {
        set_last_error(e.what());
        return QW_EIO;
    } catch (const std::exception& e) {
        set_last_error(e.what());
        return QW_EINTERNAL;
    }
}

void qw_report_free(qw_report* report) { delete report; }

int qw_report_exit_status(const qw_report* report) {
    if (!report) return 1;
    return qwolst::exit_status_for(report->report);
}

qw_status qw_report_counts(const qw_report* report, int* n_pass, int* n_fail, int* n_error) {
    if (!report) {
        set_last_error("null report");
        return QW_EINVAL;
    }
    if (n_pass) *n_pass = report->report.n_pass;
    if (n_fail) *n_fail = report->report.n_fail;
    if (n_error) *n_error = report->report.n_error;
    return QW_OK;
}

int qw_report_entry_count(const qw_report* report) {
    if (!report) return 0;
    return static_cast<int>(report->report.results.size());
}

const char* qw_report_json(qw_report* report) {
    if (!report) return "";
    if (report->json_cache.empty()) {
        report->json_cache = qwolst::report_to_json(report->report);
    }
    return report->json_cache.c_str();
}

}  // extern "C"
