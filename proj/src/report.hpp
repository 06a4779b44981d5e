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

#ifndef QWOLST_REPORT_HPP
#define QWOLST_REPORT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "poly.hpp"

namespace qwolst {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    int min_p = 2;
    int max_p = 53;
    std::optional<std::vector<int>> explicit_list;  // overrides the range
    std::vector<std::string> checks;                // selectors, or "all"
    std::optional<std::string> out_path;
    int parallelism = 1;
    std::uint64_t seed = 12345;
    bool mutate = false;  // bump every expected constant by +1
};

enum class EntryStatus { pass, fail, error };

// One (prime, check) outcome. Exact checks fill lhs/rhs with canonical
// residues; numeric checks fill residual/tolerance; precondition
// violations become status == error with the error kind.
struct ReportEntry {
    std::string check_id;
    int p = 0;
    EntryStatus status = EntryStatus::error;
    Poly lhs;
    Poly rhs;
    std::optional<double> residual;
    std::optional<double> tolerance;
    std::string error_kind;
    std::string detail;
    double elapsed_ms = 0.0;

    bool passed() const { return status == EntryStatus::pass; }
};

struct Report {
    std::string tool_version = kToolVersion;
    RunConfig config;
    std::vector<ReportEntry> results;  // sorted by (p, check_id)
    int n_pass = 0;
    int n_fail = 0;
    int n_error = 0;
    double total_elapsed_ms = 0.0;
};

// UTF-8 JSON document; every exact number rendered as a decimal string
// (polynomial coefficients as numerator/denominator strings).
std::string report_to_json(const Report& report);

void write_report(const Report& report, std::ostream& out);

// Inverse of report_to_json; round-trips bit-exactly. Throws IoError on
// malformed input.
Report parse_report(const std::string& text);

}  // namespace qwolst

#endif
