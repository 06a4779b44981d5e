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

#ifndef QWOLST_RUNNER_HPP
#define QWOLST_RUNNER_HPP

#include "report.hpp"

namespace qwolst {

// Selector names accepted in RunConfig::checks, in canonical order.
// "all", "exact" and "numeric" are accepted as group aliases.
const std::vector<std::string>& known_selectors();

// Expands aliases, validates names (ConfigError on unknown), dedupes and
// returns selectors in canonical order.
std::vector<std::string> normalize_checks(const std::vector<std::string>& requested);

// Runs every selected check over the configured scope. Range mode sweeps
// the primes in [min_p, max_p] and silently skips (prime, check) cells the
// check's precondition excludes; the numeric suite is additionally capped
// at p <= 53. Explicit mode runs every listed integer through every
// selected check, so precondition violations (composite input, p too
// small) surface as error entries instead of aborting the sweep.
// Throws ConfigError on invalid configuration.
Report run_verify(const RunConfig& config);

// 0 when every entry passed, 1 otherwise.
int exit_status_for(const Report& report);

}  // namespace qwolst

#endif
