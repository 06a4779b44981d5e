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

/*
 * C interface to the qwolst verification engine.
 *
 * The engine checks the congruences and identities around the q-analogue
 * of Wolstenholme's harmonic congruence: q-harmonic sums in the quotient
 * rings Q[q]/([p]_q^k) by exact rational arithmetic, plus floating-point
 * cross-checks of the root-of-unity machinery behind them.
 *
 * Usage: build a qw_config, run it, inspect the qw_report. All handles are
 * opaque; functions return qw_status codes and never throw. Per-item
 * verification failures are report entries, not API errors: qw_run returns
 * QW_OK for a sweep that produced failing entries, and the report's exit
 * status distinguishes pass (0) from fail/error (1).
 */

#ifndef QWOLST_H
#define QWOLST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qw_status {
    QW_OK = 0,
    QW_EINVAL = 1,   /* invalid configuration or argument */
    QW_EIO = 2,      /* I/O failure */
    QW_EINTERNAL = 3 /* unexpected internal failure */
} qw_status;

typedef struct qw_config qw_config;
typedef struct qw_report qw_report;

/* Library version, e.g. "0.1.0". */
const char* qw_version(void);

/* Static description of a status code. */
const char* qw_strerror(qw_status status);

/* Message from the most recent failing call on this thread ("" if none). */
const char* qw_last_error(void);

/* Configuration. A fresh config sweeps primes 2..53 with every check at
 * parallelism 1 and the default sample seed. */
qw_config* qw_config_new(void);
void qw_config_free(qw_config* config);

qw_status qw_config_set_range(qw_config* config, int min_p, int max_p);
/* Explicit integer list; overrides the range. Non-primes yield NotPrime
 * report entries. */
qw_status qw_config_set_primes(qw_config* config, const int* values, size_t count);
/* Comma-separated selectors: wolstenholme, squares, andrews, theorem1,
 * lemma2w, lemma2p, limit, telescope, symmetrize, zeta, closedform,
 * cycloprod; or the aliases all, exact, numeric. */
qw_status qw_config_set_checks(qw_config* config, const char* csv);
qw_status qw_config_set_parallelism(qw_config* config, int workers);
qw_status qw_config_set_seed(qw_config* config, uint64_t seed);
/* Negative-control mode: adds +1 to every expected constant so each
 * affected check must fail. */
qw_status qw_config_set_mutation(qw_config* config, int enabled);

/* Runs the sweep. On QW_OK the caller owns *out_report. */
qw_status qw_run(const qw_config* config, qw_report** out_report);
void qw_report_free(qw_report* report);

/* 0 when every entry passed, 1 otherwise. */
int qw_report_exit_status(const qw_report* report);
qw_status qw_report_counts(const qw_report* report, int* n_pass, int* n_fail, int* n_error);
int qw_report_entry_count(const qw_report* report);

/* JSON document with the full results; owned by the report. */
const char* qw_report_json(qw_report* report);

#ifdef __cplusplus
}
#endif

#endif /* QWOLST_H */
