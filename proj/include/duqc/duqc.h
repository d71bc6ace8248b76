/* Copyright 2026 The duqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DUQC_DUQC_H
#define DUQC_DUQC_H

#include <stddef.h>
#include <stdint.h>

#if defined(DUQC_BUILDING)
#define DUQC_API __attribute__((visibility("default")))
#else
#define DUQC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum duqc_status {
  DUQC_OK = 0,
  DUQC_INVALID_ARGUMENT = 1,
  DUQC_PARSE = 2,
  DUQC_NOT_DUAL_UNITARY = 3,
  DUQC_NOT_SOLVABLE = 4,
  DUQC_LATE_REGIME = 5,
  DUQC_CAP_EXCEEDED = 6,
  DUQC_UNREACHABLE = 7,
  DUQC_INTERNAL = 8
} duqc_status;

/* Message of the last failing call on this thread; never NULL. */
DUQC_API const char *duqc_last_error(void);
DUQC_API const char *duqc_status_name(duqc_status s);
DUQC_API const char *duqc_version(void);
/* Releases strings returned through char ** out-parameters. */
DUQC_API void duqc_string_free(char *s);

/* Two-qubit gates are 4x4 row-major complex matrices stored as 32 doubles
 * (re, im interleaved) over the basis |00>, |01>, |10>, |11>. */
DUQC_API duqc_status duqc_gate_from_json(const char *json, double out[32]);
DUQC_API duqc_status duqc_gate_check(const double g[32], double tol, int *unitary,
                                     int *dual_unitary, double *unitary_residual,
                                     double *dual_residual);
DUQC_API duqc_status duqc_gate_dual(const double g[32], double out[32]);
DUQC_API duqc_status duqc_gate_random_dual(uint64_t seed, double out[32]);
/* Single-qubit factors are 2x2 row-major complex (8 doubles); NULL means I. */
DUQC_API duqc_status duqc_gate_build_dual(double phi, double alpha, const double u1[8],
                                          const double u2[8], const double v1[8],
                                          const double v2[8], double out[32]);

/* Solvable MPS tensor, optionally with a fixed (alpha, beta) boundary. */
typedef struct duqc_tensor duqc_tensor;
DUQC_API duqc_status duqc_tensor_epr(duqc_tensor **out);
DUQC_API duqc_status duqc_tensor_random(int chi, uint64_t seed, duqc_tensor **out);
DUQC_API duqc_status duqc_tensor_from_json(const char *json, duqc_tensor **out);
DUQC_API duqc_status duqc_tensor_set_fixed_boundary(duqc_tensor *t, int alpha, int beta);
DUQC_API duqc_status duqc_tensor_to_json(const duqc_tensor *t, char **out_json);
/* {"pass", "residual_row", "residual_column", "lambda0", "lambda1", "unique_max"} */
DUQC_API duqc_status duqc_tensor_report(const duqc_tensor *t, double tol, char **out_json);
DUQC_API void duqc_tensor_free(duqc_tensor *t);

/* A 1D brickwork or a 2D lattice circuit. */
typedef struct duqc_circuit duqc_circuit;
DUQC_API duqc_status duqc_circuit_from_json(const char *json, duqc_circuit **out);
DUQC_API duqc_status duqc_circuit_random_1d(int num_cells, int t, uint64_t seed, int open,
                                            duqc_circuit **out);
DUQC_API duqc_status duqc_circuit_random_2d(int rows, int cols, int t, uint64_t seed,
                                            int honeycomb, duqc_circuit **out);
DUQC_API duqc_status duqc_circuit_compile_cz(int num_cells, int a, int b,
                                             duqc_circuit **out);
/* target: {"n", "readout", "ops": [{"op": "H"|"X"|"Z"|"S"|"T"|"u", "q", ["u"]},
 *          {"op": "cz", "q", "q2"}]}; sites are 1-based. */
DUQC_API duqc_status duqc_circuit_compile_universal(const char *target_json, int num_cells,
                                                    duqc_circuit **out, int *readout_site,
                                                    double *target_value);
DUQC_API duqc_status duqc_circuit_cluster_1d(int m, duqc_circuit **out);
DUQC_API duqc_status duqc_circuit_cluster_2d(int side, duqc_circuit **out);
DUQC_API duqc_status duqc_circuit_kicked_ising_2d(int rows, int cols, double J, double Jk,
                                                  double h, double b, int self_dual,
                                                  int periods, duqc_circuit **out);
DUQC_API duqc_status duqc_circuit_to_json(const duqc_circuit *c, char **out_json);
/* dims is 1 or 2; qubits is the total qubit count; depth the layer count. */
DUQC_API duqc_status duqc_circuit_info(const duqc_circuit *c, int *dims, int *qubits,
                                       int *depth);
DUQC_API void duqc_circuit_free(duqc_circuit *c);

typedef struct duqc_options {
  double delta;   /* regime margin */
  double c_const; /* error-budget constant; < 0 selects 2 chi^2 */
  int cap;        /* dense oracle qubit cap; <= 0 selects the module default */
  double tol;     /* agreement tolerance for method "both" */
} duqc_options;

DUQC_API void duqc_options_default(duqc_options *opt);

/* method: "fast", "oracle", "both". init may be NULL for the EPR chain.
 * Observables: "Z@3", "ZZ@4,5", "P0@2" (1D) or "Z@2:3", "ZZZZ@1:1" (2D).
 * Returns {"value": [re, im], "method", "bound", "regime", ...}. On
 * DUQC_LATE_REGIME the JSON still carries the regime and any oracle value. */
DUQC_API duqc_status duqc_expval(const duqc_circuit *c, const duqc_tensor *init,
                                 const char *obs, const char *method,
                                 const duqc_options *opt, char **out_json);
/* Early-time value for a periodic chain of 2N qubits without building it. */
DUQC_API duqc_status duqc_expval_fast_analytic(long long num_cells, int t,
                                               const duqc_tensor *init, const char *obs,
                                               const duqc_options *opt, char **out_json);

/* kind 1: (j, k) with (j, k + r); kind 2: (j, k) with (j + r, k).
 * oa, ob are single-site words such as "Z" or "P0". */
DUQC_API duqc_status duqc_correlation(const duqc_circuit *c, const duqc_tensor *init,
                                      int kind, int j, int k, int r, const char *oa,
                                      const char *ob, int cap, char **out_json);

/* Stabilizer report for circuits made by the cluster constructors. */
DUQC_API duqc_status duqc_cluster_verify(const duqc_circuit *c, double tol,
                                         char **out_json);

/* Writes shots words into out; bit q of a word is qubit q. */
DUQC_API duqc_status duqc_sample(const duqc_circuit *c, const duqc_tensor *init,
                                 size_t shots, uint64_t seed, int cap, uint64_t *out);
DUQC_API duqc_status duqc_dump_state(const duqc_circuit *c, const duqc_tensor *init,
                                     int cap, const char *path);

/* Max deviation of the compiled circuit's unitary from CZ_{a,b} up to phase. */
DUQC_API duqc_status duqc_cz_deviation(const duqc_circuit *c, int a, int b,
                                       double *deviation);
/* {"max_deviation", "kernel_residual", "kernel_dual_unitary"} */
DUQC_API duqc_status duqc_kicked_ising_check(int rows, int cols, double J, double Jk,
                                             double h, double b, int periods, int samples,
                                             uint64_t seed, char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* DUQC_DUQC_H */
