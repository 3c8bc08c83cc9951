#ifndef LRHORN_H
#define LRHORN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum LrhornStatus {
  LRHORN_STATUS_OK = 0,
  LRHORN_STATUS_NULL_POINTER = 1,
  LRHORN_STATUS_INVALID_ARGUMENT = 2,
  LRHORN_STATUS_PRECONDITION = 3,
  LRHORN_STATUS_THEOREM_VIOLATION = 4,
  LRHORN_STATUS_OVERFLOW = 5,
  LRHORN_STATUS_PARSE = 6,
  LRHORN_STATUS_IO = 7,
  LRHORN_STATUS_PANIC = 8,
} LrhornStatus;

// The candidate set `P(alpha, beta)`.
typedef struct LrhornCandidateSet LrhornCandidateSet;

// Bipartite graph with explicit colour classes.
typedef struct LrhornGraph LrhornGraph;

// Line graph analysis of one bipartite graph.
typedef struct LrhornReport LrhornReport;

// Ramanujan verdicts for a regular line graph.
typedef struct LrhornRamanujan {
  size_t degree;
  double lambda2;
  double least;
  double bound;
  bool exact;
  bool second_largest;
  bool all_nontrivial;
} LrhornRamanujan;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL. The pointer is
// valid until the next failing call on the same thread.
const char *lrhorn_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *lrhorn_version(void);

// Empty graph with `x_size` and `y_size` vertices in the two classes.
//
// # Safety
// `out_graph` must be valid for writes.
enum LrhornStatus lrhorn_graph_new(size_t x_size, size_t y_size, struct LrhornGraph **out_graph);

// Parses the text or JSON graph format.
//
// # Safety
// `text` must be a NUL-terminated string; `out_graph` valid for writes.
enum LrhornStatus lrhorn_graph_parse(const char *text, struct LrhornGraph **out_graph);

// Adds the edge `x ~ y`.
//
// # Safety
// `graph` must come from this library and not be freed.
enum LrhornStatus lrhorn_graph_add_edge(struct LrhornGraph *graph, size_t x, size_t y);

// # Safety
// `graph` must come from this library; `out_count` valid for writes.
enum LrhornStatus lrhorn_graph_edge_count(const struct LrhornGraph *graph, size_t *out_count);

// # Safety
// `graph` must be NULL or come from this library and not be freed yet.
void lrhorn_graph_free(struct LrhornGraph *graph);

// Analyzes the line graph of a connected bipartite graph.
//
// # Safety
// `graph` must come from this library; `out_report` valid for writes.
enum LrhornStatus lrhorn_analyze(const struct LrhornGraph *graph, struct LrhornReport **out_report);

// # Safety
// `report` must come from this library; `out_flag` valid for writes.
enum LrhornStatus lrhorn_report_is_integral(const struct LrhornReport *report, bool *out_flag);

// Number of failed theorem checks recorded in the report.
//
// # Safety
// `report` must come from this library; `out_count` valid for writes.
enum LrhornStatus lrhorn_report_violation_count(const struct LrhornReport *report,
                                                size_t *out_count);

// JSON encoding of the report. Release it with [`lrhorn_string_free`].
//
// # Safety
// `report` must come from this library; `out_json` valid for writes.
enum LrhornStatus lrhorn_report_to_json(const struct LrhornReport *report, char **out_json);

// # Safety
// `report` must be NULL or come from this library and not be freed yet.
void lrhorn_report_free(struct LrhornReport *report);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void lrhorn_string_free(char *s);

// Ramanujan verdicts for the line graph of `graph`, which must be regular.
//
// # Safety
// `graph` must come from this library; `out_verdict` valid for writes.
enum LrhornStatus lrhorn_line_graph_ramanujan(const struct LrhornGraph *graph,
                                              struct LrhornRamanujan *out_verdict);

// `c^gamma_{alpha beta}`; fails with `LRHORN_STATUS_OVERFLOW` when the
// value does not fit in 64 bits. Partitions are arrays of parts in any
// order; zeros are ignored.
//
// # Safety
// Each array must hold its stated number of elements (or be NULL with
// length 0); `out_value` must be valid for writes.
enum LrhornStatus lrhorn_lr_coefficient(const uint64_t *alpha,
                                        size_t alpha_len,
                                        const uint64_t *beta,
                                        size_t beta_len,
                                        const uint64_t *gamma,
                                        size_t gamma_len,
                                        uint64_t *out_value);

// Whether `c^gamma_{alpha beta} > 0`.
//
// # Safety
// As for [`lrhorn_lr_coefficient`].
enum LrhornStatus lrhorn_lr_positive(const uint64_t *alpha,
                                     size_t alpha_len,
                                     const uint64_t *beta,
                                     size_t beta_len,
                                     const uint64_t *gamma,
                                     size_t gamma_len,
                                     bool *out_flag);

// Exact Horn check on partitions padded with zeros to length `n`.
//
// # Safety
// As for [`lrhorn_lr_coefficient`].
enum LrhornStatus lrhorn_horn_compatible_partitions(const uint64_t *alpha,
                                                    size_t alpha_len,
                                                    const uint64_t *beta,
                                                    size_t beta_len,
                                                    const uint64_t *gamma,
                                                    size_t gamma_len,
                                                    size_t n,
                                                    bool *out_flag);

// Numeric Horn check on three real spectra of length `n`, given in any
// order, with absolute tolerance `tol`.
//
// # Safety
// Each array must hold `n` elements; `out_flag` must be valid for writes.
enum LrhornStatus lrhorn_horn_compatible_f64(const double *alpha,
                                             const double *beta,
                                             const double *gamma,
                                             size_t n,
                                             double tol,
                                             bool *out_flag);

// Computes `P(alpha, beta)`. Release it with [`lrhorn_candidate_set_free`].
//
// # Safety
// As for [`lrhorn_lr_coefficient`]; `out_set` must be valid for writes.
enum LrhornStatus lrhorn_enumerate_p(const uint64_t *alpha,
                                     size_t alpha_len,
                                     const uint64_t *beta,
                                     size_t beta_len,
                                     struct LrhornCandidateSet **out_set);

// # Safety
// `set` must come from this library; `out_len` valid for writes.
enum LrhornStatus lrhorn_candidate_set_len(const struct LrhornCandidateSet *set, size_t *out_len);

// Copies member `index` into `buf` (capacity `cap` parts) and stores its
// length in `out_len`. When `cap` is too small nothing is copied, the
// required length is still stored and the call fails with
// `LRHORN_STATUS_INVALID_ARGUMENT`.
//
// # Safety
// `set` must come from this library; `buf` must hold `cap` elements (or be
// NULL with `cap` 0); `out_len` must be valid for writes.
enum LrhornStatus lrhorn_candidate_set_member(const struct LrhornCandidateSet *set,
                                              size_t index,
                                              uint64_t *buf,
                                              size_t cap,
                                              size_t *out_len);

// # Safety
// `set` must be NULL or come from this library and not be freed yet.
void lrhorn_candidate_set_free(struct LrhornCandidateSet *set);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LRHORN_H */
