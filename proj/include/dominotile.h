/*
 * dominotile — exact domino-tiling counts, corner reductions, and family
 * verification for finite grid regions.
 *
 * C interface to the shared library. Regions are opaque handles; every
 * function returns a status code, with a thread-local detail message
 * available through dt_last_error(). Strings returned through out
 * parameters are heap-allocated and must be released with dt_string_free().
 */
#ifndef DOMINOTILE_H
#define DOMINOTILE_H

#if defined(_WIN32)
#define DOMINOTILE_API __declspec(dllexport)
#else
#define DOMINOTILE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dt_region dt_region;

typedef enum dt_status {
  DT_OK = 0,
  DT_ERR_INVALID_ARGUMENT = 1,
  DT_ERR_PARSE = 2,
  DT_ERR_LIMIT = 3,          /* a computation guard (profile width, cell cap) */
  DT_ERR_PRECONDITION = 4,   /* reduction hypotheses not met */
  DT_ERR_NOT_APPLICABLE = 5, /* named cells are outside the region */
  DT_ERR_INTERNAL = 6
} dt_status;

DOMINOTILE_API const char* dt_status_name(dt_status s);
DOMINOTILE_API const char* dt_last_error(void);
DOMINOTILE_API void dt_string_free(char* s);

/*
 * Region construction. dt_region_build accepts the builder mini-grammar
 * name:arg,arg[,arg] with names
 *   rect:a,b        a x b rectangle (a rows, b columns)
 *   holey:m,n       2n x 2n square with centered 2m x 2m hole
 *   holeyodd:m,n    (2n+1) square with centered (2m+1) hole
 *   half:m,n        half of holey:m,n under the jagged cut
 *   hprime:m,n      half:m,n minus its forced bottom-right domino
 *   t:i,j,p         staircase-topped block family
 *   d:i,j,p         doubly staircase-capped block family
 * dt_region_parse reads the ASCII grid format ('#' cell, '.' gap, top row
 * first); dt_region_emit writes it.
 */
DOMINOTILE_API dt_status dt_region_build(const char* spec, dt_region** out);
DOMINOTILE_API dt_status dt_region_parse(const char* text, dt_region** out);
DOMINOTILE_API dt_status dt_region_emit(const dt_region* r, char** out);
DOMINOTILE_API void dt_region_free(dt_region* r);
DOMINOTILE_API int dt_region_cell_count(const dt_region* r);

/*
 * Exact tiling count (decimal string) and its parity. width_limit caps the
 * profile width of the scan; pass 0 for the default (20).
 */
DOMINOTILE_API dt_status dt_count(const dt_region* r, int width_limit, char** decimal_out);
DOMINOTILE_API dt_status dt_parity(const dt_region* r, int width_limit, int* bit_out);

/* Corner listing with completeness/wall annotations, text or JSON lines. */
DOMINOTILE_API dt_status dt_corners(const dt_region* r, int as_json, char** out);

/*
 * Reduction traces. strategy is "wall-greedy" or "cor42" (the rectangle
 * schedule; the region must be a kn x (k+1)n rectangle). label is the text
 * recorded in the trace header. dt_verify_trace replays a trace against its
 * start region and reports one CASE line per step.
 */
DOMINOTILE_API dt_status dt_reduce(const dt_region* r, const char* strategy,
                                   const char* label, int width_limit, char** trace_out);
DOMINOTILE_API dt_status dt_verify_trace(const dt_region* start, const char* trace_text,
                                         int width_limit, char** report_out, int* all_pass);

/*
 * Family/theorem verification report. target is one of "holey",
 * "holey-odd", "rect", "tfamily", "dfamily", "theorem". Bounds <= 0 select
 * the defaults; the report is one line (or JSON object) per case plus a
 * summary, and all_pass reflects the FAIL count.
 */
DOMINOTILE_API dt_status dt_verify(const char* target, int max_n, int max_k, int max_p,
                                   int trials, unsigned int seed, int width_limit,
                                   int as_json, char** report_out, int* all_pass);

/*
 * ASCII picture of the region. When trace_text is non-NULL, the cells
 * removed by the 1-based step number are overlaid as 'x'.
 */
DOMINOTILE_API dt_status dt_render(const dt_region* r, const char* trace_text, int step,
                                   char** out);

#ifdef __cplusplus
}
#endif

#endif /* DOMINOTILE_H */
