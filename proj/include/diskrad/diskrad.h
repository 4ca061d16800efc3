/* diskrad - steady-state radiative-conductive thin-disk simulator.
 *
 * C interface to the solver library. All functions are thread-safe as long
 * as each handle is used by one thread at a time; distinct handles may be
 * used concurrently. Handles returned through an out-parameter are owned by
 * the caller and must be released with the matching *_free function. Strings
 * returned through `char**` out-parameters are heap-allocated and must be
 * released with dr_string_free().
 *
 * All quantities are SI: metres, kelvin, watts.
 */
#ifndef DISKRAD_H
#define DISKRAD_H

#include <stddef.h>

#if defined _WIN32
#define DISKRAD_API __declspec(dllexport)
#else
#define DISKRAD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DISKRAD_VERSION_STRING "0.1.0"

typedef enum dr_status {
  DR_OK = 0,
  DR_ERR_INVALID_ARGUMENT = 1, /* bad parameter value or null pointer */
  DR_ERR_PARSE = 2,            /* malformed or non-conforming config text */
  DR_ERR_NO_CONVERGENCE = 3,   /* Newton iteration did not reach tolerance */
  DR_ERR_NUMERICAL = 4,        /* singular linear system or non-finite state */
  DR_ERR_INTERNAL = 5
} dr_status;

/* Raw physical/geometric inputs. sigma <= 0 selects the CODATA default. */
typedef struct dr_disk_params {
  double radius;        /* R  [m]               */
  double thickness;     /* h  [m]               */
  double conductivity;  /* k  [W m^-1 K^-1]     */
  double emissivity;    /* eps, in (0, 1]       */
  double sigma;         /* [W m^-2 K^-4]        */
  double q0;            /* source density [W m^-3] */
  double source_radius; /* a  [m], 0 < a <= R   */
  double t_ambient;     /* [K]                  */
} dr_disk_params;

typedef struct dr_derived_params {
  double alpha; /* eps*sigma/(k*h) [m^-2 K^-3] */
  double p_in;  /* pi*a^2*h*q0 [W]             */
  double area;  /* pi*R^2 [m^2]                */
  double t_iso; /* isothermal-equivalent temperature [K] */
} dr_derived_params;

typedef struct dr_field_stats {
  double t_bar;               /* area-averaged temperature [K]   */
  double mean_t4;             /* <T^4> [K^4]                     */
  double variance;            /* Var(T - t_ambient) [K^2]        */
  double dt_max;              /* T(0) - t_ambient [K]            */
  double t_iso;               /* [K]                             */
  double t_bar_anal;          /* variance-relation prediction [K]*/
  double identity_residual;   /* |<T^4> - t_iso^4| / t_iso^4     */
  double relation_error;      /* |t_bar - t_bar_anal| [K]        */
  double normalized_variance; /* variance / t_ambient^2          */
} dr_field_stats;

typedef struct dr_solve_report {
  int converged;
  int iterations;
  int damping_events;
  double residual_norm; /* max-norm of the discrete residual [K m^-2] */
} dr_solve_report;

/* Zero-initialise and set the fields you need; zero means "default"
 * (n_cells 2000, max_iter 50, tol 1e-8 * alpha * t_ambient^4). */
typedef struct dr_solve_options {
  size_t n_cells;
  double tol;
  int max_iter;
} dr_solve_options;

/* Defaults: nr 800, nz 10, max_iter 50, tol as above. */
typedef struct dr_solve2d_options {
  size_t nr;
  size_t nz;
  double tol;
  int max_iter;
} dr_solve2d_options;

typedef struct dr_sweep_spec {
  double q0_min;
  double q0_max;
  size_t n_points;
  int log_spacing;
  size_t n_cells; /* 0 -> 2000 */
  double tol;     /* 0 -> auto  */
  int max_iter;   /* 0 -> 50    */
} dr_sweep_spec;

typedef struct dr_sweep_row {
  double q0;
  double dt_max;
  double variance;
  double normalized_variance;
  double t_iso;
  double t_bar_num;
  double t_bar_anal;
  double abs_error;
  int converged;
} dr_sweep_row;

typedef struct dr_thin_plate_result {
  double peak_rise_rel_deviation; /* |dT1d - dT2d| / dT1d           */
  double peak_abs_rel_deviation;  /* |T1d - T2d| / T1d              */
  double profile_maxnorm_K;       /* max_r |T1d(r) - T2d,mid(r)|    */
  double t_peak_1d_K;
  double t_peak_2d_mid_K;
} dr_thin_plate_result;

typedef struct dr_convergence_result {
  size_t n_cells[3];
  double t_peak_K[3];    /* T at the cell nearest the axis */
  double observed_order; /* NaN when exact */
  int exact;             /* grid differences at machine noise */
} dr_convergence_result;

typedef struct dr_params dr_params;
typedef struct dr_solution dr_solution;
typedef struct dr_field2d dr_field2d;
typedef struct dr_sweep dr_sweep;

DISKRAD_API const char* dr_version(void);

/* Message describing the most recent failure on the calling thread. */
DISKRAD_API const char* dr_last_error(void);

DISKRAD_API void dr_string_free(char* s);

/* ---- parameters ---------------------------------------------------- */

DISKRAD_API dr_status dr_params_create(const dr_disk_params* in,
                                       dr_params** out);

/* Accepts either the canonical config object {"disk": {...}} or the bare
 * disk object with keys r, h, k, emissivity, sigma (optional), q0, a,
 * t_ambient. Unknown keys are rejected. */
DISKRAD_API dr_status dr_params_from_json(const char* json_text,
                                          dr_params** out);

DISKRAD_API void dr_params_free(dr_params* p);
DISKRAD_API dr_status dr_params_get(const dr_params* p, dr_disk_params* out);
DISKRAD_API dr_status dr_params_derived(const dr_params* p,
                                        dr_derived_params* out);

/* 1 when h/R exceeds the thin-plate advisory ratio 0.05. */
DISKRAD_API int dr_params_thin_plate_warning(const dr_params* p);

/* ---- reduced (1D) solve -------------------------------------------- */

/* On DR_OK or DR_ERR_NO_CONVERGENCE, *out holds the final field. */
DISKRAD_API dr_status dr_solve1d(const dr_params* p,
                                 const dr_solve_options* opts,
                                 dr_solution** out);
DISKRAD_API void dr_solution_free(dr_solution* s);
DISKRAD_API dr_status dr_solution_report(const dr_solution* s,
                                         dr_solve_report* out);
DISKRAD_API size_t dr_solution_n_cells(const dr_solution* s);

/* Copies cell-center radii and temperatures into caller buffers of length
 * `capacity` (must be >= dr_solution_n_cells). Either pointer may be null. */
DISKRAD_API dr_status dr_solution_profile(const dr_solution* s, double* r_m,
                                          double* t_K, size_t capacity);
DISKRAD_API dr_status dr_solution_stats(const dr_solution* s,
                                        dr_field_stats* out);
DISKRAD_API dr_status dr_solution_profile_csv(const dr_solution* s,
                                              char** out);
DISKRAD_API dr_status dr_solution_stats_json(const dr_solution* s,
                                             char** out);

/* ---- axisymmetric (2D) solve --------------------------------------- */

DISKRAD_API dr_status dr_solve2d(const dr_params* p,
                                 const dr_solve2d_options* opts,
                                 dr_field2d** out);
DISKRAD_API void dr_field2d_free(dr_field2d* f);
DISKRAD_API dr_status dr_field2d_report(const dr_field2d* f,
                                        dr_solve_report* out);
DISKRAD_API dr_status dr_field2d_csv(const dr_field2d* f, char** out);

/* Mid-plane radial profile with its statistics, as a dr_solution. */
DISKRAD_API dr_status dr_field2d_midplane(const dr_field2d* f,
                                          dr_solution** out);

/* ---- studies -------------------------------------------------------- */

DISKRAD_API dr_status dr_sweep_run(const dr_params* base,
                                   const dr_sweep_spec* spec, dr_sweep** out);
DISKRAD_API void dr_sweep_free(dr_sweep* s);
DISKRAD_API size_t dr_sweep_size(const dr_sweep* s);
DISKRAD_API dr_status dr_sweep_row_get(const dr_sweep* s, size_t index,
                                       dr_sweep_row* out);
DISKRAD_API dr_status dr_sweep_csv(const dr_sweep* s, char** out);

/* json_out may be null. Fails with DR_ERR_NO_CONVERGENCE if either solve
 * does not converge. */
DISKRAD_API dr_status dr_validate_thin_plate(const dr_params* p,
                                             size_t n_cells, size_t nr,
                                             size_t nz,
                                             dr_thin_plate_result* out,
                                             char** json_out);

DISKRAD_API dr_status dr_convergence_study(const dr_params* p, size_t n_base,
                                           dr_convergence_result* out,
                                           char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DISKRAD_H */
