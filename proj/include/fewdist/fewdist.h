#ifndef FEWDIST_FEWDIST_H
#define FEWDIST_FEWDIST_H

/* C interface to the fewdist engine. Every entry point returns an fd_status;
 * on failure *out is set to NULL and fd_last_error() describes the problem.
 * Results own their strings until fd_result_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FD_BUILDING_LIBRARY)
#    define FD_API __declspec(dllexport)
#  else
#    define FD_API __declspec(dllimport)
#  endif
#else
#  define FD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
  FD_OK = 0,               /* success, or an exact value */
  FD_GAP = 1,              /* sound result, but bounds do not meet or a check failed */
  FD_ERR_INVALID = 2,      /* bad parameters or unreadable input */
  FD_BUDGET_EXHAUSTED = 3, /* search stopped at its node budget */
  FD_ERR_INTERNAL = 4      /* an internal consistency check failed */
} fd_status;

typedef struct fd_space fd_space;
typedef struct fd_code fd_code;
typedef struct fd_result fd_result;

FD_API const char* fd_version(void);
/* Message for the last failure on the calling thread, "" if none. */
FD_API const char* fd_last_error(void);

FD_API fd_status fd_space_hamming(int n, fd_space** out);
FD_API fd_status fd_space_johnson(int n, int w, fd_space** out);
FD_API void fd_space_free(fd_space* space);

FD_API fd_status fd_code_load_file(const char* path, fd_code** out);
FD_API fd_status fd_code_parse(const char* text, fd_code** out);
FD_API size_t fd_code_size(const fd_code* code);
FD_API int fd_code_length(const fd_code* code);
FD_API void fd_code_free(fd_code* code);

/* method: auto, harmonic, conditional, lp, det, refined, ekr, forbidden,
 * packing, spherical or oracle. budget only affects oracle. */
FD_API fd_status fd_bound(const fd_space* space, const int* distances, size_t count, const char* method,
                          uint64_t budget, fd_result** out);
/* Determinant bound for any 1 <= w <= n. */
FD_API fd_status fd_bound_det(int n, int w, const int* distances, size_t count, fd_result** out);
FD_API fd_status fd_exact(const fd_space* space, int s, fd_result** out);
FD_API fd_status fd_table1(int n_max, fd_result** out);
FD_API fd_status fd_appendix_check(int w, int s, int n_max, fd_result** out);
FD_API fd_status fd_oracle(const fd_space* space, int s, uint64_t budget, fd_result** out);
/* distances may be NULL to use the code's own distance set; distribution may
 * be NULL to use the code's triple distribution. */
FD_API fd_status fd_sdp_check(const fd_space* space, const fd_code* code, const int* distances, size_t count,
                              const char* distribution, fd_result** out);
/* The code's triple distribution as JSON. */
FD_API fd_status fd_sdp_distribution(const fd_space* space, const fd_code* code, fd_result** out);
FD_API fd_status fd_thm11(int n_min, int n_max, fd_result** out);

FD_API const char* fd_result_json(const fd_result* result);
FD_API const char* fd_result_table(const fd_result* result);
FD_API fd_status fd_result_status(const fd_result* result);
FD_API void fd_result_free(fd_result* result);

FD_API uint64_t fd_default_budget(void);

#ifdef __cplusplus
}
#endif

#endif
