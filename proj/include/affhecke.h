#ifndef AFFHECKE_H
#define AFFHECKE_H

/* C interface to the affine Hecke algebra library. All functions return a
 * status code (AH_OK on success); output strings are heap-allocated and must
 * be released with ah_string_free. ah_last_error() returns a thread-local
 * message describing the most recent failure. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ah_algebra ah_algebra;
typedef struct ah_elem ah_elem;

typedef int ah_status;

#define AH_OK 0
#define AH_ERR_MALFORMED_SCALAR 1
#define AH_ERR_NONINVERTIBLE_MODULUS 2
#define AH_ERR_DENOMINATOR_ZERO 3
#define AH_ERR_DIVISION_BY_ZERO 4
#define AH_ERR_FIELD_MISMATCH 5
#define AH_ERR_LENGTH_MISMATCH 6
#define AH_ERR_INDEX_OUT_OF_RANGE 7
#define AH_ERR_NOT_DIVISIBLE 8
#define AH_ERR_ZERO_COORDINATE 9
#define AH_ERR_PRODUCT_NOT_ONE 10
#define AH_ERR_ZERO_PARAMETER 11
#define AH_ERR_PARAMETER_MISMATCH 12
#define AH_ERR_MISSING_IMAGE 13
#define AH_ERR_INVALID_MODULE 14
#define AH_ERR_WITNESS_VERIFICATION_FAILED 15
#define AH_ERR_CERTIFICATE_UNAVAILABLE 16
#define AH_ERR_RANK_TOO_SMALL 17
#define AH_ERR_PARSE 18
#define AH_ERR_INTERNAL 19

/* Name of a status code, e.g. "FieldMismatch". */
const char* ah_status_name(ah_status status);

/* Thread-local message for the last failing call in this thread. */
const char* ah_last_error(void);

/* field: "Q", "Fp:<prime>" or "Qq"; q: scalar expression in that field. */
ah_status ah_algebra_create(int n, const char* field, const char* q, ah_algebra** out);
void ah_algebra_destroy(ah_algebra* algebra);

ah_status ah_elem_parse(const ah_algebra* algebra, const char* text, ah_elem** out);
/* Structural product of a space-separated generator word, e.g. "T1 Xinv2". */
ah_status ah_elem_from_word(const ah_algebra* algebra, const char* word, ah_elem** out);
ah_status ah_elem_mul(const ah_elem* lhs, const ah_elem* rhs, ah_elem** out);
ah_status ah_elem_add(const ah_elem* lhs, const ah_elem* rhs, ah_elem** out);
ah_status ah_elem_equal(const ah_elem* lhs, const ah_elem* rhs, int* out_equal);
ah_status ah_elem_to_string(const ah_elem* elem, char** out);
void ah_elem_destroy(ah_elem* elem);

/* Rendered operations (text or JSON documents, trailing newline included). */
ah_status ah_render_mul(const ah_algebra* algebra, const char* lhs, const char* rhs, int json,
                        char** out);
ah_status ah_render_nf(const ah_algebra* algebra, const char* word, int json, char** out);
/* p: presentation parameter ("" or NULL uses the algebra parameter).
 * images: optional generator-image file content, one `name = element`
 * assignment per line (names t1..tn, x1..x{n+1}, optionally tinv1.. and
 * xinv1..); NULL checks the defining generators. all_pass receives 1/0. */
ah_status ah_render_relcheck(const ah_algebra* algebra, const char* p, const char* images,
                             int json, int note_typo, char** out, int* all_pass);
ah_status ah_render_center(const ah_algebra* algebra, int json, char** out, int* all_central);
ah_status ah_render_symcheck(int n, const char* field, int json, char** out, int* all_hold);
/* branch: "sign", "index" or "both". */
ah_status ah_render_onedim(int n, const char* field, const char* q, const char* branch, int json,
                           char** out);
/* verdict receives 0 (isomorphic), 1 (not isomorphic) or 2 (inconclusive). */
ah_status ah_render_iso(int n, const char* field, const char* q, const char* p, int json,
                        char** out, int* verdict);

void ah_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AFFHECKE_H */
