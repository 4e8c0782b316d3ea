#ifndef GST_H
#define GST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GST_API __declspec(dllexport)
#else
#define GST_API __attribute__((visibility("default")))
#endif

typedef enum gst_status {
    GST_OK = 0,
    GST_ERR_PRECONDITION = 2,
    GST_ERR_NOT_CLOSED = 3,
    GST_ERR_VIOLATION = 4,
    GST_ERR_INTERNAL = 5
} gst_status;

typedef struct gst_automaton gst_automaton;
typedef struct gst_semigroup gst_semigroup;

/* Message for the last non-OK status on the calling thread; never NULL. */
GST_API const char* gst_last_error(void);
/* Every char* returned through an out parameter must be released with this. Out parameters are set to
   NULL on entry, so they are safe to free after any status. */
GST_API void gst_string_free(char* s);
GST_API const char* gst_version(void);

/* Cap on McCammond cover vertices (default 5000). */
GST_API void gst_set_max_states(size_t cap);
GST_API size_t gst_max_states(void);

GST_API gst_status gst_automaton_from_json(const char* json, gst_automaton** out);
GST_API gst_status gst_automaton_to_json(const gst_automaton* a, char** out);
GST_API void gst_automaton_free(gst_automaton* a);
/* Replaces the geometric rank carried by the automaton, given as {"rank": {"<edge id>": r}}. */
GST_API gst_status gst_automaton_set_rank(gst_automaton* a, const char* rank_json);

/* format: "json", "dot" or "text" */
GST_API gst_status gst_analyze(const gst_automaton* a, const char* format, char** out);
/* Analyzes either an automaton or a semigroup ({"table": ...}) document. */
GST_API gst_status gst_analyze_json(const char* json, const char* format, char** out);
/* Returns GST_ERR_VIOLATION when the expression and the acceptor disagree up to length depth. */
GST_API gst_status gst_kleene(const gst_automaton* a, int depth, const char* format, char** out);
GST_API gst_status gst_mac_cover(const gst_automaton* a, const char* format, char** out);

GST_API gst_status gst_semigroup_from_json(const char* json, gst_semigroup** out);
/* alphabet: whitespace or comma separated letters; relations: one "u = v" per line. */
GST_API gst_status gst_semigroup_from_presentation(const char* alphabet, const char* relations, int bound,
                                                   gst_semigroup** out);
GST_API gst_status gst_semigroup_to_json(const gst_semigroup* s, char** out);
GST_API gst_status gst_semigroup_analyze(const gst_semigroup* s, const char* format, char** out);
GST_API size_t gst_semigroup_size(const gst_semigroup* s);
GST_API void gst_semigroup_free(gst_semigroup* s);

/* name: rkr kr rrh rh br rb lz rz zp zp:<p> malcev; bound <= 0 searches for a stable bound.
   basis is the identity text for malcev and ignored otherwise. out_semigroup may be NULL.
   Returns GST_ERR_NOT_CLOSED when the certificate does not close, GST_ERR_VIOLATION when a check fails;
   the report is still written in both cases. */
GST_API gst_status gst_expand(const gst_semigroup* s, const char* name, int bound, int prime, const char* basis,
                              const char* format, char** report, gst_semigroup** out_semigroup);

/* Newline separated suite names. */
GST_API gst_status gst_verify_suites(char** out);
/* size 0 picks the suite default. Returns GST_ERR_VIOLATION on any failure, with the log written. */
GST_API gst_status gst_verify(const char* suite, uint64_t seed, int size, char** log);

/* red() over single-character letters. */
GST_API gst_status gst_red(const char* word, char** out);

#ifdef __cplusplus
}
#endif

#endif
