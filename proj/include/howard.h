/* C interface to the Howard-language interpreter.
 *
 * All functions are synchronous. A session owns its environments, store,
 * and definition registry; sessions are independent and may be used from
 * different threads (one thread per session). Strings returned through
 * `char**` out-parameters are heap-allocated; release them with
 * howard_string_free.
 */
#ifndef HOWARD_H
#define HOWARD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct howard_session howard_session;

typedef enum {
  HOWARD_OK = 0,
  HOWARD_ERR_LANGUAGE = 1, /* lex/parse/type/runtime error; see last_error */
  HOWARD_ERR_USAGE = 2     /* invalid arguments to the call itself */
} howard_status;

howard_session* howard_session_new(void);
void howard_session_free(howard_session* s);

/* Evaluation step budget (default 10000000). */
void howard_session_set_fuel(howard_session* s, long long fuel);
/* Fresh-name counter seed for rule generation and specialisation. */
void howard_session_set_seed(howard_session* s, unsigned seed);

/* Program output (prints, REPL prompts and echoes) is pushed here. */
typedef void (*howard_write_fn)(const char* bytes, void* userdata);
/* Interactive input: return a malloc'd line WITHOUT the trailing newline,
 * or NULL at end of input. The library frees the buffer. */
typedef char* (*howard_read_fn)(void* userdata);

void howard_session_set_writer(howard_session* s, howard_write_fn fn,
                               void* userdata);
void howard_session_set_reader(howard_session* s, howard_read_fn fn,
                               void* userdata);

/* Registers a source's definitions (no evaluation). */
howard_status howard_load(howard_session* s, const char* source);

/* Full pipeline: parse, desugar, typecheck, evaluate. On success *value_out
 * (if non-NULL) receives the rendered program value ("" for unit). */
howard_status howard_run(howard_session* s, const char* source,
                         char** value_out);

/* Typecheck only. With dump_types, *out receives one line per application
 * (position, operation, solved type parameters, result type); otherwise the
 * program's type. */
howard_status howard_check(howard_session* s, const char* source,
                           int dump_types, char** out);

/* Signature and transformation rule of a loaded operation, as text or as
 * LaTeX when latex is nonzero. */
howard_status howard_defrule(howard_session* s, const char* name, int latex,
                             char** out);

/* Specialisation trace and final rule for a loaded definition; with
 * call_expr non-NULL, also the terminal mathematical expression of the rule
 * applied to that call. */
howard_status howard_specialize(howard_session* s, const char* name,
                                const char* call_expr, char** out);

/* Interactive read-eval-print loop over the session's reader/writer;
 * startup_source (may be NULL) is evaluated first. Returns when the reader
 * reports end of input. */
howard_status howard_repl(howard_session* s, const char* startup_source);

/* Message of the last failing call on this session ("" if none). The
 * pointer stays valid until the next call on the session. */
const char* howard_last_error(const howard_session* s);

void howard_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* HOWARD_H */
