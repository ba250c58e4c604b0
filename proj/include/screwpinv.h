/* C interface to the screw pseudoinverse engine.
 *
 * All analysis entry points take a parsed document handle plus plain-string
 * options, and return a JSON report through *report (heap-allocated; release
 * with sp_string_free). A report is produced whenever the input document was
 * valid, including failure verdicts; inspect the status for the outcome.
 */
#ifndef SCREWPINV_H
#define SCREWPINV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
    SP_OK = 0,
    SP_NO_PSEUDOINVERSE = 2, /* analysis ran; the requested inverse does not exist */
    SP_INVALID_INPUT = 3     /* malformed document, options, or preconditions */
} sp_status;

typedef struct sp_document sp_document;

/* Parses a JacobianDocument JSON string. On failure returns
 * SP_INVALID_INPUT and leaves *out untouched; see sp_last_error(). */
sp_status sp_document_parse(const char* json, sp_document** out);
void sp_document_free(sp_document* doc);

/* h is "inf", a rational string ("-3/2"), or a decimal. */
sp_status sp_pinv(const sp_document* doc, const char* h, char** report);

/* reciprocal_h may be NULL; when given, the report includes the basis of the
 * h-reciprocal system. */
sp_status sp_classify(const sp_document* doc, const char* reciprocal_h, char** report);

sp_status sp_involution(const sp_document* doc, char** report);

sp_status sp_reciprocal(const sp_document* doc, const char* h, char** report);

/* options is a JSON object:
 *   {"twist": [6 numbers or strings], "h": "1", "damp": "1/100",
 *    "point": [3], "direction": [3]}
 * Either twist, or point+direction, must be present; damp is optional. */
sp_status sp_project(const sp_document* doc, const char* options, char** report);

void sp_string_free(char* s);

/* Message for the most recent failure on this thread; empty string if none. */
const char* sp_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* SCREWPINV_H */
