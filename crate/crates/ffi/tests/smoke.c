#include <stdio.h>
#include <string.h>

#include "seifert.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "check failed line %d: %s\n", __LINE__, #cond); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    SeifertSymbolHandle *a = NULL, *b = NULL, *bad = NULL;
    CHECK(seifert_symbol_parse("SFS[-1; o 0; (5,1)(5,1)(5,3)]", &a) == SEIFERT_STATUS_OK);
    CHECK(seifert_symbol_parse("SFS[-1; o 0; (5,1)(5,2)(5,2)]", &b) == SEIFERT_STATUS_OK);
    CHECK(seifert_symbol_parse("SFS[bad", &bad) == SEIFERT_STATUS_PARSE);
    CHECK(bad == NULL);
    CHECK(seifert_last_error() != NULL);

    SeifertVerdictHandle *v = NULL;
    CHECK(seifert_decide(a, b, &v) == SEIFERT_STATUS_OK);
    SeifertVerdictKind kind;
    CHECK(seifert_verdict_kind(v, &kind) == SEIFERT_STATUS_OK);
    CHECK(kind == SEIFERT_VERDICT_KIND_HEMPEL);
    CHECK(seifert_verdict_k(v) == 2);

    char *json = NULL;
    CHECK(seifert_verdict_json(v, &json) == SEIFERT_STATUS_OK);
    CHECK(strncmp(json, "{\"kind\":\"hempel\",\"k\":2", 22) == 0);
    seifert_string_free(json);

    int64_t num = 0, den = 0;
    CHECK(seifert_symbol_euler_number(a, &num, &den) == SEIFERT_STATUS_OK);
    CHECK(num == 0 && den == 1);

    seifert_verdict_free(v);
    seifert_symbol_free(a);
    seifert_symbol_free(b);
    puts("ok");
    return 0;
}
