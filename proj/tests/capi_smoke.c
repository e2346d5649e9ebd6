/* Exercises the C interface from plain C. */
#include "veesys/veesys.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

int main(void) {
  veesys_system* f4 = NULL;
  veesys_system* e8 = NULL;
  veesys_system* f6 = NULL;
  veesys_system* bad = NULL;
  veesys_system* copy = NULL;
  char* text = NULL;
  int flag = 0;
  double residual = 0.0, margin = 0.0;
  double coords[8];

  EXPECT(veesys_build("F4:lambda=1", &f4) == VEESYS_OK);
  EXPECT(veesys_dim(f4) == 4);
  EXPECT(veesys_count(f4) == 24);
  EXPECT(strcmp(veesys_name(f4), "F4:lambda=1") == 0);
  EXPECT(veesys_covector(f4, 0, coords, 8) == VEESYS_OK);
  EXPECT(veesys_covector(f4, 99, coords, 8) == VEESYS_E_INVALID_ARGUMENT);
  EXPECT(veesys_covector(f4, 0, coords, 2) == VEESYS_E_INVALID_ARGUMENT);

  EXPECT(veesys_check(f4, NULL, &flag, &text) == VEESYS_OK);
  EXPECT(flag == 1);
  EXPECT(text != NULL && strstr(text, "\"is_vee\":true") != NULL);
  veesys_string_free(text);
  text = NULL;

  EXPECT(veesys_wdvv_sweep(f4, NULL, 10, &residual, &margin) == VEESYS_OK);
  EXPECT(residual < 1e-9);
  EXPECT(margin > 0.0);

  EXPECT(veesys_to_json(f4, &text) == VEESYS_OK);
  EXPECT(veesys_from_json(text, &copy) == VEESYS_OK);
  EXPECT(veesys_equivalent(f4, copy, NULL, &flag, NULL) == VEESYS_OK);
  EXPECT(flag == 1);
  veesys_string_free(text);
  text = NULL;

  EXPECT(veesys_build("E8", &e8) == VEESYS_OK);
  EXPECT(veesys_restrict(e8, "e7-e8,e7+e8", NULL, &f6, &text) == VEESYS_OK);
  EXPECT(veesys_count(f6) == 68);
  EXPECT(veesys_dim(f6) == 6);
  veesys_string_free(text);
  text = NULL;

  EXPECT(veesys_restrict(e8, "e1-e2,e2-e3,e3-e4,e4-e5,e5-e6,e6-e7,e7-e8,e7+e8", NULL, &bad, NULL) ==
         VEESYS_E_EMPTY_SUBSPACE);
  EXPECT(bad == NULL);
  EXPECT(strlen(veesys_last_error()) > 0);

  EXPECT(veesys_build("I2:m=2", &bad) == VEESYS_E_INVALID_SPEC);
  EXPECT(strstr(veesys_last_error(), "'m'") != NULL);
  EXPECT(veesys_from_json("{\"dim\": 3, \"covectors\": [[1,0,0],[0,1,0]]}", &bad) == VEESYS_OK);
  EXPECT(veesys_check(bad, NULL, &flag, NULL) == VEESYS_E_DEGENERATE_FORM);
  veesys_free(bad);
  EXPECT(veesys_from_json("{", &bad) == VEESYS_E_PARSE);
  EXPECT(veesys_load("/nonexistent.json", &bad) == VEESYS_E_IO);
  EXPECT(veesys_check(NULL, NULL, &flag, NULL) == VEESYS_E_INVALID_ARGUMENT);

  {
    veesys_tolerance tol = veesys_tolerance_default();
    EXPECT(tol.eps_rank == 1e-9);
    EXPECT(tol.eps_residual == 1e-8);
    tol.eps_rank = -1.0;
    EXPECT(veesys_check(f4, &tol, &flag, NULL) == VEESYS_E_PRECONDITION);
  }

  EXPECT(veesys_catalog("F4", 0.5, &text) == VEESYS_OK);
  EXPECT(text != NULL && strstr(text, "\"count\":13") != NULL);
  veesys_string_free(text);
  EXPECT(veesys_catalog("G2", NAN, &text) == VEESYS_E_INVALID_SPEC);

  EXPECT(strcmp(veesys_status_name(VEESYS_E_SINGULAR_POINT), "SingularPoint") == 0);

  veesys_free(copy);
  veesys_free(f6);
  veesys_free(e8);
  veesys_free(f4);
  veesys_free(NULL);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
