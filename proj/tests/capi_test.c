/* Exercises the shared library through the C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "gdifs/gdifs.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static const char* kExampleC =
    "family: {a: \"1/4\", g_u: \"5/12\", b: \"1/3\", c: \"1/7\", g_v: \"11/21\", d: \"1/3\"}\n";

int main(void) {
  gdifs_ifs* ifs = NULL;
  EXPECT(gdifs_parse(kExampleC, &ifs) == GDIFS_OK);
  EXPECT(ifs != NULL);
  EXPECT(gdifs_vertex_count(ifs) == 2);

  double s = 0.0, h[2] = {0.0, 0.0};
  EXPECT(gdifs_dimension(ifs, 1e-12, &s, h, 2) == GDIFS_OK);
  EXPECT(fabs(s - 0.514706992840621001) < 1e-10);
  EXPECT(fabs(h[0] - 1.0) < 1e-12);
  EXPECT(fabs(h[1] - 0.897894303784159606) < 1e-9);

  int holds = 0;
  EXPECT(gdifs_cssc(ifs, &holds) == GDIFS_OK && holds == 1);

  gdifs_certification cert;
  EXPECT(gdifs_certify(ifs, &cert) == GDIFS_OK);
  EXPECT(cert.status == GDIFS_CERTIFIED);
  EXPECT(cert.failed_condition == 0);
  EXPECT(cert.has_measures == 1);
  EXPECT(fabs(cert.cond3_value - 2.08238992300096589) < 1e-8);

  gdifs_verdict verdict = GDIFS_INCONCLUSIVE;
  char* doc = NULL;
  EXPECT(gdifs_classify(ifs, 0, &verdict, &doc) == GDIFS_OK);
  EXPECT(verdict == GDIFS_NOT_ONE_VERTEX_ATTRACTOR);
  EXPECT(doc != NULL && strstr(doc, "exact-measure-independence-equal-bd") != NULL);
  gdifs_string_free(doc);
  EXPECT(gdifs_classify(ifs, 0, &verdict, NULL) == GDIFS_OK);

  char* emitted = NULL;
  EXPECT(gdifs_emit(ifs, &emitted) == GDIFS_OK);
  gdifs_ifs* again = NULL;
  EXPECT(gdifs_parse(emitted, &again) == GDIFS_OK);
  EXPECT(gdifs_vertex_count(again) == 2);
  gdifs_string_free(emitted);
  gdifs_free(again);

  gdifs_run_options opts;
  gdifs_run_options_init(&opts);
  char* out = NULL;
  char* err = NULL;
  EXPECT(gdifs_run("gaps", ifs, &opts, &out, &err) == 0);
  EXPECT(out != NULL && strstr(out, "5/12") != NULL);
  gdifs_string_free(out);
  gdifs_string_free(err);

  opts.interval_lo = "2";
  opts.interval_hi = "3";
  err = NULL;
  EXPECT(gdifs_run("density", ifs, &opts, NULL, &err) == 2);
  EXPECT(err != NULL && strlen(err) > 0);
  gdifs_string_free(err);
  EXPECT(gdifs_run("bogus", ifs, &opts, NULL, NULL) == 2);

  /* example B fails condition 2 */
  gdifs_ifs* b = NULL;
  EXPECT(gdifs_canonical("11/23", "5/23", "7/23", "43/73", "7/73", "23/73", &b) == GDIFS_OK);
  EXPECT(gdifs_certify(b, &cert) == GDIFS_OK);
  EXPECT(cert.status == GDIFS_FAILED_CONDITION && cert.failed_condition == 2);
  EXPECT(cert.has_measures == 0);
  gdifs_free(b);

  /* error paths */
  gdifs_ifs* bad = NULL;
  EXPECT(gdifs_parse("vertices: 2\nedges:\n  - {id: 1, from: 0, to: 1, ratio: \"1/2\", translation: \"0\"}\n"
                     "  - {id: 2, from: 0, to: 1, ratio: \"1/2\", translation: \"1/2\"}\n",
                     &bad) == GDIFS_NOT_STRONGLY_CONNECTED);
  EXPECT(bad == NULL);
  EXPECT(strlen(gdifs_last_error()) > 0);
  EXPECT(gdifs_canonical("1/2", "1/2", "1/2", "1/3", "1/3", "1/3", &bad) == GDIFS_SUM_NOT_ONE);
  EXPECT(gdifs_parse("family: {a: 0.25}", &bad) == GDIFS_INVALID_INPUT);
  EXPECT(gdifs_dimension(NULL, 1e-12, &s, NULL, 0) == GDIFS_INVALID_ARGUMENT);
  EXPECT(strcmp(gdifs_status_name(GDIFS_CSSC_VIOLATED), "CsscViolated") == 0);
  EXPECT(strcmp(gdifs_status_name(GDIFS_OK), "Ok") == 0);

  gdifs_free(ifs);
  gdifs_free(NULL);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi_test: all checks passed\n");
  return failures ? 1 : 0;
}
