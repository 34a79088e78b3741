/* Copyright 2026 The parasol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiled as plain C: proves the public header needs no C++ and the shared
 * library is usable from C through the documented surface alone. */

#include <parasol/parasol.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

static void expect(int condition, const char* what) {
  if (!condition) {
    fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

int main(void) {
  expect(parasol_version() != NULL && strlen(parasol_version()) > 0, "version string");

  char* example = NULL;
  expect(parasol_example_json(&example) == PARASOL_OK, "example bytes");
  expect(example != NULL && strstr(example, "\"dim\": 4") != NULL, "example contains dim 4");

  parasol_manifold* m = NULL;
  expect(parasol_manifold_from_json(example, &m, NULL) == PARASOL_OK, "load example bytes");
  expect(parasol_manifold_dim(m) == 4, "dimension accessor");
  parasol_string_free(example);

  char* report = NULL;
  expect(parasol_verify(m, &report) == PARASOL_OK, "verify status");
  expect(report != NULL && strstr(report, "\"fail\": 0") != NULL, "verify report clean");
  parasol_string_free(report);

  report = NULL;
  expect(parasol_soliton(m, "xi", "1", "0", NULL, &report) == PARASOL_OK, "soliton status");
  expect(report != NULL && strstr(report, "\"kernel_dimension\": 3") != NULL,
         "soliton kernel dimension 3");
  parasol_string_free(report);

  report = NULL;
  expect(parasol_connection(m, "1", NULL, NULL, &report) == PARASOL_BAD_ARGUMENT,
         "missing b rejected");
  parasol_string_free(report);

  parasol_manifold* missing = NULL;
  char* diag = NULL;
  expect(parasol_manifold_open("/nonexistent/nowhere.json", &missing, &diag) ==
             PARASOL_IO_ERROR,
         "missing file status");
  expect(missing == NULL, "missing file handle stays null");
  parasol_string_free(diag);

  parasol_manifold_close(m);
  parasol_manifold_close(NULL); /* must be a no-op */

  if (failures == 0) {
    printf("c consumer: all checks passed\n");
    return 0;
  }
  return 1;
}
