#include <math.h>
#include <stdio.h>

#include "uncopy.h"

#define CHECK(call)                                                        \
  do {                                                                     \
    UncopyStatus s_ = (call);                                              \
    if (s_ != UNCOPY_STATUS_OK) {                                          \
      const char *m_ = uncopy_last_error();                                \
      fprintf(stderr, "%s: status %d: %s\n", #call, (int)s_, m_ ? m_ : ""); \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  UncopyMachine *m = NULL;
  UncopyMachineReport r;
  double residual = 1.0;

  CHECK(uncopy_machine_counterexample(0, 0, &m));
  CHECK(uncopy_machine_report(m, &r));
  CHECK(uncopy_machine_verify_uncopy(m, 0.6, 0.0, 0.0, 0.8, &residual));
  uncopy_machine_free(m);

  printf("feasible=%d is_swap=%d swap_deviation=%.6f residual=%.3e\n",
         r.feasible, r.is_swap, r.swap_deviation, residual);

  if (uncopy_fidelity(NULL, NULL, &residual) != UNCOPY_STATUS_NULL_POINTER) {
    return 1;
  }
  return (r.feasible && !r.is_swap && residual < 1e-9) ? 0 : 1;
}
