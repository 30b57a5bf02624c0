// Exercises the CLI exit-code contract by invoking the built binary:
//   0 success, 2 configuration error, 3 numerical non-convergence.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(CASIMIR_NEQ_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int failures = 0;

void expect(const char* what, int got, int want) {
  if (got == want) {
    std::printf("[PASS] %s -> exit %d\n", what, got);
  } else {
    std::printf("[FAIL] %s -> exit %d (expected %d)\n", what, got, want);
    ++failures;
  }
}

}  // namespace

int main() {
  expect("point, plasma model (fast path)",
         run("point --material Au --model plasma --a 1um --d 20nm --t1 300 --t2 500"), 0);
  expect("unknown material", run("point --material Unobtainium --model plasma --a 1um --d 20nm"),
         2);
  expect("bare number without unit suffix",
         run("point --material Au --model plasma --a 1 --d 20nm"), 2);
  expect("unknown flag", run("point --frobnicate 7"), 2);
  expect("find-zero with no crossing (plasma)",
         run("find-zero --material Au --model plasma --a 0.5um --d-lo 20nm --d-hi 30nm"), 2);
  expect("missing config file", run("scan --config /no/such/file.cfg"), 2);
  expect("out-of-range tolerance", run("point --material Au --model plasma --a 1um --d 20nm "
                                       "--tol 0.5"),
         2);
  expect("materials list", run("materials list"), 0);

  if (failures > 0) {
    std::printf("%d exit-code checks failed\n", failures);
    return 1;
  }
  std::printf("all exit-code checks passed\n");
  return 0;
}
