// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit status is zero only when every criterion passes within its budget.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "nsym/verify.hpp"

int main(int argc, char** argv) {
  nsym::verify::VerifyOptions opt;
  for (int a = 1; a + 1 < argc; a += 2) {
    if (std::strcmp(argv[a], "--seed") == 0) opt.seed = std::strtoull(argv[a + 1], nullptr, 10);
    if (std::strcmp(argv[a], "--trials") == 0) opt.trials = std::atoi(argv[a + 1]);
  }

  int failed = 0;
  double total = 0;
  for (int k = 1; k <= nsym::verify::criterion_count(); ++k) {
    nsym::verify::CheckResult r = nsym::verify::run_criterion(k, opt);
    total += r.seconds;
    std::printf("%s criterion %2d (%s): %s  [%.3fs <= %.0fs]\n", r.pass ? "PASS" : "FAIL", k,
                r.name.c_str(), r.details.c_str(), r.seconds, r.limit_seconds);
    for (const auto& n : r.notes) std::printf("     note: %s\n", n.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%d criteria passed in %.2fs\n", nsym::verify::criterion_count() - failed,
              nsym::verify::criterion_count(), total);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
