// Acceptance driver: runs the self-check registry and prints one line per
// criterion. Exit status is nonzero when any executed check fails.
//
// Usage: qbound_acceptance [--quick] [--only ID ...]

#include "qbound/checks.hpp"

#include <cstdio>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
  qbound::CheckOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      options.quick = true;
    } else if (std::strcmp(argv[i], "--only") == 0) {
      while (i + 1 < argc && argv[i + 1][0] != '-') options.only.emplace_back(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--only ID ...]\n", argv[0]);
      return 2;
    }
  }

  const auto results = qbound::run_acceptance_checks(options);
  if (results.empty()) {
    std::fprintf(stderr, "no checks matched the --only filter\n");
    return 2;
  }

  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s %s — %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                r.description.c_str(), r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu passed, %d failed\n", results.size() - failed, failed);
  return failed == 0 ? 0 : 1;
}
