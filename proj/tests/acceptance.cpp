#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "amds/checks.hpp"

// One PASS/FAIL line per acceptance criterion, notes indented below.
int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int k = 1; k < argc; ++k) ids.push_back(std::atoi(argv[k]));
  if (ids.empty())
    for (int k = 1; k <= 10; ++k) ids.push_back(k);
  int failed = 0;
  for (int id : ids) {
    amds::CriterionResult r = amds::run_criteria({id})[0];
    std::printf("%s criterion %d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
    for (const std::string& n : r.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed == 0 ? 0 : 1;
}
