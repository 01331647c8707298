#include <iostream>

#include "gsp4ad/verify.hpp"

int main() {
  gsp4ad::verifydetail::Timer total;
  auto results = gsp4ad::run_verify("all", gsp4ad::kDefaultVerifySeed);
  for (const auto& r : results) std::cout << gsp4ad::format_check_line(r) << "\n";

  gsp4ad::CheckResult budget{"wall-clock-budget"};
  budget.seconds = total.seconds();
  budget.pass = budget.seconds < 10.0;
  budget.detail = budget.pass ? "full verification under 10s"
                              : "full verification exceeded 10s";
  std::cout << gsp4ad::format_check_line(budget) << "\n";

  return gsp4ad::all_passed(results) && budget.pass ? 0 : 1;
}
