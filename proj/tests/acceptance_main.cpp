#include <iostream>

#include "hcw/acceptance.hpp"

int main()
{
  auto const results = hcw::run_acceptance(HCW_CORPUS_DIR);
  for (auto const &r : results)
    std::cerr << "criterion " << r.id << ": " << r.seconds << " s\n";
  std::cout << hcw::acceptance_report(results);
  for (auto const &r : results)
    if (!r.pass)
      return 1;
  return 0;
}
