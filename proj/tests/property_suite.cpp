// Standalone property runner: hecke_properties [seed] [random-cases]

#include <cstdlib>
#include <iostream>
#include <string>

#include "properties.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = props::default_seed;
  std::size_t cases = 2000;
  if (argc > 1) seed = std::stoull(argv[1]);
  if (argc > 2) cases = std::stoull(argv[2]);

  std::cout << "seed " << seed << "\n";
  bool ok = true;
  for (const auto& r : props::run_all(seed, cases)) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (r.failures) std::cout << ", " << r.failures << " failures, first: " << r.first_failure;
    std::cout << ")\n";
    ok = ok && r.ok();
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
