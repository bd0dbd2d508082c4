#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Executable acceptance checks, shared by the acceptance test binary and
// the CLI `repro` recipes. Random fixtures use fixed seeds.
namespace shiftgraph::acceptance {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Report = std::vector<Check>;

bool all_passed(const Report &r);

Report shift_identity();           // 1
Report structure_observations();   // 2
Report odd_girth_lift();           // 3
Report chromatic_sandwich();       // 4
Report log_coloring();             // 5
Report kab_pipeline();             // 6
Report kab_single(int n, int a, int b);
Report cycle_lemma(int lo = 4, int hi = 10); // 7
Report gadget_non_aop();           // 8
Report zykov_pipeline();           // 9
Report zykov_single(int n, int g);
Report girth5_construction();      // 10
Report g92_non_aop(std::uint64_t budget = 1'000'000'000, int threads = 1); // 11
Report oracle_equivalences();      // 12

} // namespace shiftgraph::acceptance
