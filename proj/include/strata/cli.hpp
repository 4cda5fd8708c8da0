#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "strata/pieri.hpp"

namespace strata {

struct StratumRow {
  int index = 0;
  std::string label;  // "height 3", "supersingular, artin 10", "artin 2 (split)", "empty"
  BaseClass cls;
};

// Rows 1..2m of the class table for primitive cohomology of dimension n.
// Odd n uses case B; even n takes Duntwisted or Dtwisted.
std::vector<StratumRow> stratum_table(int n, Case c);

// argv without the program name.  Exit codes: 0 ok, 1 mismatch, 2 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strata
