#pragma once

#include <string>
#include <vector>

// Built-in smoke checks that need no external files: embedded KAT vectors for
// both variants, a round trip and a tamper check per variant, and bijectivity
// of the bitsliced S-box.
namespace ascon {

struct SelftestCheck {
  std::string name;
  bool passed;
};

std::vector<SelftestCheck> run_selftest();

}  // namespace ascon
