#pragma once

// Build-time fault selector for the test suite's mutant runs.
//
// Every algorithm in src/*_impl.hpp is a template over Fault; the public
// library only ever instantiates Fault::none, where all the `if constexpr`
// branches below fold away. The other values reproduce classic
// implementation mistakes so the tests can prove the KAT and self-test
// harnesses catch each of them.
namespace ascon::detail {

enum class Fault {
  none,
  wrong_round_constants,        // nibbles of each constant swapped
  left_rotation,                // linear layer rotates left
  missing_linear_xor,           // linear layer drops the s_i term
  missing_init_key_xor,         // no 0* || K after the initial permutation
  extra_final_data_permutation, // permutes after the last data block too
  missing_final_ad_permutation, // skips the permutation after the last AD block
  missing_domain_separator,     // no s4 ^= 1 between AD and data
  wrong_finalize_key_offset,    // finalize injects the key one word too far right
  wrong_iv,                     // IV words of the two variants swapped
};

}  // namespace ascon::detail
