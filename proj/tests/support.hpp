#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <string>

#include "oracles.hpp"

namespace support {

using namespace oracle;

// Runs `body(rng, case_index)` for `cases` cases from a fixed seed, tagging
// failures with the case number.
template <class Body>
void for_all(std::uint64_t seed, int cases, Body body) {
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    SCOPED_TRACE("seed " + std::to_string(seed) + ", case " + std::to_string(i));
    body(rng, i);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace support
