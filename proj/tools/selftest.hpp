#pragma once

#include <cstdint>
#include <ostream>

#include "qtangle/roof.hpp"

namespace qtangle::cli {

// Property suites on n_random seeded random states plus zoo checks; true if all pass.
bool run_selftest(int n_random, std::uint64_t seed, const RoofOptions& roof, std::ostream& out);

}  // namespace qtangle::cli
