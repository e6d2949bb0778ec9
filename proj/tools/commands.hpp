#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aztec/pathfam.hpp"

namespace aztec::cli {

// n(n-1)/2 bits from a std::mt19937_64 seeded with `seed`, one per draw (the
// top bit of each 64-bit output), assigned in the digit order of
// BitTriangle::from_index. mt19937_64 output is fixed by the standard, so the
// triangle is the same on every platform.
BitTriangle sample_triangle(std::size_t n, std::uint64_t seed);

// Runs the command line `args` (without the program name). Files named by
// --input/--output are read and written directly; otherwise `in` and `out`
// are used. Returns the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace aztec::cli
