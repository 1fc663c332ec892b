#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "stanley/ideal.hpp"

namespace stanley {

// Ideal text format, one ideal per file:
//
//   ring <n>
//   gen x1*x2
//   gen x3^2*x5
//
// Blank lines and `#` comments are ignored; whitespace between tokens is free.
// `gen 1` denotes the unit ideal; a file without `gen` lines is the zero ideal.

/// Parse the text format. Throws InputError with a line number on malformed input.
MonomialIdeal parse_ideal(std::string_view text);

MonomialIdeal read_ideal_file(const std::filesystem::path& path);

/// Emit the text format for the minimal generators of the ideal.
std::string format_ideal(const MonomialIdeal& ideal);

void write_ideal_file(const std::filesystem::path& path, const MonomialIdeal& ideal);

}  // namespace stanley
