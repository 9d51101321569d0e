#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "loops/loop_table.hpp"

namespace loops {

// ".loop" text format:
//   line 1: the order n
//   next n lines: n whitespace-separated 0-based ids
// '#' starts a comment that runs to the end of the line; blank lines are
// ignored. Anything after the last row is rejected.
LoopTable parse_loop(std::string_view text);
LoopTable read_loop_file(const std::string& path);

std::string format_loop(const LoopTable& q);
void write_loop(std::ostream& out, const LoopTable& q);
void write_loop_file(const std::string& path, const LoopTable& q);

}  // namespace loops
