#pragma once

// Text formats.
//
//   ideal file                     component file
//   ----------                     --------------
//   ideal <n> [name_1 .. name_n]   components <n> <r>
//   <e_1> .. <e_n>    (p lines)    <b_1> .. <b_n>    (r lines, `inf` allowed)
//   end                            end
//
// Tokens are separated by whitespace. Blank lines and lines whose first
// non-blank character is '#' are ignored on input. Output uses single
// spaces and '\n' and is byte-stable.

#include <string>
#include <string_view>

#include "irrdecomp/core.hpp"
#include "irrdecomp/incremental.hpp"

namespace irrdecomp::io {

GeneratorSet parse_ideal(std::string_view text);
std::string emit_ideal(const GeneratorSet& g);

ComponentSet parse_components(std::string_view text);

/// Lex-sorts before writing.
std::string emit_components(const ComponentSet& c);

GeneratorSet read_ideal_file(const std::string& path);
ComponentSet read_components_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// One JSON object per incremental step with the keys step, alpha,
/// t1_size, t2_size, kept, rejected. Each kept/rejected entry carries
/// beta, u (1-based), d (null when undefined) and component. Coordinates
/// at an injected bound print as "inf".
std::string trace_line(const incremental::StepRecord& rec, const ArtinianizedIdeal& a);

}  // namespace irrdecomp::io
