#pragma once

#include <string>

#include "vpf/exactmath.hpp"

namespace vpf::io {

/// Text form "d n" followed by d rows of n integers, or JSON {"rows": d, "cols": n, "entries": [[...], ...]}.
/// Throws Error(Parse) on malformed input.
IntMatrix parse_matrix(const std::string& text);

/// Reads a matrix file; "-" reads standard input. Throws Error(Parse) when the file cannot be read.
IntMatrix read_matrix(const std::string& path);

/// Comma-separated integers, e.g. "5,4,3,2".
IntVector parse_vector(const std::string& text);

/// Integer literal with optional sign.
Integer parse_integer(const std::string& text);

}  // namespace vpf::io
