#pragma once

#include <charconv>
#include <string>

namespace evomlp {

// Locale-independent float formatting via to_chars.

// 6 significant digits, %g style; CSV and table cells.
std::string format_real(double value, int significant_digits = 6);

// Shortest representation that parses back to the same double; Proben1 rows.
std::string format_real_roundtrip(double value);

}  // namespace evomlp
