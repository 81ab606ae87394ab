#pragma once

#include <string>

namespace excessd {

/// Shortest round-trip decimal representation of a double (to_chars).
std::string format_number(double value);

/// Scientific notation with three significant digits, e.g. "8.74E-09".
std::string format_scientific3(double value);

}  // namespace excessd
