#include "excessd/format.hpp"

#include <charconv>
#include <cstdio>

namespace excessd {

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string format_scientific3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2E", value);
    return std::string(buf);
}

}  // namespace excessd
