#pragma once

#include <stdexcept>
#include <string>

namespace mmm {

// Single error type for all domain failures: mismatched generator tables,
// degree or parity violations, malformed input files, out-of-range parameters.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond)
        throw Error(msg);
}

}  // namespace mmm
