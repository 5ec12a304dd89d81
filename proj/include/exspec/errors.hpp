#pragma once

#include <stdexcept>
#include <string>

namespace exspec {

// Malformed graph input (edge-list text, hex string, graph6 line).
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation was refused because it would exceed a hard size guard
// (level dimension cap, exact-arithmetic cap, brute-force vertex cap).
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace exspec
