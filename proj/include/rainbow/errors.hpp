#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Malformed or out-of-contract input (bad edge, disconnected graph, parse error).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented size cap was exceeded (enumeration order, palette size, ...).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// The requested object does not exist for these parameters.
class infeasible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace rainbow
