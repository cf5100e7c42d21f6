#ifndef TUTTEX_ERRORS_HPP
#define TUTTEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tuttex {

// Malformed input text; line is 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// An operation was called on a graph that violates its stated hypotheses.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exponential-cost oracle refused to run above its configured size cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tuttex

#endif
