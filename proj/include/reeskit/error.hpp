#ifndef REESKIT_ERROR_HPP
#define REESKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace reeskit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingMismatchError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct IllDefinedMapError : Error {
    using Error::Error;
};

struct NonInjectiveBaseChange : Error {
    using Error::Error;
};

struct UnitIdealError : Error {
    using Error::Error;
};

struct NotAssociatedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

} // namespace reeskit

#endif
