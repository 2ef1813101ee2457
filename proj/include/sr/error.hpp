#pragma once

#include <stdexcept>
#include <string>

namespace sr {

// Computation or precondition failure. The CLI maps this to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input. The CLI maps this to exit code 2.
class ParseError : public Error {
public:
    ParseError(const std::string &what, int line, int column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string &what, int line, int column) {
        std::string s = "line " + std::to_string(line);
        if (column > 0)
            s += ", column " + std::to_string(column);
        return s + ": " + what;
    }
    int line_;
    int column_;
};

} // namespace sr
