#pragma once

#include <stdexcept>
#include <string>

namespace kei {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a presentation, word, table or diagram file.
class parse_error : public error {
public:
    parse_error(std::string msg, int line, int column)
        : error(std::move(msg) + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}

    int line;
    int column;
};

} // namespace kei
