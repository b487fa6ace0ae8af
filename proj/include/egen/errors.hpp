#pragma once

#include <stdexcept>
#include <string>

namespace egen {

// Raised for anything wrong with a problem description: bad syntax, refuted
// operator flags, invalid weight functions, goals with undefined components.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
    ConfigError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

}  // namespace egen
