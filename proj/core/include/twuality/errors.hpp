#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twuality {

/// Base error for all library failures (contract violations, bad input).
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Error while reading one of the text formats; carries file and line.
class parse_error : public error {
public:
    parse_error(std::string file, std::size_t line, const std::string& message)
        : error(file + ":" + std::to_string(line) + ": " + message),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

}  // namespace twuality
