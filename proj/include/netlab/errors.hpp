#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netlab {

/// Malformed input data (CSV rows, bank codes, config files). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::string message, std::int64_t line = -1, std::string field = {})
        : std::runtime_error(annotate(message, line, field)),
          line_(line),
          field_(std::move(field)) {}

    std::int64_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string annotate(const std::string& message, std::int64_t line,
                                const std::string& field) {
        std::string out = message;
        if (!field.empty()) out += " (field '" + field + "')";
        if (line >= 0) out += " at line " + std::to_string(line);
        return out;
    }

    std::int64_t line_;
    std::string field_;
};

/// Empty or degenerate network (no trades in the year, n < 2, no arcs). CLI exit code 3.
class EmptyNetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Statistical precondition failure (too few samples, zero variance, degenerate
/// distributions). CLI exit code 4.
class StatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netlab
