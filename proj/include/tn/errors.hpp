#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tn {

// Unreadable/unwritable files and other OS-level I/O failures. CLI exit code 2.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data. Carries a byte offset or line number when one is known.
// CLI exit code 3.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
    parse_error(const std::string& what, uint64_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::optional<uint64_t> offset() const { return offset_; }

private:
    std::optional<uint64_t> offset_;
};

// Invalid arguments or configuration, detected before any real work. CLI exit code 4.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Numeric failures: non-convergence, undefined correlations. CLI exit code 5.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
    numeric_error(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}

    std::optional<double> residual() const { return residual_; }

private:
    std::optional<double> residual_;
};

} // namespace tn
