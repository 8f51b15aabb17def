// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace margin {

/// Raised when an input violates a documented invariant. `where` carries
/// a file:line or field context when the value came from a parsed document.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
    ValidationError(const std::string& where, const std::string& message)
        : std::runtime_error(where + ": " + message) {}
};

/// Raised when a file cannot be opened, read, or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace margin
