#pragma once

#include <stdexcept>
#include <string>

namespace pluripot {

// Error taxonomy mirrors the CLI exit-code contract:
//   DescriptorError -> 2, DomainError -> 3, IoError -> 4, LPError -> 5.

struct DescriptorError : std::runtime_error {
    explicit DescriptorError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LPError : std::runtime_error {
    explicit LPError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pluripot
