#pragma once

#include <stdexcept>
#include <string>

namespace iasl {

/// Raised for malformed input: files, flags, set literals, or operation
/// preconditions violated by caller-supplied data.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iasl
