#pragma once

#include <stdexcept>
#include <string>

namespace oriray {

/// Thrown when an operation is asked to exceed its configured exhaustive cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input files; the message names the first bad token.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace oriray
