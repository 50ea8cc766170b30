#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvelab {

// Input text that does not conform to the polynomial grammar or a config
// schema. Carries the byte offset of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Well-formed input outside the supported range: non-coprime (p,q),
// an algebraic extension tower deeper than the supported height, and the like.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& message) : std::runtime_error(message) {}
};

// A configurable resource cap was hit. Raised instead of ever returning a
// wrong or truncated answer.
class step_limit_error : public std::runtime_error {
public:
    explicit step_limit_error(const std::string& message) : std::runtime_error(message) {}
};

} // namespace curvelab
