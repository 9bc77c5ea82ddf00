#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sally {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the expression parser; carries a 0-based character offset.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Mixing values that belong to different rings or different coefficient fields.
class ring_mismatch_error : public error {
public:
    using error::error;
};

// A numeric pipeline could not produce a certified value (failed fit,
// exhausted truncation schedule where a finite value was required, ...).
class computation_error : public error {
public:
    using error::error;
};

}  // namespace sally
