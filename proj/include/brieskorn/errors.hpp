#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brieskorn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Operands with different variable counts, parameter counts or modes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A standing hypothesis (commode, nondegenerate, sub-diagram, isolated
/// critical points) is violated. `code` is a stable machine-readable tag.
class HypothesisError : public Error {
public:
    HypothesisError(std::string code, const std::string& what)
        : Error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// A configured step budget ran out before a verdict was reached.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace brieskorn
