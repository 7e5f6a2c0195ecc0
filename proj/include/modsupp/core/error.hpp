#pragma once

/// @file error.hpp
/// @brief Exception hierarchy shared by every modsupp component.

#include <stdexcept>
#include <string>
#include <string_view>

namespace modsupp {

enum class ErrorKind {
    validation,    ///< malformed input or violated precondition
    hypothesis,    ///< input violates a structural hypothesis (non-support, non-modular, zero code)
    cap_exceeded,  ///< an exhaustive computation would exceed a configured cap
    internal,      ///< a cross-check failed; indicates a bug rather than bad input
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::validation: return "validation";
        case ErrorKind::hypothesis: return "hypothesis";
        case ErrorKind::cap_exceeded: return "cap_exceeded";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& message) : Error(ErrorKind::validation, message) {}
};

class HypothesisError : public Error {
  public:
    explicit HypothesisError(const std::string& message) : Error(ErrorKind::hypothesis, message) {}
};

class CapExceeded : public Error {
  public:
    explicit CapExceeded(const std::string& message) : Error(ErrorKind::cap_exceeded, message) {}
};

class InternalError : public Error {
  public:
    explicit InternalError(const std::string& message) : Error(ErrorKind::internal, message) {}
};

}  // namespace modsupp
