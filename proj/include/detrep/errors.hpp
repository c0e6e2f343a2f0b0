#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace detrep {

// Byte range [start, end) into the offending input text.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

// Base for all typed errors. `code` is a stable machine-readable name
// (e.g. "NotDivisible"); `what()` carries the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message,
          std::optional<SourceSpan> span = std::nullopt)
        : std::runtime_error(message), code_(std::move(code)), span_(span) {}

    const std::string& code() const { return code_; }
    const std::optional<SourceSpan>& span() const { return span_; }

private:
    std::string code_;
    std::optional<SourceSpan> span_;
};

// Bad input or unsatisfied precondition: the caller's fault. CLI exit 1.
class InputError : public Error {
public:
    using Error::Error;
};

// A guaranteed identity failed to hold: our fault, never expected. CLI exit 2.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message)
        : Error("InternalAssertionFailure", message) {}
};

}  // namespace detrep
