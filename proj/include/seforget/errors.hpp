#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seforget {

/// Position of a diagnostic in program text (1-based).
struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t length = 0;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidAtom : public Error {
public:
    using Error::Error;
};

/// A rule whose head, positive body and negative body are all empty.
class EmptyRule : public Error {
public:
    EmptyRule() : Error("rule has no literals") {}
    explicit EmptyRule(SourceSpan span)
        : Error("rule has no literals at " + std::to_string(span.line) + ":" + std::to_string(span.column)),
          span_(span) {}
    const SourceSpan& span() const noexcept { return span_; }

private:
    SourceSpan span_{};
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, SourceSpan span)
        : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + what), span_(span) {}
    const SourceSpan& span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

class DecodeError : public Error {
public:
    using Error::Error;
};

class SignatureMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when a brute-force enumeration would exceed its configured atom limit.
class SignatureTooLarge : public Error {
public:
    SignatureTooLarge(std::size_t size, std::size_t limit)
        : Error("signature has " + std::to_string(size) + " atoms, enumeration limit is " + std::to_string(limit)),
          size_(size), limit_(limit) {}
    std::size_t size() const noexcept { return size_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t size_;
    std::size_t limit_;
};

} // namespace seforget
