#pragma once

#include <stdexcept>
#include <string>

namespace pmdecomp {

// Base for all model / computation errors. `code()` is the stable
// machine-readable identifier the CLI prints.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct BadIntervalError : Error {
    explicit BadIntervalError(const std::string& what) : Error("bad_interval", what) {}
};

struct NonMonotonePieceError : Error {
    explicit NonMonotonePieceError(const std::string& what) : Error("non_monotone_piece", what) {}
};

struct EscapesDomainError : Error {
    explicit EscapesDomainError(const std::string& what) : Error("escapes_domain", what) {}
};

struct SMissingBreakpointError : Error {
    explicit SMissingBreakpointError(const std::string& what) : Error("s_missing_breakpoint", what) {}
};

struct OutOfDomainError : Error {
    explicit OutOfDomainError(const std::string& what) : Error("out_of_domain", what) {}
};

struct ComplexityExceededError : Error {
    explicit ComplexityExceededError(const std::string& what) : Error("complexity_exceeded", what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("bad_config", what) {}
};

} // namespace pmdecomp
