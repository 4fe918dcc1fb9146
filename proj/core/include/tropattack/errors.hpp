#pragma once

#include <stdexcept>
#include <string>

namespace tropattack {

// Base class for all library errors. code() is a stable machine-readable
// identifier; the CLI emits it in its JSON error reports.
class TropError : public std::runtime_error {
public:
    TropError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Operand shapes do not allow the requested operation.
class DimensionError : public TropError {
public:
    explicit DimensionError(const std::string& message)
        : TropError("dimension_error", message) {}
};

// An exact value left the representable 64-bit rational range.
class OverflowError : public TropError {
public:
    explicit OverflowError(const std::string& message)
        : TropError("overflow_error", message) {}
};

// A spectral precondition failed (diverging series, acyclic digraph, ...).
class SpectrumError : public TropError {
public:
    explicit SpectrumError(const std::string& message)
        : TropError("spectrum_error", message) {}
};

// A caller-supplied value violates a documented precondition.
class InputError : public TropError {
public:
    explicit InputError(const std::string& message)
        : TropError("input_error", message) {}
};

// The discrete-log instance is degenerate: lambda = 0 makes the exponent
// unrecoverable in principle.
class PeriodicAmbiguityError : public TropError {
public:
    explicit PeriodicAmbiguityError(const std::string& message)
        : TropError("periodic_ambiguity", message) {}
};

// No exponent consistent with the instance was found.
class NotFoundError : public TropError {
public:
    explicit NotFoundError(const std::string& message)
        : TropError("not_found", message) {}
};

// The two key-exchange parties derived different keys; the transcript is
// not one the protocol can produce.
class ProtocolInvariantError : public TropError {
public:
    explicit ProtocolInvariantError(const std::string& message)
        : TropError("protocol_invariant", message) {}
};

// Key recovery gave up; the message carries diagnostic context.
class AttackFailure : public TropError {
public:
    explicit AttackFailure(const std::string& message)
        : TropError("attack_failure", message) {}
};

// Malformed serialized input. line/column are 1-based and 0 when unknown.
class ParseError : public TropError {
public:
    ParseError(const std::string& message, int line = 0, int column = 0)
        : TropError("parse_error", message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

}  // namespace tropattack
