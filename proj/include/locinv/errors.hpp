#pragma once

#include <stdexcept>
#include <string>

namespace locinv {

// Base for all toolkit errors so callers can catch one type at the boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InversionOfZero : Error {
    InversionOfZero() : Error("inversion of zero element") {}
};

struct MismatchedField : Error {
    explicit MismatchedField(const std::string& where)
        : Error("mismatched fields in " + where) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& where)
        : Error("dimension mismatch in " + where) {}
};

struct ValueOutOfRange : Error {
    explicit ValueOutOfRange(const std::string& what)
        : Error("value out of range: " + what) {}
};

struct BadField : Error {
    explicit BadField(const std::string& what) : Error("bad field parameters: " + what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what)
        : Error("index out of range: " + what) {}
};

struct InsufficientTerms : Error {
    explicit InsufficientTerms(const std::string& what)
        : Error("insufficient sequence terms: " + what) {}
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("polynomial has zero constant term") {}
};

struct DomainTooLarge : Error {
    explicit DomainTooLarge(const std::string& what)
        : Error("domain too large for exhaustive work: " + what) {}
};

struct NotPeriodic : Error {
    explicit NotPeriodic(const std::string& what)
        : Error("state is not on a periodic orbit: " + what) {}
};

struct BadInstance : Error {
    explicit BadInstance(const std::string& what) : Error("bad instance: " + what) {}
};

// Raised by black-box map evaluation; solvers treat it as a per-trajectory failure.
struct MapEvalError : Error {
    explicit MapEvalError(const std::string& what) : Error("map evaluation failed: " + what) {}
};

// A scalar multiple that lands on the point at infinity has no bit encoding.
struct InfinityEncoding : MapEvalError {
    InfinityEncoding() : MapEvalError("multiple is the point at infinity") {}
};

struct NotOnCurve : Error {
    NotOnCurve() : Error("point does not satisfy the curve equation") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace locinv
