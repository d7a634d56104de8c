#pragma once

#include <stdexcept>
#include <string>

namespace sckit {

// Base class for all library errors. `kind()` is stable and used by the CLI
// to map failures onto exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& what) : Error("NotAGroup", what) {}
};

struct OrderCapExceeded : Error {
    explicit OrderCapExceeded(const std::string& what) : Error("OrderCapExceeded", what) {}
};

struct NotNormal : Error {
    explicit NotNormal(const std::string& what) : Error("NotNormal", what) {}
};

struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& what) : Error("NotASubgroup", what) {}
};

struct NotAutomorphism : Error {
    explicit NotAutomorphism(const std::string& what) : Error("NotAutomorphism", what) {}
};

// Internal consistency failure while lifting modular character data to exact
// cyclotomic values. Signals a bug, not a user error.
struct LiftFailure : Error {
    explicit LiftFailure(const std::string& what) : Error("LiftFailure", what) {}
};

struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& what) : Error("VerificationFailed", what) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error("SizeMismatch", what) {}
};

struct MismatchBug : Error {
    explicit MismatchBug(const std::string& what) : Error("MismatchBug", what) {}
};

struct InvalidFactors : Error {
    explicit InvalidFactors(const std::string& what) : Error("InvalidFactors", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace sckit
