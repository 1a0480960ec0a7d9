#pragma once

#include <stdexcept>
#include <string>

namespace superfrieze {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error("not invertible: " + msg) {}
};

struct ParityMismatch : Error {
    explicit ParityMismatch(const std::string& msg) : Error("parity mismatch: " + msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NotInGroup : Error {
    explicit NotInGroup(const std::string& msg) : Error("not a group element: " + msg) {}
};

struct RuleViolation : Error {
    explicit RuleViolation(const std::string& msg) : Error("frieze rule violated: " + msg) {}
};

struct NotGeneric : Error {
    explicit NotGeneric(const std::string& msg) : Error("not generic: " + msg) {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& msg) : Error("frieze not closed: " + msg) {}
};

struct NotHill : Error {
    explicit NotHill(const std::string& msg) : Error("monodromy condition fails: " + msg) {}
};

struct InsufficientSupport : Error {
    explicit InsufficientSupport(const std::string& msg) : Error("insufficient support: " + msg) {}
};

struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

} // namespace superfrieze
