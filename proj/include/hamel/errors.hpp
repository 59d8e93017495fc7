#ifndef HAMEL_ERRORS_HPP
#define HAMEL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamel {

// Base class for every domain error raised by the library. Errors that carry
// structured payloads (witness vectors, residuals) live next to the types
// they reference.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const { return "error"; }
};

class MixedFieldsError : public Error {
public:
    explicit MixedFieldsError(const std::string& what = "operands belong to different fields")
        : Error(what) {}
    const char* kind() const override { return "mixed_fields"; }
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
    const char* kind() const override { return "division_by_zero"; }
};

class HorizonExceededError : public Error {
public:
    HorizonExceededError(std::uint32_t needed, std::uint32_t available)
        : Error("degree " + std::to_string(needed) + " requested past horizon " +
                std::to_string(available)),
          needed_degree(needed), horizon(available) {}
    const char* kind() const override { return "horizon_exceeded"; }
    std::uint32_t needed_degree;
    std::uint32_t horizon;
};

class NotSubspaceError : public Error {
public:
    explicit NotSubspaceError(const std::string& what = "vectors do not lie in the claimed span")
        : Error(what) {}
    const char* kind() const override { return "not_subspace"; }
};

class DecompositionFailedError : public Error {
public:
    explicit DecompositionFailedError(const std::string& what = "vector has no U+W decomposition")
        : Error(what) {}
    const char* kind() const override { return "decomposition_failed"; }
};

class DegreeBoundViolatedError : public Error {
public:
    explicit DegreeBoundViolatedError(const std::string& what) : Error(what) {}
    const char* kind() const override { return "degree_bound_violated"; }
};

// Raised only when an internal invariant breaks: the dual solver's level
// systems are consistent whenever the injectivity precondition holds.
class InconsistentSystemError : public Error {
public:
    explicit InconsistentSystemError(const std::string& what = "linear system is inconsistent")
        : Error(what) {}
    const char* kind() const override { return "inconsistent_system"; }
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error("syntax error at position " + std::to_string(position) + ": " + message),
          position(position) {}
    const char* kind() const override { return "syntax_error"; }
    std::size_t position;
};

class UnknownVariableError : public Error {
public:
    explicit UnknownVariableError(const std::string& name)
        : Error("unknown variable: " + name), name(name) {}
    const char* kind() const override { return "unknown_variable"; }
    std::string name;
};

} // namespace hamel

#endif
