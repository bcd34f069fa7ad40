#pragma once

#include <stdexcept>
#include <string>

namespace dh {

enum class ErrorKind {
    CyclicGraph,
    BoundExceeded,
    NotNormal,
    Endpoint,
    Functoriality,
    PreconditionFailed,
    UnknownColim,
    Schema,
    Validation,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

}  // namespace dh
