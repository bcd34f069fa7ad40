#include "dh/error.hpp"

namespace dh {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::CyclicGraph: return "CyclicGraph";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::Endpoint: return "EndpointError";
    case ErrorKind::Functoriality: return "FunctorialityError";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::UnknownColim: return "UnknownColim";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace dh
