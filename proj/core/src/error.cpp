#include "thincoalg/error.hpp"

namespace thincoalg {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::unknown_op: return "unknown operation";
    case ErrorKind::duplicate_op: return "duplicate operation";
    case ErrorKind::index_out_of_range: return "index out of range";
    case ErrorKind::arity_cap_exceeded: return "arity cap exceeded";
    case ErrorKind::malformed_permutation: return "malformed permutation";
    case ErrorKind::length_mismatch: return "length mismatch";
    case ErrorKind::signature_mismatch: return "signature mismatch";
    case ErrorKind::not_thin: return "not thin";
    case ErrorKind::not_polynomial: return "not polynomial";
    case ErrorKind::bound_exceeded: return "bound exceeded";
    case ErrorKind::invalid_argument: return "invalid argument";
    }
    return "error";
}

} // namespace thincoalg
