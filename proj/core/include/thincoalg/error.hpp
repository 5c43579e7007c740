#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thincoalg {

enum class ErrorKind {
    parse,
    unknown_op,
    duplicate_op,
    index_out_of_range,
    arity_cap_exceeded,
    malformed_permutation,
    length_mismatch,
    signature_mismatch,
    not_thin,
    not_polynomial,
    bound_exceeded,
    invalid_argument,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception; `kind()` lets front ends map failures to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace thincoalg
