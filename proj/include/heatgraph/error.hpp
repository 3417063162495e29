#pragma once

#include <stdexcept>
#include <string>

namespace heatgraph {

enum class ErrorCode {
    invalid_matrix,
    log_undefined,
    ill_conditioned,
    singular_matrix,
    not_symmetric,
    too_short,
    invalid_band,
    non_positive_sample,
    too_few,
    zero_variance,
    config_error,
    io_error,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Library-wide exception; every failure path carries a code plus context.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace heatgraph
