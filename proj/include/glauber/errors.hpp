#pragma once

#include <stdexcept>
#include <string>

namespace glauber {

enum class Errc {
    invalid_size,
    invalid_coupling,
    dimension_mismatch,
    index_out_of_range,
    zero_matrix,
    no_convergence,
    invalid_input,
    not_differentiable,
    requires_positive_couplings,
    too_large,
    numerical_failure,
    closure_violation,
    insufficient_data,
};

const char* errc_name(Errc code) noexcept;

// All library errors carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
    throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

} // namespace glauber
