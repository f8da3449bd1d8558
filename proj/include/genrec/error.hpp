#pragma once

#include <stdexcept>
#include <string>

namespace genrec {

// Error codes shared by the whole library; the C API maps them 1:1.
enum class Errc {
    malformed_cycle,
    repeated_point,
    out_of_range,
    degree_mismatch,
    not_a_permutation,
    not_transitive,
    not_two_transitive,
    budget_exceeded,
    not_prime_power,
    equal_points,
    unknown_family,
    bad_params,
    no_gap,
    degenerate_line,
    line_too_large,
    inconsistent_lines,
    insufficient_samples,
    not_projective_parameters,
    completion_failed,
    not_a_collineation,
    not_a_block_system,
    dimension_too_small,
    io_error,
    parse_error,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

const char* errc_name(Errc code);

} // namespace genrec
