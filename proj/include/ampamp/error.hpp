#pragma once

#include <stdexcept>
#include <string>

namespace ampamp {

enum class ErrorCode {
    degenerate_subspace,   // a in {0, 1}; the good/bad plane collapses
    excluded_phase,        // a phase value the phase condition cannot use
    unreachable_rotation,  // |sin(step)| exceeds sin(2 theta)
    not_equal_diagonal,    // decomposition requested for an unmatched matrix
    trivial_angles,        // phi = 0, iterates make no progress
    out_of_range,          // argument outside its documented domain
    dimension_limit,       // statevector too large for the simulator
    invalid_marked_set,    // marked set empty, improper, or out of bounds
    model_mismatch,        // plan or schedule used with a different model
    empty_grid,            // sweep over an empty parameter grid
    contract_violation,    // a computed result broke a postcondition
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ampamp
