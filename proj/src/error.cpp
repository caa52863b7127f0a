#include "ampamp/error.hpp"

namespace ampamp {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::degenerate_subspace: return "degenerate_subspace";
        case ErrorCode::excluded_phase: return "excluded_phase";
        case ErrorCode::unreachable_rotation: return "unreachable_rotation";
        case ErrorCode::not_equal_diagonal: return "not_equal_diagonal";
        case ErrorCode::trivial_angles: return "trivial_angles";
        case ErrorCode::out_of_range: return "out_of_range";
        case ErrorCode::dimension_limit: return "dimension_limit";
        case ErrorCode::invalid_marked_set: return "invalid_marked_set";
        case ErrorCode::model_mismatch: return "model_mismatch";
        case ErrorCode::empty_grid: return "empty_grid";
        case ErrorCode::contract_violation: return "contract_violation";
    }
    return "unknown";
}

}  // namespace ampamp
