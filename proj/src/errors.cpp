#include "mgdiv/errors.hpp"

namespace mgdiv {

const char* errc_name(errc c) {
    switch (c) {
        case errc::disconnected_graph: return "DisconnectedGraph";
        case errc::degenerate_graph: return "DegenerateGraph";
        case errc::nonpositive_length: return "NonpositiveLength";
        case errc::duplicate_id: return "DuplicateID";
        case errc::point_off_graph: return "PointOffGraph";
        case errc::offset_out_of_range: return "OffsetOutOfRange";
        case errc::empty_set: return "EmptySet";
        case errc::empty_targets: return "EmptyTargets";
        case errc::malformed_set: return "MalformedSet";
        case errc::not_proper: return "NotProper";
        case errc::not_convex: return "NotConvex";
        case errc::eps_too_large: return "EpsTooLarge";
        case errc::non_integer_lengths: return "NonIntegerLengths";
        case errc::ground_set_too_large: return "GroundSetTooLarge";
        case errc::solver_not_available: return "SolverNotAvailable";
        case errc::degree_out_of_range: return "DegreeOutOfRange";
        case errc::not_effective: return "NotEffective";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::iteration_bound_exceeded: return "IterationBoundExceeded";
        case errc::too_large: return "TooLarge";
        case errc::malformed_input: return "MalformedInput";
        case errc::internal_invariant: return "InternalInvariant";
    }
    return "UnknownError";
}

} // namespace mgdiv
