#ifndef MGDIV_ERRORS_HPP
#define MGDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mgdiv {

enum class errc {
    disconnected_graph,
    degenerate_graph,
    nonpositive_length,
    duplicate_id,
    point_off_graph,
    offset_out_of_range,
    empty_set,
    empty_targets,
    malformed_set,
    not_proper,
    not_convex,
    eps_too_large,
    non_integer_lengths,
    ground_set_too_large,
    solver_not_available,
    degree_out_of_range,
    not_effective,
    degree_mismatch,
    iteration_bound_exceeded,
    too_large,
    malformed_input,
    internal_invariant,
};

const char* errc_name(errc c);

// Thrown by all validating operations. `code` drives the CLI exit status:
// iteration_bound_exceeded / not_convex / internal_invariant are invariant
// violations (exit 3), everything else is an input error (exit 2).
struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool cond, errc c, const std::string& what) {
    if (!cond) fail(c, what);
}

inline bool is_invariant_violation(errc c) {
    return c == errc::iteration_bound_exceeded || c == errc::internal_invariant ||
           c == errc::not_convex;
}

} // namespace mgdiv

#endif
