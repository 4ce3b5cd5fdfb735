#ifndef MGDIV_ENGINE_HPP
#define MGDIV_ENGINE_HPP

#include <optional>

#include "mgdiv/error_minmax.hpp"

namespace mgdiv {

struct TraceEntry {
    long long max_error = 0;        // ME(D + E) at the start of the pass
    AdmissibleSet minmax;           // minmax(D + E), empty on the terminal pass
    int branch_points = 0;          // branch points of the graph inside minmax
    int case_tag = 0;               // 1 = boundary chip of E moved, 2 = S fired, 0 = terminal
    std::optional<Rat> eps;         // case 2
    std::optional<PointRef> moved_from, moved_to; // case 1
};

struct ReductionResult {
    Divisor semibreak;              // effective, degree of the input
    Divisor break_divisor;          // degree g, dominates semibreak
    FiringCertificate certificate;  // replays input -> semibreak exactly
    long long iterations = 0;       // loop passes, terminal pass included
    long long updates = 0;          // case 1/2 updates; at most g * |V_Gamma|
    std::vector<TraceEntry> trace;  // filled only when requested
};

struct ReductionOptions {
    MinimizeStrategy strategy = MinimizeStrategy::exhaustive;
    bool with_trace = false;
};

/// True iff deg(D) = g and the max-error machinery reports the break signal.
bool is_break(const GraphPtr& g, const Divisor& D,
              MinimizeStrategy strategy = MinimizeStrategy::exhaustive);

/// The main reduction: augments D by E = (g - d) * (q) at the smallest-id
/// branch point q, then repeatedly either moves a boundary chip of E to the
/// far branch point of its leaving edge or fires minmax(D + E) to the nearest
/// outside branch point, until D + E is a break divisor. The recorded firing
/// certificate replays D to the returned semibreak divisor.
ReductionResult semibreak_reduce(const GraphPtr& g, const Divisor& D,
                                 const ReductionOptions& opts = {});

/// The unique break divisor linearly equivalent to a degree-g effective
/// divisor; idempotent.
Divisor break_representative(const GraphPtr& g, const Divisor& D,
                             MinimizeStrategy strategy = MinimizeStrategy::exhaustive);

struct EquivalenceResult {
    bool equivalent = false;
    Divisor common_break;          // canonical form of D1 + F (when equivalent)
    FiringCertificate lhs_cert;    // replays D1 + F to its break representative
    FiringCertificate rhs_cert;    // replays D2 + F to its break representative
};

/// Decides D1 ~ D2 for effective divisors of equal degree d <= g by comparing
/// the break representatives of D1 + F and D2 + F, F = (g - d) * (q).
EquivalenceResult are_equivalent(const GraphPtr& g, const Divisor& D1, const Divisor& D2,
                                 MinimizeStrategy strategy = MinimizeStrategy::exhaustive);

} // namespace mgdiv

#endif
