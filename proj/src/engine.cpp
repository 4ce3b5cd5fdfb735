#include "mgdiv/engine.hpp"

#include <algorithm>

#include "mgdiv/errors.hpp"

namespace mgdiv {

namespace {

void check_reduce_input(const GraphPtr& g, const Divisor& D) {
    require(D.is_effective(), errc::not_effective, "reduction needs an effective divisor");
    require(0 <= D.degree() && D.degree() <= g->genus(), errc::degree_out_of_range,
            "degree " + std::to_string(D.degree()) + " outside [0, g = " +
                std::to_string(g->genus()) + "]");
}

// Walks from a boundary point along a leaving end to the far branch point of
// its chain; with S convex the walk cannot meet S again first.
PointRef walk_to_branch(const AdmissibleSet& S, int edge, int slot) {
    const Model& m = S.model();
    int e = edge, sl = slot;
    int guard = 0;
    for (;;) {
        require(++guard <= 2 * m.n_edges() + 2, errc::internal_invariant,
                "case-1 walk did not terminate");
        int far = sl == 0 ? m.edge(e).v_hi : m.edge(e).v_lo;
        require(!S.in_I(far), errc::not_convex,
                "leaving segment returns to the minmax set; minmax is not convex");
        if (m.vertex_is_branch(far)) return m.vertex_point(far);
        int far_slot = sl == 0 ? 1 : 0;
        std::pair<int, int> next{-1, -1};
        for (auto& en : m.incident_ends(far))
            if (en != std::make_pair(e, far_slot)) { next = en; break; }
        require(next.first >= 0, errc::internal_invariant, "case-1 walk stuck");
        e = next.first;
        sl = next.second;
    }
}

} // namespace

bool is_break(const GraphPtr& g, const Divisor& D, MinimizeStrategy strategy) {
    require(D.is_effective(), errc::not_effective, "break test needs an effective divisor");
    if (D.degree() != g->genus()) return false;
    return max_error_profile(g, D, strategy).is_break_signal;
}

ReductionResult semibreak_reduce(const GraphPtr& g, const Divisor& D,
                                 const ReductionOptions& opts) {
    check_reduce_input(g, D);
    const long long genus = g->genus();
    const long long d = D.degree();
    const long long bound = genus * static_cast<long long>(g->branch_ids().size());

    const PointRef q = PointRef::vertex(g->branch_ids().front());
    Divisor cur = D;
    Divisor extra;
    extra.add(q, genus - d);

    ReductionResult res;
    for (;;) {
        ++res.iterations;
        Divisor total = cur + extra;
        ErrorProfile prof = max_error_profile(g, total, opts.strategy);

        if (prof.max_error == 0) {
            require(prof.is_break_signal, errc::internal_invariant,
                    "terminal state of degree g without the break signal");
            if (opts.with_trace)
                res.trace.push_back({0, prof.minmax, 0, 0, std::nullopt, std::nullopt,
                                     std::nullopt});
            res.semibreak = std::move(cur);
            res.break_divisor = std::move(total);
            return res;
        }

        AdmissibleSet S = prof.minmax;
        require(is_convex(S), errc::not_convex, "minmax set failed its convexity invariant");
        require(res.updates < bound, errc::iteration_bound_exceeded,
                "more than g * |V_Gamma| = " + std::to_string(bound) + " updates");
        ++res.updates;

        auto valences = boundary_valence(S);
        TraceEntry entry{prof.max_error, S, S.branch_point_count(), 0,
                         std::nullopt, std::nullopt, std::nullopt};

        // Case 1: some chip of E sits on the boundary of S; move the smallest
        // such chip along the smallest leaving direction to the far branch
        // point (outside S by convexity).
        std::optional<PointRef> e_minus;
        for (auto& [p, val] : valences)
            if (extra.coeff(p) > 0) { e_minus = p; break; }

        if (e_minus) {
            const Model& m = S.model();
            int v = m.vertex_of(*e_minus);
            std::pair<int, int> dir{-1, -1};
            for (auto& [e, slot] : m.incident_ends(v))
                if (!S.in_J(e)) { dir = {e, slot}; break; }
            require(dir.first >= 0, errc::internal_invariant,
                    "boundary point without a leaving direction");
            PointRef e_plus = walk_to_branch(S, dir.first, dir.second);
            extra.add(*e_minus, -1);
            extra.add(e_plus, 1);
            require(extra.is_effective(), errc::internal_invariant,
                    "E lost effectiveness in case 1");
            entry.case_tag = 1;
            entry.moved_from = *e_minus;
            entry.moved_to = e_plus;
        } else {
            // Case 2: fire S on D to the nearest branch point outside S.
            std::vector<PointRef> targets;
            for (int bv : S.model().branch_vertices())
                if (!S.in_I(bv)) targets.push_back(S.model().vertex_point(bv));
            require(!targets.empty(), errc::internal_invariant,
                    "proper convex minmax set contains every branch point");
            Rat eps = distance_from_set(S, targets);
            cur = fire_set(cur, S, eps);
            require(cur.is_effective(), errc::internal_invariant,
                    "D lost effectiveness in case 2");
            res.certificate.steps.push_back({S, eps});
            entry.case_tag = 2;
            entry.eps = eps;
        }
        if (opts.with_trace) res.trace.push_back(std::move(entry));
    }
}

Divisor break_representative(const GraphPtr& g, const Divisor& D, MinimizeStrategy strategy) {
    require(D.is_effective(), errc::not_effective,
            "break representative needs an effective divisor");
    require(D.degree() == g->genus(), errc::degree_out_of_range,
            "break representative is defined in degree g");
    ReductionOptions opts;
    opts.strategy = strategy;
    return semibreak_reduce(g, D, opts).break_divisor;
}

EquivalenceResult are_equivalent(const GraphPtr& g, const Divisor& D1, const Divisor& D2,
                                 MinimizeStrategy strategy) {
    require(D1.is_effective() && D2.is_effective(), errc::not_effective,
            "equivalence test needs effective divisors");
    require(D1.degree() == D2.degree(), errc::degree_mismatch,
            "degrees differ: " + std::to_string(D1.degree()) + " vs " +
                std::to_string(D2.degree()));
    const long long d = D1.degree();
    require(0 <= d && d <= g->genus(), errc::degree_out_of_range,
            "degree outside [0, g]");

    Divisor fill;
    fill.add(PointRef::vertex(g->branch_ids().front()), g->genus() - d);

    ReductionOptions opts;
    opts.strategy = strategy;
    ReductionResult r1 = semibreak_reduce(g, D1 + fill, opts);
    ReductionResult r2 = semibreak_reduce(g, D2 + fill, opts);

    EquivalenceResult out;
    out.equivalent = r1.break_divisor == r2.break_divisor;
    out.common_break = std::move(r1.break_divisor);
    out.lhs_cert = std::move(r1.certificate);
    out.rhs_cert = std::move(r2.certificate);
    return out;
}

} // namespace mgdiv
