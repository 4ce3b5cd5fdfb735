#include "mgdiv/error_minmax.hpp"

#include <bit>

#include "mgdiv/errors.hpp"

namespace mgdiv {

long long error_of_set(const Divisor& D, const AdmissibleSet& S) {
    return degree_on(D, S) - topology_profile(S).psi;
}

namespace {

unsigned long long exhaustive_smallest(const SubmodularObjective& obj, int bound) {
    require(obj.n >= 1, errc::malformed_input, "empty ground set");
    require(obj.n <= bound, errc::ground_set_too_large,
            "ground set of size " + std::to_string(obj.n) + " exceeds the exhaustive bound " +
                std::to_string(bound));
    const Rat two_n(2LL * obj.n, 1);
    unsigned long long best_mask = 0;
    Rat best_val;
    bool have = false;
    const unsigned long long full = (obj.n == 64) ? ~0ULL : (1ULL << obj.n) - 1;
    for (unsigned long long mask = 0;; ++mask) {
        Rat val = obj.eval(mask) + Rat(std::popcount(mask), 1) / two_n;
        // Ties broken by cardinality then mask: for a submodular perturbed
        // objective the minimizer lattice makes this the inclusion-minimal one.
        if (!have || val < best_val ||
            (val == best_val && (std::popcount(mask) < std::popcount(best_mask) ||
                                 (std::popcount(mask) == std::popcount(best_mask) &&
                                  mask < best_mask)))) {
            have = true;
            best_val = val;
            best_mask = mask;
        }
        if (mask == full) break;
    }
    return best_mask;
}

} // namespace

unsigned long long smallest_submodular_minimizer(const SubmodularObjective& obj,
                                                 MinimizeStrategy strategy,
                                                 int exhaustive_bound) {
    require(obj.n >= 1 && obj.n <= 63, errc::ground_set_too_large,
            "ground set must have between 1 and 63 elements");
    switch (strategy) {
        case MinimizeStrategy::exhaustive:
            return exhaustive_smallest(obj, exhaustive_bound);
        case MinimizeStrategy::min_norm: {
            const Rat two_n(2LL * obj.n, 1);
            Rat f0 = obj.eval(0);
            auto F = [&](unsigned long long mask) {
                return obj.eval(mask) + Rat(std::popcount(mask), 1) / two_n - f0;
            };
            return min_norm_smallest_minimizer(obj.n, F);
        }
    }
    fail(errc::solver_not_available, "unknown minimization strategy");
}

ErrorProfile max_error_profile(const GraphPtr& g, const Divisor& D, MinimizeStrategy strategy) {
    require(D.is_effective(), errc::not_effective,
            "max error is defined for effective divisors");
    long long d = D.degree();
    require(0 <= d && d <= g->genus(), errc::degree_out_of_range,
            "degree " + std::to_string(d) + " outside [0, g = " +
                std::to_string(g->genus()) + "]");

    ModelPtr model = make_model(g, D.support());
    const int n = model->n_vertices();

    SubmodularObjective obj;
    obj.n = n;
    obj.eval = [&](unsigned long long mask) {
        return Rat(-error_of_set(D, conv_model_mask(model, mask)), 1);
    };
    unsigned long long x0 = smallest_submodular_minimizer(obj, strategy);

    const unsigned long long full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
    ErrorProfile prof{0, AdmissibleSet::empty(model), false};
    if (x0 == full) {
        // conv_G(V(G)) = Gamma strictly dominates every proper set, which
        // happens exactly for break divisors (and forces ME = 0, deg = g).
        require(d == g->genus(), errc::internal_invariant,
                "break signal on a divisor of degree below the genus");
        prof.is_break_signal = true;
        return prof;
    }
    AdmissibleSet S = conv_model_mask(model, x0);
    long long me = error_of_set(D, S);
    require(me >= 0, errc::internal_invariant, "negative max error");
    require((me == 0) == S.is_empty(), errc::internal_invariant,
            "ME = 0 must coincide with an empty minmax set");
    prof.max_error = me;
    prof.minmax = std::move(S);
    return prof;
}

} // namespace mgdiv
