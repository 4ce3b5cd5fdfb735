#ifndef MGDIV_ERROR_MINMAX_HPP
#define MGDIV_ERROR_MINMAX_HPP

#include <functional>

#include "mgdiv/divisor.hpp"

namespace mgdiv {

/// Error(D, S) = deg(D|_S) - psi(S); refinement-invariant.
long long error_of_set(const Divisor& D, const AdmissibleSet& S);

/// A set function on subsets of {0, ..., n-1}, encoded as bit masks. Assumed
/// submodular by the solvers; spot-checked in tests.
struct SubmodularObjective {
    int n = 0;
    std::function<Rat(unsigned long long mask)> eval;
};

enum class MinimizeStrategy { exhaustive, min_norm };

/// The unique inclusion-smallest minimizer of the perturbed objective
/// f'(X) = f(X) + |X| / (2n). Both strategies agree exactly: exhaustive
/// enumerates masks, min_norm runs an exact-rational min-norm-point solver
/// over the base polytope.
unsigned long long smallest_submodular_minimizer(const SubmodularObjective& obj,
                                                 MinimizeStrategy strategy,
                                                 int exhaustive_bound = 20);

/// Exact Fujishige-Wolfe minimum-norm point. F must satisfy F(0) = 0; returns
/// the unique inclusion-minimal minimizer of F as {i : x*_i < 0}.
unsigned long long min_norm_smallest_minimizer(
    int n, const std::function<Rat(unsigned long long)>& F);

struct ErrorProfile {
    long long max_error = 0;     // ME(D), over proper closed admissible sets
    AdmissibleSet minmax;        // empty set when ME = 0
    bool is_break_signal = false;
};

/// ME(D) and the unique smallest max-error set, by minimizing
/// f'(X) = -Error(D, conv_G(X)) + |X| / (2|V(G)|) over X subseteq V(G) for
/// the model G refined at supp(D). The unrestricted smallest minimizer being
/// all of V(G) signals a break divisor (possible only in degree g).
ErrorProfile max_error_profile(const GraphPtr& g, const Divisor& D,
                               MinimizeStrategy strategy = MinimizeStrategy::exhaustive);

} // namespace mgdiv

#endif
