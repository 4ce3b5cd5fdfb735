#ifndef MGDIV_ORACLE_HPP
#define MGDIV_ORACLE_HPP

#include "mgdiv/error_minmax.hpp"

namespace mgdiv {
namespace oracle {

/// The complement of a spanning tree: g model edges whose removal leaves a
/// connected (hence contractible) space.
struct TreeComplement {
    std::vector<int> edges; // model edge indices, ascending
};

/// All spanning-tree complements of the model, in lexicographic edge order.
std::vector<TreeComplement> spanning_tree_complements(const ModelPtr& model,
                                                      int edge_bound = 25);

/// Brute-force semibreak test: true iff some spanning-tree complement of the
/// model refined at supp(D) admits a matching of D's chips (with multiplicity)
/// to distinct complement edges, each chip lying in the closure of its edge.
bool is_semibreak_bruteforce(const GraphPtr& g, const Divisor& D, int edge_bound = 25);

/// Exhaustive max-error computation over the conv_G(X) forms, with Error
/// evaluated through an independent component-and-cycle-rank Euler
/// characteristic. The smallest max-error set is the intersection of all
/// maximizers.
ErrorProfile max_error_bruteforce(const GraphPtr& g, const Divisor& D);

/// Error(D, S) via the independent betti-number route (used by the oracle and
/// by the Euler-characteristic cross-check tests).
long long error_of_set_betti(const Divisor& D, const AdmissibleSet& S);

/// chi(S) and chi of the open complement via component counts and cycle
/// ranks, independent of the closed-form counts in topology_profile.
long long chi_betti(const AdmissibleSet& S);
long long chi_complement_betti(const AdmissibleSet& S);

/// Second enumeration domain: max error over all proper closed (I, J) forms
/// of the model refined at supp(D), together with the intersection of all
/// maximizers. `work_bound` caps the number of (I, J) pairs visited.
struct AllFormsResult {
    long long max_error = 0;
    AdmissibleSet smallest;
};
AllFormsResult max_error_all_forms(const GraphPtr& g, const Divisor& D,
                                   long long work_bound = 1 << 22);

} // namespace oracle
} // namespace mgdiv

#endif
