#ifndef MGDIV_ADMISSIBLE_HPP
#define MGDIV_ADMISSIBLE_HPP

#include <map>
#include <optional>
#include <vector>

#include "mgdiv/model.hpp"

namespace mgdiv {

/// A closed admissible subset in model form: vertices I plus closed sub-edges
/// J, with both endpoints of every J-edge in I. The empty set is allowed.
class AdmissibleSet {
public:
    AdmissibleSet(ModelPtr model, std::vector<char> in_I, std::vector<char> in_J);

    static AdmissibleSet empty(ModelPtr model);
    static AdmissibleSet whole(ModelPtr model);

    const Model& model() const { return *model_; }
    const ModelPtr& model_ptr() const { return model_; }

    bool in_I(int v) const { return I_[v] != 0; }
    bool in_J(int e) const { return J_[e] != 0; }
    const std::vector<char>& I_flags() const { return I_; }
    const std::vector<char>& J_flags() const { return J_; }

    bool is_empty() const;
    bool is_whole() const; // equals the full graph
    int i_count() const;

    /// Exact membership of an arbitrary point of the graph in the closed set.
    bool contains(const PointRef& p) const;

    /// Number of branch points of the graph contained in the set.
    int branch_point_count() const;

    /// The same point set expressed in a finer model (whose cut set must
    /// contain this model's cuts).
    AdmissibleSet re_express(ModelPtr finer) const;

    /// Model vertices of I, sorted by PointRef order.
    std::vector<PointRef> i_points() const;

    friend bool operator==(const AdmissibleSet& a, const AdmissibleSet& b);

private:
    ModelPtr model_;
    std::vector<char> I_, J_;
};

struct TopologyProfile {
    long long chi_S = 0;
    long long chi_complement = 0;
    long long p_a = 0;
    long long psi = 0;
    long long components = 0;
    long long betti1 = 0;
};

/// Euler characteristic / arithmetic genus / genus contribution of a closed
/// admissible set, by the closed-form counts; refinement-invariant.
TopologyProfile topology_profile(const AdmissibleSet& S);

/// Convex hull per the segment-filling rule: within each branch-to-branch
/// edge, the span between the extreme points of S is added, and a loop whose
/// base vertex lies in S is wholly added. Result lives in the same model.
AdmissibleSet convex_hull(const AdmissibleSet& S);

bool is_convex(const AdmissibleSet& S);

/// Single-pass model hull conv_G(X): X plus all model edges with both
/// endpoint slots in X (loops at an X-vertex included).
AdmissibleSet conv_model(ModelPtr model, const std::vector<char>& X);
AdmissibleSet conv_model_mask(ModelPtr model, unsigned long long mask);

/// Number of open complement segments with both endpoints in S. Computed by
/// direct gap counting and checked against psi(S) - psi(conv(S)).
long long diff_count(const AdmissibleSet& S);

/// val_S over the boundary: for each boundary point, the number of incident
/// edge-ends leaving S (a loop not in J counts twice). Interior points are
/// absent from the map.
std::map<PointRef, int> boundary_valence(const AdmissibleSet& S);

/// Cut size c(S) = total number of leaving edge-ends; checked against the
/// identity c(S) = psi(S) - p_a(S) + 1.
long long cut_size(const AdmissibleSet& S);

/// All points at distance <= eps from S, in a refined model.
AdmissibleSet fatten(const AdmissibleSet& S, const Rat& eps);

/// Exact shortest distance from the closed set S to the nearest target
/// (multi-source Dijkstra over rationals). Targets must be model vertices.
Rat distance_from_set(const AdmissibleSet& S, const std::vector<PointRef>& targets);

/// Distances from S to every model vertex (no distance = unreachable is
/// impossible on a connected graph).
std::vector<Rat> distances_from_set(const AdmissibleSet& S);

/// Componentwise union / intersection; both sets must share one model.
AdmissibleSet set_union(const AdmissibleSet& A, const AdmissibleSet& B);
AdmissibleSet set_intersection(const AdmissibleSet& A, const AdmissibleSet& B);

/// Re-expresses both sets in their common refinement.
std::pair<AdmissibleSet, AdmissibleSet> common_model(const AdmissibleSet& A,
                                                     const AdmissibleSet& B);

bool subset_of(const AdmissibleSet& A, const AdmissibleSet& B);

/// Point-set equality, allowing different models of the same graph.
bool same_point_set(const AdmissibleSet& A, const AdmissibleSet& B);

/// spset(S): per closed branch-to-branch edge, the boundary points of the
/// covered blocks of S on that edge; satisfies conv(spset(S)) = S for closed
/// convex S.
std::vector<PointRef> spanning_point_set(const AdmissibleSet& S);

} // namespace mgdiv

#endif
