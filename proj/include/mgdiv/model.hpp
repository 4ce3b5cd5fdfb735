#ifndef MGDIV_MODEL_HPP
#define MGDIV_MODEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgdiv/graph.hpp"

namespace mgdiv {

class Model;
using ModelPtr = std::shared_ptr<const Model>;

/// A model of the metric graph: the input vertices plus a finite set of
/// interior points, with every input edge subdivided at its interior points.
/// Sub-edges are numbered "baseID#k" along increasing offset; all indexing is
/// deterministic given (graph, point set). Immutable after construction.
class Model {
public:
    struct MEdge {
        int base_edge = 0; // index into the graph's edge list
        int seg = 0;       // position within the base edge, 0-based
        int v_lo = 0, v_hi = 0; // model vertex indices at offsets a and b
        Rat a, b;          // offset interval within the base edge, a < b
        Rat length;        // b - a
    };

    const MetricGraph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }

    int n_vertices() const { return static_cast<int>(verts_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    const PointRef& vertex_point(int v) const { return verts_[v]; }
    const MEdge& edge(int e) const { return edges_[e]; }
    const std::vector<MEdge>& edges() const { return edges_; }

    /// Interior cut offsets per base edge, sorted ascending.
    const std::vector<Rat>& cuts(int base_edge) const { return cuts_[base_edge]; }

    std::optional<int> find_vertex(const PointRef& p) const;
    int vertex_of(const PointRef& p) const; // throws point_off_graph if absent

    /// Model vertex indices of the graph's branch points.
    const std::vector<int>& branch_vertices() const { return branch_verts_; }
    bool vertex_is_branch(int v) const;

    /// (edge, slot) pairs incident to a vertex, sorted by (base edge id, seg,
    /// slot); a whole-loop sub-edge contributes both slots.
    const std::vector<std::pair<int, int>>& incident_ends(int v) const { return incidence_[v]; }

    std::string sub_edge_id(int e) const;
    int sub_edge_by_id(const std::string& id) const; // "baseID#k"

    /// Sub-edge of `base_edge` whose interval contains `off`; if `off` equals
    /// a subdivision point, the sub-edge starting there is returned.
    int sub_edge_at(int base_edge, const Rat& off) const;

    /// The PointRef at distance `t` from the given end of a sub-edge
    /// (slot 0 = the a-end, slot 1 = the b-end); requires 0 <= t <= length.
    PointRef point_at(int e, int slot, const Rat& t) const;

    /// All interior points of this model, sorted.
    std::vector<PointRef> interior_points() const;

    /// This model refined at additional points (vertex-form points and points
    /// already present are ignored). Refining at nothing returns *this.
    ModelPtr refine_with(const std::vector<PointRef>& pts) const;

    friend ModelPtr make_model(GraphPtr g, const std::vector<PointRef>& pts);
    friend bool same_subdivision(const Model& a, const Model& b);

private:
    GraphPtr graph_;
    std::vector<std::vector<Rat>> cuts_; // per base edge, sorted interior offsets
    std::vector<PointRef> verts_;
    std::map<PointRef, int> vert_index_;
    std::vector<MEdge> edges_;
    std::vector<std::vector<int>> edge_of_base_; // base edge -> its sub-edges in seg order
    std::vector<std::vector<std::pair<int, int>>> incidence_;
    std::vector<int> branch_verts_;

    void build();
};

/// The model of `g` whose vertex set is the input vertices plus the given
/// points.
ModelPtr make_model(GraphPtr g, const std::vector<PointRef>& pts);

/// Validating refinement: every point must lie on the graph.
ModelPtr refine_model(GraphPtr g, const std::vector<PointRef>& pts);

bool same_subdivision(const Model& a, const Model& b);

} // namespace mgdiv

#endif
