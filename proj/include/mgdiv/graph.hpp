#ifndef MGDIV_GRAPH_HPP
#define MGDIV_GRAPH_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mgdiv/rational.hpp"

namespace mgdiv {

class MetricGraph;
using GraphPtr = std::shared_ptr<const MetricGraph>;

/// A point of the metric graph: either a vertex of the input graph or an
/// interior point of an input edge, addressed by (edge id, offset from end0)
/// with 0 < offset < length. Offsets 0 and length are always normalized to the
/// vertex form, so the representation is canonical and ordering is total.
struct PointRef {
    bool at_vertex = true;
    std::string id;  // vertex id, or edge id for interior points
    Rat offset;      // meaningful only for interior points

    static PointRef vertex(std::string vid) { return PointRef{true, std::move(vid), Rat()}; }
    static PointRef interior(std::string eid, Rat off) {
        return PointRef{false, std::move(eid), std::move(off)};
    }

    friend bool operator==(const PointRef& a, const PointRef& b) {
        return a.at_vertex == b.at_vertex && a.id == b.id &&
               (a.at_vertex || a.offset == b.offset);
    }
    friend bool operator!=(const PointRef& a, const PointRef& b) { return !(a == b); }
    // Lexicographic on (kind, id, offset); vertices sort before interior points.
    friend bool operator<(const PointRef& a, const PointRef& b) {
        if (a.at_vertex != b.at_vertex) return a.at_vertex;
        if (a.id != b.id) return a.id < b.id;
        if (a.at_vertex) return false;
        return a.offset < b.offset;
    }

    std::string str() const;
};

struct GraphDescription {
    std::vector<std::string> vertices;
    struct EdgeDesc {
        std::string id;
        std::string end0, end1;
        Rat length;
    };
    std::vector<EdgeDesc> edges;
};

/// Compact connected metric graph given as a rational-length multigraph.
/// Loops and parallel edges are allowed, and so are valency-2 vertices: the
/// input is treated as a chosen model of the underlying space, while branch
/// points (valency != 2) are recomputed and used wherever the theory needs
/// the minimal vertex set.
class MetricGraph {
public:
    struct Edge {
        std::string id;
        int end0 = 0, end1 = 0;
        Rat length;
    };

    // One maximal edge of the branch-point model: a path of input edges
    // through valency-2 vertices, running between two branch points (which
    // coincide for loop chains).
    struct ChainStep {
        int edge = 0;
        bool forward = true; // traversed end0 -> end1
    };
    struct Chain {
        std::vector<ChainStep> steps;
        int w0 = 0, w1 = 0; // branch vertex indices at the two ends
        Rat length;
    };

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edge_recs() const { return edges_; }
    long long genus() const { return genus_; }

    int n_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const { return vindex_.count(id) != 0; }
    bool has_edge(const std::string& id) const { return eindex_.count(id) != 0; }

    int valency(int v) const { return valency_[v]; }
    bool is_branch(int v) const { return valency_[v] != 2; }
    bool is_branch_point(const PointRef& p) const {
        return p.at_vertex && is_branch(vertex_index(p.id));
    }
    /// Branch vertex ids, sorted by id. Nonempty for every accepted graph.
    const std::vector<std::string>& branch_ids() const { return branch_ids_; }

    const std::vector<Chain>& chains() const { return chains_; }
    int chain_of_edge(int e) const { return edge_chain_[e]; }
    /// Start position of edge e along its chain, in the chain's forward
    /// parametrization.
    const Rat& chain_offset(int e) const { return edge_chain_start_[e]; }
    /// Whether edge e is traversed end0 -> end1 by its chain.
    bool chain_forward(int e) const { return edge_chain_forward_[e] != 0; }
    /// Position of a point along the chain containing it. For branch points
    /// this is only meaningful per chain end, so `p` must be a non-branch
    /// point (interior point or valency-2 vertex).
    Rat chain_position(const PointRef& p) const;
    int chain_of_point(const PointRef& p) const;

    /// Validates that the point lies on this graph (ids resolve, offset in
    /// range and normalized).
    void check_point(const PointRef& p) const;

    friend GraphPtr build_graph(const GraphDescription& d);

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vindex_, eindex_;
    std::vector<int> valency_;
    std::vector<std::string> branch_ids_;
    long long genus_ = 0;

    std::vector<Chain> chains_;
    std::vector<int> edge_chain_;
    std::vector<Rat> edge_chain_start_;
    std::vector<char> edge_chain_forward_;

    void build_chains();
};

/// Validates and constructs a metric graph. Rejects disconnected inputs,
/// the one-point graph and any input whose underlying space is a circle.
GraphPtr build_graph(const GraphDescription& d);

/// Maps (edge, offset) with 0 <= offset <= length to a canonical PointRef:
/// offset 0 becomes end0, offset = length becomes end1, interior offsets are
/// kept as edge points.
PointRef normalize_point(const MetricGraph& g, const std::string& edge_id, const Rat& offset);

} // namespace mgdiv

#endif
