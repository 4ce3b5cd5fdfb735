#include "mgdiv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mgdiv/errors.hpp"

namespace mgdiv {

std::string PointRef::str() const {
    if (at_vertex) return id;
    return id + "@" + offset.str();
}

int MetricGraph::vertex_index(const std::string& id) const {
    auto it = vindex_.find(id);
    require(it != vindex_.end(), errc::point_off_graph, "unknown vertex \"" + id + "\"");
    return it->second;
}

int MetricGraph::edge_index(const std::string& id) const {
    auto it = eindex_.find(id);
    require(it != eindex_.end(), errc::point_off_graph, "unknown edge \"" + id + "\"");
    return it->second;
}

void MetricGraph::check_point(const PointRef& p) const {
    if (p.at_vertex) {
        vertex_index(p.id);
        return;
    }
    int e = edge_index(p.id);
    require(p.offset.is_positive() && p.offset < edges_[e].length, errc::offset_out_of_range,
            "interior point " + p.str() + " not strictly inside the edge");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

void MetricGraph::build_chains() {
    const int m = n_edges();
    edge_chain_.assign(m, -1);
    edge_chain_start_.assign(m, Rat());
    edge_chain_forward_.assign(m, 1);
    chains_.clear();

    // ends[v] lists (edge, slot); loops contribute both slots at their vertex.
    std::vector<std::vector<std::pair<int, int>>> ends(n_vertices());
    for (int e = 0; e < m; ++e) {
        ends[edges_[e].end0].push_back({e, 0});
        ends[edges_[e].end1].push_back({e, 1});
    }

    auto other_end_vertex = [&](int e, int slot) {
        return slot == 0 ? edges_[e].end1 : edges_[e].end0;
    };

    for (int seed = 0; seed < m; ++seed) {
        if (edge_chain_[seed] != -1) continue;
        Chain chain;
        std::vector<ChainStep> back; // walked from end0 of the seed, reversed later

        // Walk from vertex `v`, having arrived there via end (e, slot); keep
        // going while v is a valency-2 non-branch junction.
        auto walk = [&](int e, int slot, std::vector<ChainStep>& out, bool forward_means_into) {
            int guard = 0;
            int v = slot == 0 ? edges_[e].end0 : edges_[e].end1;
            std::pair<int, int> came = {e, slot};
            while (!is_branch(v)) {
                require(++guard <= m + 1, errc::internal_invariant, "chain walk did not terminate");
                std::pair<int, int> next{-1, -1};
                for (auto& en : ends[v])
                    if (en != came) { next = en; break; }
                require(next.first >= 0, errc::internal_invariant, "dangling valency-2 vertex");
                // Entering `next.first` at slot next.second; forward traversal
                // means we enter at end0.
                out.push_back({next.first, forward_means_into ? next.second == 0
                                                              : next.second != 0});
                came = {next.first, 1 - next.second};
                v = other_end_vertex(next.first, next.second);
            }
            return v;
        };

        chain.steps.push_back({seed, true});
        std::vector<ChainStep> fwd;
        int w1 = walk(seed, 1, fwd, true);
        int w0 = walk(seed, 0, back, false);
        std::reverse(back.begin(), back.end());
        chain.steps.insert(chain.steps.begin(), back.begin(), back.end());
        chain.steps.insert(chain.steps.end(), fwd.begin(), fwd.end());
        chain.w0 = w0;
        chain.w1 = w1;

        Rat pos;
        int idx = static_cast<int>(chains_.size());
        for (auto& st : chain.steps) {
            require(edge_chain_[st.edge] == -1, errc::internal_invariant, "edge on two chains");
            edge_chain_[st.edge] = idx;
            edge_chain_start_[st.edge] = pos;
            edge_chain_forward_[st.edge] = st.forward ? 1 : 0;
            pos += edges_[st.edge].length;
        }
        chain.length = pos;
        chains_.push_back(std::move(chain));
    }
}

Rat MetricGraph::chain_position(const PointRef& p) const {
    if (p.at_vertex) {
        int v = vertex_index(p.id);
        require(!is_branch(v), errc::internal_invariant,
                "chain position of a branch point is ambiguous");
        // Locate v as the far end of some chain step.
        for (auto& ch : chains_) {
            Rat pos;
            for (auto& st : ch.steps) {
                const Edge& e = edges_[st.edge];
                pos += e.length;
                int far = st.forward ? e.end1 : e.end0;
                if (far == v && pos < ch.length) return pos;
            }
        }
        fail(errc::internal_invariant, "vertex not found on any chain");
    }
    int e = edge_index(p.id);
    return chain_forward(e) ? edge_chain_start_[e] + p.offset
                            : edge_chain_start_[e] + edges_[e].length - p.offset;
}

int MetricGraph::chain_of_point(const PointRef& p) const {
    if (!p.at_vertex) return edge_chain_[edge_index(p.id)];
    int v = vertex_index(p.id);
    require(!is_branch(v), errc::internal_invariant, "branch points lie on several chains");
    for (std::size_t c = 0; c < chains_.size(); ++c)
        for (auto& st : chains_[c].steps) {
            const Edge& e = edges_[st.edge];
            if (e.end0 == v || e.end1 == v) return static_cast<int>(c);
        }
    fail(errc::internal_invariant, "vertex not found on any chain");
}

GraphPtr build_graph(const GraphDescription& d) {
    auto g = std::make_shared<MetricGraph>();

    require(!d.vertices.empty(), errc::degenerate_graph, "graph has no vertices");
    for (auto& vid : d.vertices) {
        require(!vid.empty(), errc::malformed_input, "empty vertex id");
        auto [it, fresh] = g->vindex_.emplace(vid, g->n_vertices());
        require(fresh, errc::duplicate_id, "duplicate vertex id \"" + vid + "\"");
        g->vertex_ids_.push_back(vid);
    }
    for (auto& ed : d.edges) {
        require(!ed.id.empty(), errc::malformed_input, "empty edge id");
        require(ed.length.is_positive(), errc::nonpositive_length,
                "edge \"" + ed.id + "\" has nonpositive length");
        MetricGraph::Edge rec;
        rec.id = ed.id;
        rec.end0 = g->vertex_index(ed.end0);
        rec.end1 = g->vertex_index(ed.end1);
        rec.length = ed.length;
        auto [it, fresh] = g->eindex_.emplace(ed.id, g->n_edges());
        require(fresh, errc::duplicate_id, "duplicate edge id \"" + ed.id + "\"");
        g->edges_.push_back(std::move(rec));
    }

    // Connectivity.
    UnionFind uf(g->n_vertices());
    for (auto& e : g->edges_) uf.unite(e.end0, e.end1);
    for (int v = 0; v < g->n_vertices(); ++v)
        require(uf.find(v) == uf.find(0), errc::disconnected_graph,
                "vertex \"" + g->vertex_ids_[v] + "\" is not connected to \"" +
                    g->vertex_ids_[0] + "\"");

    g->valency_.assign(g->n_vertices(), 0);
    for (auto& e : g->edges_) {
        g->valency_[e.end0] += 1;
        g->valency_[e.end1] += 1;
    }

    // Exclude the single point and the circle: both have no branch points.
    if (g->n_edges() == 0)
        fail(errc::degenerate_graph, "the one-point graph is not a metric graph here");
    bool any_branch = false;
    for (int v = 0; v < g->n_vertices(); ++v) any_branch |= g->is_branch(v);
    require(any_branch, errc::degenerate_graph,
            "every point has valency 2: the space is a circle");

    g->genus_ = g->n_edges() - g->n_vertices() + 1;
    require(g->genus_ >= 0, errc::internal_invariant, "negative genus");

    for (int v = 0; v < g->n_vertices(); ++v)
        if (g->is_branch(v)) g->branch_ids_.push_back(g->vertex_ids_[v]);
    std::sort(g->branch_ids_.begin(), g->branch_ids_.end());

    g->build_chains();
    return g;
}

PointRef normalize_point(const MetricGraph& g, const std::string& edge_id, const Rat& offset) {
    int e = g.edge_index(edge_id);
    const auto& rec = g.edge_recs()[e];
    require(!offset.is_negative() && offset <= rec.length, errc::offset_out_of_range,
            "offset " + offset.str() + " outside [0, " + rec.length.str() + "] on edge \"" +
                edge_id + "\"");
    if (offset.is_zero()) return PointRef::vertex(g.vertex_ids()[rec.end0]);
    if (offset == rec.length) return PointRef::vertex(g.vertex_ids()[rec.end1]);
    return PointRef::interior(edge_id, offset);
}

} // namespace mgdiv
