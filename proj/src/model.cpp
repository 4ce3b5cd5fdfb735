#include "mgdiv/model.hpp"

#include <algorithm>

#include "mgdiv/errors.hpp"

namespace mgdiv {

void Model::build() {
    const MetricGraph& g = *graph_;
    verts_.clear();
    vert_index_.clear();
    edges_.clear();

    for (auto& vid : g.vertex_ids()) {
        PointRef p = PointRef::vertex(vid);
        vert_index_.emplace(p, static_cast<int>(verts_.size()));
        verts_.push_back(std::move(p));
    }
    for (int be = 0; be < g.n_edges(); ++be) {
        for (auto& off : cuts_[be]) {
            PointRef p = PointRef::interior(g.edge_recs()[be].id, off);
            vert_index_.emplace(p, static_cast<int>(verts_.size()));
            verts_.push_back(std::move(p));
        }
    }

    edge_of_base_.assign(g.n_edges(), {});
    for (int be = 0; be < g.n_edges(); ++be) {
        const auto& rec = g.edge_recs()[be];
        std::vector<int> stops; // model vertex at each subdivision boundary
        stops.push_back(vert_index_.at(PointRef::vertex(g.vertex_ids()[rec.end0])));
        std::vector<Rat> offs;
        offs.push_back(Rat());
        for (auto& off : cuts_[be]) {
            stops.push_back(vert_index_.at(PointRef::interior(rec.id, off)));
            offs.push_back(off);
        }
        stops.push_back(vert_index_.at(PointRef::vertex(g.vertex_ids()[rec.end1])));
        offs.push_back(rec.length);

        for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
            MEdge me;
            me.base_edge = be;
            me.seg = static_cast<int>(k);
            me.v_lo = stops[k];
            me.v_hi = stops[k + 1];
            me.a = offs[k];
            me.b = offs[k + 1];
            me.length = me.b - me.a;
            edge_of_base_[be].push_back(static_cast<int>(edges_.size()));
            edges_.push_back(std::move(me));
        }
    }

    incidence_.assign(n_vertices(), {});
    // Edge index order already sorts by (base edge index, seg); incidence is
    // re-sorted by base edge id for id-level determinism.
    std::vector<int> edge_order(n_edges());
    for (int e = 0; e < n_edges(); ++e) edge_order[e] = e;
    std::sort(edge_order.begin(), edge_order.end(), [&](int x, int y) {
        const auto& ex = edges_[x];
        const auto& ey = edges_[y];
        const std::string& idx = g.edge_recs()[ex.base_edge].id;
        const std::string& idy = g.edge_recs()[ey.base_edge].id;
        if (idx != idy) return idx < idy;
        return ex.seg < ey.seg;
    });
    for (int e : edge_order) {
        incidence_[edges_[e].v_lo].push_back({e, 0});
        incidence_[edges_[e].v_hi].push_back({e, 1});
    }
    for (auto& inc : incidence_)
        std::stable_sort(inc.begin(), inc.end(), [&](auto& x, auto& y) {
            const auto& ex = edges_[x.first];
            const auto& ey = edges_[y.first];
            const std::string& idx = g.edge_recs()[ex.base_edge].id;
            const std::string& idy = g.edge_recs()[ey.base_edge].id;
            if (idx != idy) return idx < idy;
            if (ex.seg != ey.seg) return ex.seg < ey.seg;
            return x.second < y.second;
        });

    branch_verts_.clear();
    for (auto& bid : g.branch_ids())
        branch_verts_.push_back(vert_index_.at(PointRef::vertex(bid)));
}

std::optional<int> Model::find_vertex(const PointRef& p) const {
    auto it = vert_index_.find(p);
    if (it == vert_index_.end()) return std::nullopt;
    return it->second;
}

int Model::vertex_of(const PointRef& p) const {
    auto v = find_vertex(p);
    require(v.has_value(), errc::point_off_graph,
            "point " + p.str() + " is not a vertex of this model");
    return *v;
}

bool Model::vertex_is_branch(int v) const {
    const PointRef& p = verts_[v];
    return p.at_vertex && graph_->is_branch(graph_->vertex_index(p.id));
}

std::string Model::sub_edge_id(int e) const {
    const MEdge& me = edges_[e];
    return graph_->edge_recs()[me.base_edge].id + "#" + std::to_string(me.seg);
}

int Model::sub_edge_by_id(const std::string& id) const {
    auto hash = id.rfind('#');
    require(hash != std::string::npos && hash + 1 < id.size(), errc::malformed_input,
            "bad sub-edge id \"" + id + "\"");
    const std::string base = id.substr(0, hash);
    const std::string segs = id.substr(hash + 1);
    for (char c : segs)
        require(c >= '0' && c <= '9', errc::malformed_input, "bad sub-edge id \"" + id + "\"");
    int be = graph_->edge_index(base);
    std::size_t seg = std::stoul(segs);
    require(seg < edge_of_base_[be].size(), errc::malformed_input,
            "sub-edge \"" + id + "\" does not exist in this model");
    return edge_of_base_[be][seg];
}

int Model::sub_edge_at(int base_edge, const Rat& off) const {
    const auto& cs = cuts_[base_edge];
    std::size_t k = std::upper_bound(cs.begin(), cs.end(), off) - cs.begin();
    return edge_of_base_[base_edge][k];
}

PointRef Model::point_at(int e, int slot, const Rat& t) const {
    const MEdge& me = edges_[e];
    require(!t.is_negative() && t <= me.length, errc::internal_invariant,
            "point_at outside the sub-edge");
    Rat off = slot == 0 ? me.a + t : me.b - t;
    return normalize_point(*graph_, graph_->edge_recs()[me.base_edge].id, off);
}

std::vector<PointRef> Model::interior_points() const {
    std::vector<PointRef> out;
    for (int be = 0; be < graph_->n_edges(); ++be)
        for (auto& off : cuts_[be])
            out.push_back(PointRef::interior(graph_->edge_recs()[be].id, off));
    std::sort(out.begin(), out.end());
    return out;
}

ModelPtr Model::refine_with(const std::vector<PointRef>& pts) const {
    std::vector<PointRef> all = interior_points();
    all.insert(all.end(), pts.begin(), pts.end());
    return make_model(graph_, all);
}

ModelPtr make_model(GraphPtr g, const std::vector<PointRef>& pts) {
    auto m = std::make_shared<Model>();
    m->graph_ = std::move(g);
    const MetricGraph& graph = *m->graph_;
    m->cuts_.assign(graph.n_edges(), {});
    for (auto& p : pts) {
        graph.check_point(p);
        if (p.at_vertex) continue; // vertices are always model points
        m->cuts_[graph.edge_index(p.id)].push_back(p.offset);
    }
    for (auto& cs : m->cuts_) {
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    }
    m->build();
    return m;
}

ModelPtr refine_model(GraphPtr g, const std::vector<PointRef>& pts) {
    return make_model(std::move(g), pts);
}

bool same_subdivision(const Model& a, const Model& b) {
    return a.graph_.get() == b.graph_.get() && a.cuts_ == b.cuts_;
}

} // namespace mgdiv
