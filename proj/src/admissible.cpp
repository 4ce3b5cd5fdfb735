#include "mgdiv/admissible.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "mgdiv/errors.hpp"

namespace mgdiv {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(b)] = find(a); }
};

// Per-chain placement of model vertices and edges, in chain coordinates.
struct ChainItems {
    // interior chain vertices (branch endpoints excluded): (position, vertex)
    std::vector<std::vector<std::pair<Rat, int>>> verts;
    // all model edges: (lo, hi, edge)
    std::vector<std::vector<std::tuple<Rat, Rat, int>>> edges;
};

ChainItems chain_items(const Model& m) {
    const MetricGraph& g = m.graph();
    ChainItems out;
    out.verts.resize(g.chains().size());
    out.edges.resize(g.chains().size());
    for (int v = 0; v < m.n_vertices(); ++v) {
        const PointRef& p = m.vertex_point(v);
        if (p.at_vertex && g.is_branch(g.vertex_index(p.id))) continue;
        out.verts[g.chain_of_point(p)].push_back({g.chain_position(p), v});
    }
    for (int e = 0; e < m.n_edges(); ++e) {
        const auto& me = m.edge(e);
        int be = me.base_edge;
        const Rat& start = g.chain_offset(be);
        const Rat& len = g.edge_recs()[be].length;
        Rat lo, hi;
        if (g.chain_forward(be)) {
            lo = start + me.a;
            hi = start + me.b;
        } else {
            lo = start + len - me.b;
            hi = start + len - me.a;
        }
        out.edges[g.chain_of_edge(be)].push_back({lo, hi, e});
    }
    for (auto& vs : out.verts) std::sort(vs.begin(), vs.end());
    for (auto& es : out.edges) std::sort(es.begin(), es.end());
    return out;
}

// Merged covered blocks of S per chain (branch endpoints included when in I).
std::vector<std::vector<std::pair<Rat, Rat>>> chain_cover(const AdmissibleSet& S,
                                                          const ChainItems& items) {
    const Model& m = S.model();
    const MetricGraph& g = m.graph();
    std::vector<std::vector<std::pair<Rat, Rat>>> blocks(g.chains().size());
    for (std::size_t c = 0; c < g.chains().size(); ++c) {
        std::vector<std::pair<Rat, Rat>> raw;
        const auto& ch = g.chains()[c];
        int w0 = m.vertex_of(PointRef::vertex(g.vertex_ids()[ch.w0]));
        int w1 = m.vertex_of(PointRef::vertex(g.vertex_ids()[ch.w1]));
        if (S.in_I(w0)) raw.push_back({Rat(), Rat()});
        if (S.in_I(w1)) raw.push_back({ch.length, ch.length});
        for (auto& [pos, v] : items.verts[c])
            if (S.in_I(v)) raw.push_back({pos, pos});
        for (auto& [lo, hi, e] : items.edges[c])
            if (S.in_J(e)) raw.push_back({lo, hi});
        std::sort(raw.begin(), raw.end());
        for (auto& iv : raw) {
            if (!blocks[c].empty() && iv.first <= blocks[c].back().second)
                blocks[c].back().second = max(blocks[c].back().second, iv.second);
            else
                blocks[c].push_back(iv);
        }
    }
    return blocks;
}

} // namespace

AdmissibleSet::AdmissibleSet(ModelPtr model, std::vector<char> in_I, std::vector<char> in_J)
    : model_(std::move(model)), I_(std::move(in_I)), J_(std::move(in_J)) {
    require(static_cast<int>(I_.size()) == model_->n_vertices() &&
                static_cast<int>(J_.size()) == model_->n_edges(),
            errc::malformed_set, "I/J flag sizes do not match the model");
    for (int e = 0; e < model_->n_edges(); ++e) {
        if (!J_[e]) continue;
        const auto& me = model_->edge(e);
        require(I_[me.v_lo] && I_[me.v_hi], errc::malformed_set,
                "edge " + model_->sub_edge_id(e) + " in J has an endpoint outside I");
    }
}

AdmissibleSet AdmissibleSet::empty(ModelPtr model) {
    std::vector<char> I(model->n_vertices(), 0), J(model->n_edges(), 0);
    return AdmissibleSet(std::move(model), std::move(I), std::move(J));
}

AdmissibleSet AdmissibleSet::whole(ModelPtr model) {
    std::vector<char> I(model->n_vertices(), 1), J(model->n_edges(), 1);
    return AdmissibleSet(std::move(model), std::move(I), std::move(J));
}

bool AdmissibleSet::is_empty() const {
    for (char c : I_)
        if (c) return false;
    return true;
}

bool AdmissibleSet::is_whole() const {
    for (char c : I_)
        if (!c) return false;
    for (char c : J_)
        if (!c) return false;
    return true;
}

int AdmissibleSet::i_count() const {
    int n = 0;
    for (char c : I_) n += c ? 1 : 0;
    return n;
}

bool AdmissibleSet::contains(const PointRef& p) const {
    model_->graph().check_point(p);
    if (auto v = model_->find_vertex(p)) return I_[*v] != 0;
    // Strictly inside a sub-edge.
    int be = model_->graph().edge_index(p.id);
    return J_[model_->sub_edge_at(be, p.offset)] != 0;
}

int AdmissibleSet::branch_point_count() const {
    int n = 0;
    for (int v : model_->branch_vertices()) n += I_[v] ? 1 : 0;
    return n;
}

AdmissibleSet AdmissibleSet::re_express(ModelPtr finer) const {
    require(finer->graph_ptr().get() == model_->graph_ptr().get(), errc::malformed_input,
            "re_express across different graphs");
    std::vector<char> I(finer->n_vertices(), 0), J(finer->n_edges(), 0);
    for (int v = 0; v < finer->n_vertices(); ++v)
        I[v] = contains(finer->vertex_point(v)) ? 1 : 0;
    for (int e = 0; e < finer->n_edges(); ++e) {
        const auto& me = finer->edge(e);
        int coarse = model_->sub_edge_at(me.base_edge, me.a);
        require(me.b <= model_->edge(coarse).b, errc::internal_invariant,
                "re_express target does not refine the source model");
        J[e] = J_[coarse];
    }
    return AdmissibleSet(std::move(finer), std::move(I), std::move(J));
}

std::vector<PointRef> AdmissibleSet::i_points() const {
    std::vector<PointRef> out;
    for (int v = 0; v < model_->n_vertices(); ++v)
        if (I_[v]) out.push_back(model_->vertex_point(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const AdmissibleSet& a, const AdmissibleSet& b) {
    return same_subdivision(a.model(), b.model()) && a.I_ == b.I_ && a.J_ == b.J_;
}

TopologyProfile topology_profile(const AdmissibleSet& S) {
    const Model& m = S.model();
    TopologyProfile t;
    long long nI = 0, nJ = 0;
    for (char c : S.I_flags()) nI += c ? 1 : 0;
    for (char c : S.J_flags()) nJ += c ? 1 : 0;
    t.chi_S = nI - nJ;
    t.p_a = 1 - t.chi_S;

    UnionFind uf(m.n_vertices());
    for (int e = 0; e < m.n_edges(); ++e)
        if (S.in_J(e)) uf.unite(m.edge(e).v_lo, m.edge(e).v_hi);
    std::set<int> roots;
    for (int v = 0; v < m.n_vertices(); ++v)
        if (S.in_I(v)) roots.insert(uf.find(v));
    t.components = static_cast<long long>(roots.size());
    t.betti1 = t.components - t.chi_S;

    long long v_out = 0, e_out_out = 0, e_in_in = 0;
    for (int v = 0; v < m.n_vertices(); ++v)
        if (!S.in_I(v)) ++v_out;
    for (int e = 0; e < m.n_edges(); ++e) {
        if (S.in_J(e)) continue;
        bool lo = S.in_I(m.edge(e).v_lo), hi = S.in_I(m.edge(e).v_hi);
        if (!lo && !hi) ++e_out_out;
        if (lo && hi) ++e_in_in;
    }
    t.chi_complement = v_out - e_out_out + e_in_in;

    long long chi_gamma = m.n_vertices() - m.n_edges();
    t.psi = t.chi_complement - chi_gamma;
    return t;
}

AdmissibleSet convex_hull(const AdmissibleSet& S) {
    const Model& m = S.model();
    const MetricGraph& g = m.graph();
    ChainItems items = chain_items(m);
    std::vector<char> I = S.I_flags(), J = S.J_flags();

    bool changed = true;
    while (changed) {
        changed = false;
        AdmissibleSet cur(S.model_ptr(), I, J);
        auto blocks = chain_cover(cur, items);
        for (std::size_t c = 0; c < g.chains().size(); ++c) {
            const auto& ch = g.chains()[c];
            bool loop = ch.w0 == ch.w1;
            int w0 = m.vertex_of(PointRef::vertex(g.vertex_ids()[ch.w0]));
            Rat lo, hi;
            if (loop && I[w0]) {
                lo = Rat();
                hi = ch.length;
            } else if (!blocks[c].empty()) {
                lo = blocks[c].front().first;
                hi = blocks[c].back().second;
            } else {
                continue;
            }
            for (auto& [pos, v] : items.verts[c])
                if (lo <= pos && pos <= hi && !I[v]) {
                    I[v] = 1;
                    changed = true;
                }
            for (auto& [elo, ehi, e] : items.edges[c])
                if (lo <= elo && ehi <= hi && !J[e]) {
                    J[e] = 1;
                    changed = true;
                }
        }
    }
    return AdmissibleSet(S.model_ptr(), std::move(I), std::move(J));
}

bool is_convex(const AdmissibleSet& S) { return convex_hull(S) == S; }

AdmissibleSet conv_model(ModelPtr model, const std::vector<char>& X) {
    require(static_cast<int>(X.size()) == model->n_vertices(), errc::malformed_input,
            "conv_model subset size mismatch");
    std::vector<char> J(model->n_edges(), 0);
    for (int e = 0; e < model->n_edges(); ++e) {
        const auto& me = model->edge(e);
        if (X[me.v_lo] && X[me.v_hi]) J[e] = 1;
    }
    return AdmissibleSet(std::move(model), X, std::move(J));
}

AdmissibleSet conv_model_mask(ModelPtr model, unsigned long long mask) {
    std::vector<char> X(model->n_vertices(), 0);
    for (int v = 0; v < model->n_vertices(); ++v)
        if (mask >> v & 1ULL) X[v] = 1;
    return conv_model(std::move(model), X);
}

long long diff_count(const AdmissibleSet& S) {
    ChainItems items = chain_items(S.model());
    auto blocks = chain_cover(S, items);
    long long gaps = 0;
    for (auto& bs : blocks)
        if (!bs.empty()) gaps += static_cast<long long>(bs.size()) - 1;

    long long via_psi = topology_profile(S).psi - topology_profile(convex_hull(S)).psi;
    require(gaps == via_psi, errc::internal_invariant,
            "diff mismatch: gap count " + std::to_string(gaps) + " vs psi route " +
                std::to_string(via_psi));
    return gaps;
}

std::map<PointRef, int> boundary_valence(const AdmissibleSet& S) {
    const Model& m = S.model();
    std::map<PointRef, int> out;
    for (int v = 0; v < m.n_vertices(); ++v) {
        if (!S.in_I(v)) continue;
        int leaving = 0;
        for (auto& [e, slot] : m.incident_ends(v))
            if (!S.in_J(e)) ++leaving;
        if (leaving > 0) out.emplace(m.vertex_point(v), leaving);
    }
    return out;
}

long long cut_size(const AdmissibleSet& S) {
    require(!S.is_empty(), errc::empty_set, "cut size of the empty set");
    require(!S.is_whole(), errc::not_proper, "cut size of the whole graph");
    long long total = 0;
    for (auto& [p, val] : boundary_valence(S)) total += val;
    TopologyProfile t = topology_profile(S);
    require(total == t.psi - t.p_a + 1, errc::internal_invariant,
            "cut size " + std::to_string(total) + " violates psi - p_a + 1");
    return total;
}

std::vector<Rat> distances_from_set(const AdmissibleSet& S) {
    require(!S.is_empty(), errc::empty_set, "distance from the empty set");
    const Model& m = S.model();
    std::vector<std::optional<Rat>> dist(m.n_vertices());
    using Item = std::pair<Rat, int>;
    auto cmp = [](const Item& a, const Item& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    for (int v = 0; v < m.n_vertices(); ++v)
        if (S.in_I(v)) {
            dist[v] = Rat();
            pq.push({Rat(), v});
        }
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (!dist[v] || *dist[v] < d) continue;
        for (auto& [e, slot] : m.incident_ends(v)) {
            const auto& me = m.edge(e);
            int w = slot == 0 ? me.v_hi : me.v_lo;
            Rat nd = d + me.length;
            if (!dist[w] || nd < *dist[w]) {
                dist[w] = nd;
                pq.push({nd, w});
            }
        }
    }
    std::vector<Rat> out;
    out.reserve(m.n_vertices());
    for (auto& d : dist) {
        require(d.has_value(), errc::internal_invariant, "unreachable model vertex");
        out.push_back(*d);
    }
    return out;
}

Rat distance_from_set(const AdmissibleSet& S, const std::vector<PointRef>& targets) {
    require(!targets.empty(), errc::empty_targets, "no targets");
    auto dist = distances_from_set(S);
    std::optional<Rat> best;
    for (auto& t : targets) {
        int v = S.model().vertex_of(t);
        if (!best || dist[v] < *best) best = dist[v];
    }
    return *best;
}

AdmissibleSet fatten(const AdmissibleSet& S, const Rat& eps) {
    require(eps.is_positive(), errc::malformed_input, "fattening radius must be positive");
    const Model& m = S.model();
    auto dist = distances_from_set(S);

    // Covered intervals per base edge, in base-edge offsets.
    std::vector<std::vector<std::pair<Rat, Rat>>> covered(m.graph().n_edges());
    std::vector<PointRef> new_pts;
    for (int e = 0; e < m.n_edges(); ++e) {
        const auto& me = m.edge(e);
        const Rat& dx = dist[me.v_lo];
        const Rat& dy = dist[me.v_hi];
        std::vector<std::pair<Rat, Rat>> local;
        if (dx <= eps) local.push_back({Rat(), min(me.length, eps - dx)});
        if (dy <= eps) local.push_back({max(Rat(), me.length - (eps - dy)), me.length});
        if (local.empty()) continue;
        std::sort(local.begin(), local.end());
        std::vector<std::pair<Rat, Rat>> merged;
        for (auto& iv : local) {
            if (!merged.empty() && iv.first <= merged.back().second)
                merged.back().second = max(merged.back().second, iv.second);
            else
                merged.push_back(iv);
        }
        const std::string& base_id = m.graph().edge_recs()[me.base_edge].id;
        for (auto& [lo, hi] : merged) {
            Rat alo = me.a + lo, ahi = me.a + hi;
            covered[me.base_edge].push_back({alo, ahi});
            if (lo.is_positive() && lo < me.length)
                new_pts.push_back(PointRef::interior(base_id, alo));
            if (hi.is_positive() && hi < me.length)
                new_pts.push_back(PointRef::interior(base_id, ahi));
        }
    }

    ModelPtr fine = m.refine_with(new_pts);
    std::vector<char> I(fine->n_vertices(), 0), J(fine->n_edges(), 0);
    for (int v = 0; v < fine->n_vertices(); ++v) {
        const PointRef& p = fine->vertex_point(v);
        if (auto old = m.find_vertex(p)) {
            I[v] = dist[*old] <= eps ? 1 : 0;
        } else {
            I[v] = 1; // fresh cut points sit exactly on the eps frontier
        }
    }
    for (int e = 0; e < fine->n_edges(); ++e) {
        const auto& me = fine->edge(e);
        for (auto& [lo, hi] : covered[me.base_edge])
            if (lo <= me.a && me.b <= hi) {
                J[e] = 1;
                break;
            }
    }
    return AdmissibleSet(std::move(fine), std::move(I), std::move(J));
}

AdmissibleSet set_union(const AdmissibleSet& A, const AdmissibleSet& B) {
    require(same_subdivision(A.model(), B.model()), errc::malformed_input,
            "set_union requires a common model");
    std::vector<char> I = A.I_flags(), J = A.J_flags();
    for (std::size_t i = 0; i < I.size(); ++i) I[i] |= B.I_flags()[i];
    for (std::size_t j = 0; j < J.size(); ++j) J[j] |= B.J_flags()[j];
    return AdmissibleSet(A.model_ptr(), std::move(I), std::move(J));
}

AdmissibleSet set_intersection(const AdmissibleSet& A, const AdmissibleSet& B) {
    require(same_subdivision(A.model(), B.model()), errc::malformed_input,
            "set_intersection requires a common model");
    std::vector<char> I = A.I_flags(), J = A.J_flags();
    for (std::size_t i = 0; i < I.size(); ++i) I[i] &= B.I_flags()[i];
    for (std::size_t j = 0; j < J.size(); ++j) J[j] &= B.J_flags()[j];
    return AdmissibleSet(A.model_ptr(), std::move(I), std::move(J));
}

std::pair<AdmissibleSet, AdmissibleSet> common_model(const AdmissibleSet& A,
                                                     const AdmissibleSet& B) {
    require(A.model().graph_ptr().get() == B.model().graph_ptr().get(), errc::malformed_input,
            "sets live on different graphs");
    if (same_subdivision(A.model(), B.model())) return {A, B};
    std::vector<PointRef> pts = A.model().interior_points();
    auto more = B.model().interior_points();
    pts.insert(pts.end(), more.begin(), more.end());
    ModelPtr merged = make_model(A.model().graph_ptr(), pts);
    return {A.re_express(merged), B.re_express(merged)};
}

bool subset_of(const AdmissibleSet& A, const AdmissibleSet& B) {
    auto [a, b] = common_model(A, B);
    for (int v = 0; v < a.model().n_vertices(); ++v)
        if (a.in_I(v) && !b.in_I(v)) return false;
    for (int e = 0; e < a.model().n_edges(); ++e)
        if (a.in_J(e) && !b.in_J(e)) return false;
    return true;
}

bool same_point_set(const AdmissibleSet& A, const AdmissibleSet& B) {
    auto [a, b] = common_model(A, B);
    return a == b;
}

std::vector<PointRef> spanning_point_set(const AdmissibleSet& S) {
    const Model& m = S.model();
    const MetricGraph& g = m.graph();
    ChainItems items = chain_items(m);
    auto blocks = chain_cover(S, items);

    // Chain position -> point, walking the chain's steps.
    auto point_at_chain_pos = [&](int c, const Rat& pos) -> PointRef {
        const auto& ch = g.chains()[c];
        Rat acc;
        for (auto& st : ch.steps) {
            const auto& rec = g.edge_recs()[st.edge];
            Rat next = acc + rec.length;
            if (pos <= next) {
                Rat local = pos - acc;
                Rat off = st.forward ? local : rec.length - local;
                return normalize_point(g, rec.id, off);
            }
            acc = next;
        }
        fail(errc::internal_invariant, "chain position out of range");
    };

    std::set<PointRef> pts;
    for (std::size_t c = 0; c < blocks.size(); ++c)
        for (auto& [lo, hi] : blocks[c]) {
            pts.insert(point_at_chain_pos(static_cast<int>(c), lo));
            pts.insert(point_at_chain_pos(static_cast<int>(c), hi));
        }
    return {pts.begin(), pts.end()};
}

} // namespace mgdiv
