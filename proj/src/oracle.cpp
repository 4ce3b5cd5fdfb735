#include "mgdiv/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "mgdiv/errors.hpp"

namespace mgdiv {
namespace oracle {

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

bool connected_without(const Model& m, const std::vector<int>& removed) {
    UnionFind uf(m.n_vertices());
    std::vector<char> skip(m.n_edges(), 0);
    for (int e : removed) skip[e] = 1;
    for (int e = 0; e < m.n_edges(); ++e)
        if (!skip[e]) uf.unite(m.edge(e).v_lo, m.edge(e).v_hi);
    int root = uf.find(0);
    for (int v = 1; v < m.n_vertices(); ++v)
        if (uf.find(v) != root) return false;
    return true;
}

// Simple augmenting-path bipartite matching: chips -> complement edges.
bool match_chips(const std::vector<std::vector<int>>& compat, int n_edges) {
    std::vector<int> edge_owner(n_edges, -1);
    std::vector<char> seen;
    std::function<bool(int)> try_chip = [&](int chip) {
        for (int e : compat[chip]) {
            if (seen[e]) continue;
            seen[e] = 1;
            if (edge_owner[e] < 0 || try_chip(edge_owner[e])) {
                edge_owner[e] = chip;
                return true;
            }
        }
        return false;
    };
    for (std::size_t chip = 0; chip < compat.size(); ++chip) {
        seen.assign(n_edges, 0);
        if (!try_chip(static_cast<int>(chip))) return false;
    }
    return true;
}

} // namespace

std::vector<TreeComplement> spanning_tree_complements(const ModelPtr& model, int edge_bound) {
    const Model& m = *model;
    require(m.n_edges() <= edge_bound, errc::too_large,
            "model has " + std::to_string(m.n_edges()) + " edges, enumeration bound is " +
                std::to_string(edge_bound));
    const long long g = m.graph().genus();
    std::vector<TreeComplement> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<long long>(pick.size()) == g) {
            if (connected_without(m, pick)) out.push_back({pick});
            return;
        }
        for (int e = from; e < m.n_edges(); ++e) {
            pick.push_back(e);
            rec(e + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

bool is_semibreak_bruteforce(const GraphPtr& g, const Divisor& D, int edge_bound) {
    require(D.is_effective(), errc::not_effective, "semibreak test needs an effective divisor");
    if (D.degree() > g->genus()) return false;
    ModelPtr model = make_model(g, D.support());
    auto complements = spanning_tree_complements(model, edge_bound);

    std::vector<int> chip_vertex;
    for (auto& [p, c] : D.entries()) {
        int v = model->vertex_of(p);
        for (long long k = 0; k < c; ++k) chip_vertex.push_back(v);
    }
    if (chip_vertex.empty()) return !complements.empty();

    for (auto& comp : complements) {
        std::vector<std::vector<int>> compat(chip_vertex.size());
        for (std::size_t chip = 0; chip < chip_vertex.size(); ++chip)
            for (std::size_t j = 0; j < comp.edges.size(); ++j) {
                const auto& me = model->edge(comp.edges[j]);
                if (me.v_lo == chip_vertex[chip] || me.v_hi == chip_vertex[chip])
                    compat[chip].push_back(static_cast<int>(j));
            }
        if (match_chips(compat, static_cast<int>(comp.edges.size()))) return true;
    }
    return false;
}

long long chi_betti(const AdmissibleSet& S) {
    const Model& m = S.model();
    UnionFind uf(m.n_vertices());
    long long n_edges = 0;
    for (int e = 0; e < m.n_edges(); ++e)
        if (S.in_J(e)) {
            uf.unite(m.edge(e).v_lo, m.edge(e).v_hi);
            ++n_edges;
        }
    std::vector<char> root_seen(m.n_vertices(), 0);
    long long comps = 0, n_verts = 0;
    for (int v = 0; v < m.n_vertices(); ++v) {
        if (!S.in_I(v)) continue;
        ++n_verts;
        int r = uf.find(v);
        if (!root_seen[r]) {
            root_seen[r] = 1;
            ++comps;
        }
    }
    long long cycle_rank = n_edges - n_verts + comps;
    return comps - cycle_rank;
}

long long chi_complement_betti(const AdmissibleSet& S) {
    const Model& m = S.model();
    // The open complement deformation-retracts onto the core graph spanned by
    // the outside vertices, plus one floating open segment per uncovered edge
    // with both endpoints inside S.
    UnionFind uf(m.n_vertices());
    long long core_edges = 0, floats = 0;
    for (int e = 0; e < m.n_edges(); ++e) {
        if (S.in_J(e)) continue;
        bool lo = S.in_I(m.edge(e).v_lo), hi = S.in_I(m.edge(e).v_hi);
        if (!lo && !hi) {
            uf.unite(m.edge(e).v_lo, m.edge(e).v_hi);
            ++core_edges;
        } else if (lo && hi) {
            ++floats;
        }
    }
    std::vector<char> root_seen(m.n_vertices(), 0);
    long long comps = 0, core_verts = 0;
    for (int v = 0; v < m.n_vertices(); ++v) {
        if (S.in_I(v)) continue;
        ++core_verts;
        int r = uf.find(v);
        if (!root_seen[r]) {
            root_seen[r] = 1;
            ++comps;
        }
    }
    long long cycle_rank = core_edges - core_verts + comps;
    long long betti0 = comps + floats;
    return betti0 - cycle_rank;
}

long long error_of_set_betti(const Divisor& D, const AdmissibleSet& S) {
    long long deg = 0;
    for (auto& [p, c] : D.entries())
        if (S.contains(p)) deg += c;
    AdmissibleSet whole = AdmissibleSet::whole(S.model_ptr());
    long long chi_gamma = chi_betti(whole);
    long long psi = chi_complement_betti(S) - chi_gamma;
    return deg - psi;
}

ErrorProfile max_error_bruteforce(const GraphPtr& g, const Divisor& D) {
    require(D.is_effective(), errc::not_effective, "max error needs an effective divisor");
    require(0 <= D.degree() && D.degree() <= g->genus(), errc::degree_out_of_range,
            "degree outside [0, g]");
    ModelPtr model = make_model(g, D.support());
    const int n = model->n_vertices();
    require(n <= 16, errc::too_large,
            "bruteforce bound |V(G)| <= 16 exceeded: " + std::to_string(n));

    const unsigned long long full = (1ULL << n) - 1;
    long long me = 0; // Error(D, empty) = 0
    for (unsigned long long mask = 0; mask < full; ++mask)
        me = std::max(me, error_of_set_betti(D, conv_model_mask(model, mask)));

    unsigned long long inter = full;
    for (unsigned long long mask = 0; mask < full; ++mask)
        if (error_of_set_betti(D, conv_model_mask(model, mask)) == me) inter &= mask;

    ErrorProfile prof{me, conv_model_mask(model, inter), false};
    if (me > 0)
        require(error_of_set_betti(D, prof.minmax) == me, errc::internal_invariant,
                "intersection of max-error sets lost the max error");
    prof.is_break_signal = (D.degree() == g->genus() && me == 0);
    if (me == 0)
        require(prof.minmax.is_empty(), errc::internal_invariant,
                "ME = 0 with a nonempty smallest maximizer");
    return prof;
}

AllFormsResult max_error_all_forms(const GraphPtr& g, const Divisor& D, long long work_bound) {
    require(D.is_effective(), errc::not_effective, "max error needs an effective divisor");
    ModelPtr model = make_model(g, D.support());
    const int n = model->n_vertices();
    const int ne = model->n_edges();
    require(n <= 20 && ne <= 62, errc::too_large, "all-forms enumeration out of range");

    // Cost estimate: sum over I of 2^{#allowed edges}.
    long long work = 0;
    for (unsigned long long vi = 0; vi < (1ULL << n); ++vi) {
        int allowed = 0;
        for (int e = 0; e < ne; ++e) {
            const auto& me = model->edge(e);
            if ((vi >> me.v_lo & 1ULL) && (vi >> me.v_hi & 1ULL)) ++allowed;
        }
        work += 1LL << allowed;
        require(work <= work_bound, errc::too_large, "all-forms enumeration too expensive");
    }

    long long best = 0; // the empty set achieves 0
    std::vector<char> bi(n, 1), bj(ne, 1);
    auto consider = [&](const std::vector<char>& I, const std::vector<char>& J,
                        long long err, bool collect) {
        if (!collect) {
            best = std::max(best, err);
            return;
        }
        if (err != best) return;
        for (int v = 0; v < n; ++v) bi[v] = bi[v] && I[v];
        for (int e = 0; e < ne; ++e) bj[e] = bj[e] && J[e];
    };

    for (int pass = 0; pass < 2; ++pass) {
        bool collect = pass == 1;
        for (unsigned long long vi = 0; vi < (1ULL << n); ++vi) {
            std::vector<char> I(n, 0);
            for (int v = 0; v < n; ++v) I[v] = (vi >> v & 1ULL) ? 1 : 0;
            std::vector<int> allowed;
            for (int e = 0; e < ne; ++e) {
                const auto& me = model->edge(e);
                if (I[me.v_lo] && I[me.v_hi]) allowed.push_back(e);
            }
            for (unsigned long long ej = 0; ej < (1ULL << allowed.size()); ++ej) {
                std::vector<char> J(ne, 0);
                for (std::size_t k = 0; k < allowed.size(); ++k)
                    if (ej >> k & 1ULL) J[allowed[k]] = 1;
                AdmissibleSet S(model, I, J);
                if (S.is_whole()) continue; // max error ranges over proper sets
                consider(I, J, error_of_set_betti(D, S), collect);
            }
        }
    }
    return {best, AdmissibleSet(model, std::move(bi), std::move(bj))};
}

} // namespace oracle
} // namespace mgdiv
