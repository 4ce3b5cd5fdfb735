#ifndef MGDIV_TESTS_FIXTURES_HPP
#define MGDIV_TESTS_FIXTURES_HPP

#include <random>

#include "mgdiv/errors.hpp"

#include "mgdiv/engine.hpp"

namespace mgtest {

using namespace mgdiv;

// Theta graph: vertices u, v; three parallel unit edges e1, e2, e3. Genus 2.
inline GraphPtr theta() {
    GraphDescription d;
    d.vertices = {"u", "v"};
    d.edges = {{"e1", "u", "v", Rat(1)}, {"e2", "u", "v", Rat(1)}, {"e3", "u", "v", Rat(1)}};
    return build_graph(d);
}

// Dumbbell: loop A at u, loop B at v, bridge br from u to v, all unit. Genus 2.
inline GraphPtr dumbbell() {
    GraphDescription d;
    d.vertices = {"u", "v"};
    d.edges = {{"A", "u", "u", Rat(1)}, {"B", "v", "v", Rat(1)}, {"br", "u", "v", Rat(1)}};
    return build_graph(d);
}

// Banana graph B_m: two vertices joined by m parallel unit edges; genus m - 1.
inline GraphPtr banana(int m) {
    GraphDescription d;
    d.vertices = {"u", "v"};
    for (int i = 1; i <= m; ++i)
        d.edges.push_back({"e" + std::to_string(i), "u", "v", Rat(1)});
    return build_graph(d);
}

inline PointRef pt(const GraphPtr& g, const std::string& edge, long long num, long long den) {
    return normalize_point(*g, edge, Rat(num, den));
}

inline Divisor div_at(std::initializer_list<std::pair<PointRef, long long>> entries) {
    Divisor D;
    for (auto& [p, c] : entries) D.add(p, c);
    return D;
}

inline AdmissibleSet set_of(const ModelPtr& m, const std::vector<PointRef>& ipts,
                            const std::vector<std::string>& jids) {
    std::vector<char> I(m->n_vertices(), 0), J(m->n_edges(), 0);
    for (auto& p : ipts) I[m->vertex_of(p)] = 1;
    for (auto& id : jids) J[m->sub_edge_by_id(id)] = 1;
    return AdmissibleSet(m, std::move(I), std::move(J));
}

// Deterministic RNG; std::uniform_int_distribution is implementation-defined,
// so draws go through this wrapper.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long long seed) : gen(seed) {}
    unsigned long long next(unsigned long long n) { return gen() % n; }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next(static_cast<unsigned long long>(hi - lo + 1)));
    }
    bool coin() { return next(2) == 0; }
};

// Random connected multigraph with |V| <= 6, genus <= 4, |E| <= 9 and
// rational lengths with denominators <= 8. Integral = integer lengths only.
inline GraphPtr random_graph(Rng& rng, bool integral = false) {
    for (;;) {
        int nv = static_cast<int>(rng.range(1, 6));
        int extra = static_cast<int>(rng.range(nv == 1 ? 1 : 0, 4));
        GraphDescription d;
        for (int v = 0; v < nv; ++v) d.vertices.push_back("v" + std::to_string(v));
        int eid = 0;
        auto len = [&]() {
            if (integral) return Rat(rng.range(1, 3));
            return Rat(rng.range(1, 8), rng.range(1, 8));
        };
        for (int v = 1; v < nv; ++v) {
            auto parent = rng.next(static_cast<unsigned long long>(v));
            d.edges.push_back({"e" + std::to_string(eid++), "v" + std::to_string(parent),
                               "v" + std::to_string(v), len()});
        }
        for (int k = 0; k < extra; ++k) {
            auto a = rng.next(nv), b = rng.next(nv);
            d.edges.push_back({"e" + std::to_string(eid++), "v" + std::to_string(a),
                               "v" + std::to_string(b), len()});
        }
        try {
            return build_graph(d);
        } catch (const mgdiv::error&) {
            continue; // circle or other degenerate draw; redraw
        }
    }
}

inline PointRef random_point(Rng& rng, const GraphPtr& g, bool integral = false) {
    if (rng.next(3) == 0 || g->n_edges() == 0)
        return PointRef::vertex(g->vertex_ids()[rng.next(g->n_vertices())]);
    const auto& e = g->edge_recs()[rng.next(g->n_edges())];
    if (integral) {
        // Integer offsets in [0, len]; 0 and len normalize to the endpoints.
        long long L = std::stoll(e.length.num_str());
        return normalize_point(*g, e.id, Rat(rng.range(0, L)));
    }
    long long den = rng.range(1, 8);
    // Largest num with num/den strictly below the length.
    Rat bound = e.length * Rat(den);
    long long p = std::stoll(bound.num_str());
    long long q = std::stoll(bound.den_str());
    long long max_num = (p % q == 0) ? p / q - 1 : p / q;
    if (max_num < 1) return PointRef::vertex(g->vertex_ids()[rng.next(g->n_vertices())]);
    return normalize_point(*g, e.id, Rat(rng.range(1, max_num), den));
}

inline Divisor random_effective_divisor(Rng& rng, const GraphPtr& g, long long degree,
                                        bool integral = false) {
    Divisor D;
    for (long long k = 0; k < degree; ++k) D.add(random_point(rng, g, integral), 1);
    return D;
}

// Random closed admissible set on a model refined at a few random points.
inline AdmissibleSet random_set(Rng& rng, const GraphPtr& g, const ModelPtr& model) {
    std::vector<char> I(model->n_vertices(), 0), J(model->n_edges(), 0);
    for (int v = 0; v < model->n_vertices(); ++v) I[v] = rng.coin() ? 1 : 0;
    for (int e = 0; e < model->n_edges(); ++e) {
        const auto& me = model->edge(e);
        if (I[me.v_lo] && I[me.v_hi] && rng.coin()) J[e] = 1;
    }
    return AdmissibleSet(model, std::move(I), std::move(J));
}

inline ModelPtr random_model(Rng& rng, const GraphPtr& g, bool integral = false) {
    std::vector<PointRef> pts;
    int extra = static_cast<int>(rng.range(0, 3));
    for (int k = 0; k < extra; ++k) pts.push_back(random_point(rng, g, integral));
    return make_model(g, pts);
}

} // namespace mgtest

#endif
