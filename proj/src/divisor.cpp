#include "mgdiv/divisor.hpp"

#include <sstream>

#include "mgdiv/errors.hpp"

namespace mgdiv {

void Divisor::add(const PointRef& p, long long coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = entries_.emplace(p, 0);
    it->second += coeff;
    if (it->second == 0) entries_.erase(it);
}

long long Divisor::coeff(const PointRef& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long d = 0;
    for (auto& [p, c] : entries_) d += c;
    return d;
}

bool Divisor::is_effective() const {
    for (auto& [p, c] : entries_)
        if (c < 0) return false;
    return true;
}

std::vector<PointRef> Divisor::support() const {
    std::vector<PointRef> out;
    out.reserve(entries_.size());
    for (auto& [p, c] : entries_) out.push_back(p);
    return out;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (auto& [p, c] : o.entries_) add(p, c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (auto& [p, c] : o.entries_) add(p, -c);
    return *this;
}

std::string Divisor::str() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : entries_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << "(" << p.str() << ")";
    }
    return os.str();
}

long long degree_on(const Divisor& D, const AdmissibleSet& S) {
    long long d = 0;
    for (auto& [p, c] : D.entries())
        if (S.contains(p)) d += c;
    return d;
}

Divisor fire_set(const Divisor& D, const AdmissibleSet& S, const Rat& eps) {
    require(eps.is_positive(), errc::malformed_input, "firing distance must be positive");
    require(!S.is_empty(), errc::empty_set, "cannot fire the empty set");
    require(!S.is_whole(), errc::not_proper, "cannot fire the whole graph");

    const Model& m = S.model();

    // Firing is the simple per-end transport only below the first branch
    // point outside S.
    std::vector<PointRef> outside_branch;
    for (int v : m.branch_vertices())
        if (!S.in_I(v)) outside_branch.push_back(m.vertex_point(v));
    if (!outside_branch.empty()) {
        Rat dmax = distance_from_set(S, outside_branch);
        require(eps <= dmax, errc::eps_too_large,
                "eps " + eps.str() + " exceeds dist(S, V_Gamma \\ S) = " + dmax.str());
    }

    struct Hop {
        int edge;
        int enter_slot;
    };

    Divisor out = D;
    for (int v = 0; v < m.n_vertices(); ++v) {
        if (!S.in_I(v)) continue;
        for (auto& [e0, slot0] : m.incident_ends(v)) {
            if (S.in_J(e0)) continue;
            // One leaving end: walk through the complement, crossing only
            // non-branch model vertices outside S.
            out.add(m.vertex_point(v), -1);

            std::vector<Hop> hops;
            Rat total;
            int e = e0, slot = slot0;
            bool hit_set = false;
            int guard = 0;
            for (;;) {
                require(++guard <= 2 * m.n_edges() + 2, errc::internal_invariant,
                        "firing walk did not terminate");
                hops.push_back({e, slot});
                total += m.edge(e).length;
                int far = slot == 0 ? m.edge(e).v_hi : m.edge(e).v_lo;
                if (S.in_I(far)) {
                    hit_set = true;
                    break;
                }
                if (m.vertex_is_branch(far)) break;
                // Valency-2 point: continue along the unique other end.
                int far_slot = slot == 0 ? 1 : 0;
                std::pair<int, int> next{-1, -1};
                for (auto& en : m.incident_ends(far))
                    if (en != std::make_pair(e, far_slot)) { next = en; break; }
                require(next.first >= 0, errc::internal_invariant, "walk stuck at a vertex");
                e = next.first;
                slot = next.second;
            }

            // When the complement segment returns to S the opposing fronts
            // meet at its midpoint; otherwise the walk ends at a branch point
            // at distance >= eps.
            Rat half = total / Rat(2);
            Rat land = hit_set ? min(eps, half) : eps;
            require(land <= total, errc::internal_invariant,
                    "chip would overshoot the walked segment");
            Rat acc;
            for (auto& h : hops) {
                Rat next = acc + m.edge(h.edge).length;
                if (land <= next) {
                    out.add(m.point_at(h.edge, h.enter_slot, land - acc), 1);
                    break;
                }
                acc = next;
            }
        }
    }
    return out;
}

Divisor apply_certificate(const Divisor& D, const FiringCertificate& cert) {
    Divisor cur = D;
    for (auto& step : cert.steps) cur = fire_set(cur, step.set, step.eps);
    return cur;
}

bool is_integral(const MetricGraph& g, const Divisor& D) {
    for (auto& e : g.edge_recs())
        require(e.length.is_integer(), errc::non_integer_lengths,
                "edge \"" + e.id + "\" has non-integer length " + e.length.str());
    for (auto& [p, c] : D.entries())
        if (!p.at_vertex && !p.offset.is_integer()) return false;
    return true;
}

} // namespace mgdiv
