// Acceptance suite: one pass/fail line per criterion, exit = number of
// failures. Every check is exact; tolerances are equalities pinned here.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "mgdiv/engine.hpp"
#include "mgdiv/json_io.hpp"
#include "mgdiv/oracle.hpp"
#include "support/fixtures.hpp"

using namespace mgdiv;
using namespace mgtest;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<void(std::ostringstream&)> run;
};

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void ensure(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

// Shared corpus for criteria 2, 3 and 5.
struct Instance {
    GraphPtr graph;
    Divisor divisor;
    ReductionResult result; // with trace
};

std::vector<Instance> g_corpus;
unsigned long long g_seed = 20260808ULL;

void build_corpus() {
    if (!g_corpus.empty()) return;
    Rng rng(g_seed);
    ReductionOptions opts;
    opts.with_trace = true;
    while (g_corpus.size() < 220) {
        GraphPtr g = random_graph(rng);
        Divisor D = random_effective_divisor(rng, g, rng.range(0, g->genus()));
        Instance inst{g, D, semibreak_reduce(g, D, opts)};
        g_corpus.push_back(std::move(inst));
    }
}

// --- criterion 1 -----------------------------------------------------------

void criterion1(std::ostringstream& out) {
    long long t0 = now_ms();
    GraphPtr g = dumbbell();
    Divisor Du = div_at({{PointRef::vertex("u"), 1}});
    Divisor Dv = div_at({{PointRef::vertex("v"), 1}});
    EquivalenceResult res = are_equivalent(g, Du, Dv);
    ensure(res.equivalent, "(u) ~ (v) not recognized on the dumbbell");
    // The composite certificate replays (u) -> (v) exactly: the rhs side is
    // already a break divisor, so the lhs certificate alone is the witness.
    ensure(res.rhs_cert.empty(), "expected an empty rhs certificate");
    ensure(apply_certificate(Du, res.lhs_cert) == Dv,
           "composite certificate does not replay (u) -> (v)");
    long long elapsed = now_ms() - t0;
    ensure(elapsed < 1000, "took " + std::to_string(elapsed) + " ms (limit 1000)");
    out << "equiv true, certificate replays (u) -> (v), " << elapsed << " ms";
}

// --- criterion 2 -----------------------------------------------------------

void criterion2(std::ostringstream& out) {
    long long t0 = now_ms();
    build_corpus();
    long long max_updates = 0;
    for (auto& inst : g_corpus) {
        const GraphPtr& g = inst.graph;
        const ReductionResult& res = inst.result;
        long long bound = g->genus() * static_cast<long long>(g->branch_ids().size());
        ensure(res.updates <= bound,
               "update bound exceeded: " + std::to_string(res.updates) + " > " +
                   std::to_string(bound));
        ensure(apply_certificate(inst.divisor, res.certificate) == res.semibreak,
               "certificate does not replay the input to the semibreak output");
        ensure(res.semibreak.degree() == inst.divisor.degree(), "degree changed");
        ensure(res.semibreak.is_effective(), "semibreak output not effective");
        ensure(res.semibreak.dominated_by(res.break_divisor),
               "semibreak not dominated by the break divisor");
        ensure(oracle::is_semibreak_bruteforce(g, res.semibreak),
               "oracle rejects the semibreak output");
        ensure(is_break(g, res.break_divisor), "dominating divisor is not break");
        max_updates = std::max(max_updates, res.updates);
    }
    long long elapsed = now_ms() - t0;
    ensure(elapsed < 60000, "took " + std::to_string(elapsed) + " ms (limit 60000)");
    out << g_corpus.size() << " instances, max updates " << max_updates << ", " << elapsed
        << " ms";
}

// --- criterion 3 -----------------------------------------------------------

void criterion3(std::ostringstream& out) {
    build_corpus();
    int compared = 0;
    for (auto& inst : g_corpus) {
        ModelPtr m = make_model(inst.graph, inst.divisor.support());
        if (m->n_vertices() > 12) continue;
        auto prof = max_error_profile(inst.graph, inst.divisor);
        auto brute = oracle::max_error_bruteforce(inst.graph, inst.divisor);
        ensure(prof.max_error == brute.max_error, "ME value mismatch vs bruteforce");
        ensure(prof.is_break_signal == brute.is_break_signal, "break signal mismatch");
        ensure(same_point_set(prof.minmax, brute.minmax), "minmax set mismatch");
        auto mn = max_error_profile(inst.graph, inst.divisor, MinimizeStrategy::min_norm);
        ensure(mn.max_error == prof.max_error &&
                   mn.is_break_signal == prof.is_break_signal && mn.minmax == prof.minmax,
               "min-norm strategy does not bit-match exhaustive");
        ++compared;
    }
    ensure(compared >= 200, "only " + std::to_string(compared) + " instances compared");
    out << compared << " instances, zero mismatches (bruteforce and min-norm)";
}

// --- criterion 4 -----------------------------------------------------------

void criterion4(std::ostringstream& out) {
    const int trials = 1000;
    Rng rng(g_seed + 4);
    for (int t = 0; t < trials; ++t) {
        GraphPtr g = random_graph(rng);
        ModelPtr m = random_model(rng, g);
        AdmissibleSet S1 = random_set(rng, g, m);
        AdmissibleSet S2 = random_set(rng, g, m);
        AdmissibleSet U = set_union(S1, S2), X = set_intersection(S1, S2);

        // Lemma 4.1: psi modularity.
        ensure(topology_profile(S1).psi + topology_profile(S2).psi ==
                   topology_profile(X).psi + topology_profile(U).psi,
               "psi modularity failed");
        // Lemma 4.3(a): psi(conv(S)) = psi(S) - diff(S).
        ensure(topology_profile(convex_hull(U)).psi ==
                   topology_profile(U).psi - diff_count(U),
               "psi(conv) = psi - diff failed");
        // Lemma 5.2(a): lattice equality and hull inequality for Error.
        Divisor D = random_effective_divisor(rng, g, rng.range(0, g->genus()));
        long long e1 = error_of_set(D, S1), e2 = error_of_set(D, S2);
        ensure(e1 + e2 == error_of_set(D, X) + error_of_set(D, U),
               "Error lattice equality failed");
        ensure(e1 + e2 + diff_count(U) <=
                   error_of_set(D, X) + error_of_set(D, convex_hull(U)),
               "Error hull inequality failed");
        // Lemma 6.3: c(S) = psi - p_a + 1 (cut_size also checks it internally).
        if (!S1.is_empty() && !S1.is_whole()) {
            auto tp = topology_profile(S1);
            ensure(cut_size(S1) == tp.psi - tp.p_a + 1, "cut identity failed");
        }
        // Lemma 5.3(a) + Claim 1 on minmax.
        auto prof = max_error_profile(g, D);
        if (prof.max_error > 0) {
            ensure(is_convex(prof.minmax), "minmax not convex");
            for (auto& [p, val] : boundary_valence(prof.minmax))
                ensure(val <= D.coeff(p), "Claim 1 (val <= D) failed on minmax");
        }
    }
    out << trials << " randomized trials per lemma, exact equality throughout";
}

// --- criterion 5 -----------------------------------------------------------

void criterion5(std::ostringstream& out) {
    build_corpus();
    long long steps = 0, ties = 0, moves = 0, fires = 0;
    for (auto& inst : g_corpus) {
        const auto& trace = inst.result.trace;
        for (auto& t : trace) {
            if (t.case_tag == 1) ++moves;
            if (t.case_tag == 2) ++fires;
        }
        for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
            const TraceEntry& a = trace[k];
            const TraceEntry& b = trace[k + 1];
            ++steps;
            ensure(b.max_error <= a.max_error, "ME increased along a trace");
            if (a.max_error != b.max_error) continue;
            ++ties;
            ensure(b.case_tag != 0, "terminal pass cannot tie a positive ME");
            ensure(b.branch_points > a.branch_points,
                   "ME tie without branch-point growth in minmax");
            if (a.case_tag == 2) {
                // Prop 5.7(a)(iii): the eps-fattening of the fired set lies in
                // the next minmax.
                ensure(subset_of(fatten(a.minmax, *a.eps), b.minmax),
                       "S_eps not contained in the next minmax");
            } else {
                // Prop 5.7(b)(iii): S and the moved-to point lie in the next
                // minmax.
                ensure(subset_of(a.minmax, b.minmax), "S not contained in next minmax");
                ensure(b.minmax.contains(*a.moved_to),
                       "moved-to point not in the next minmax");
            }
        }
    }
    ensure(moves > 0 && fires > 0, "corpus must exercise both reduction cases");
    out << steps << " consecutive trace steps (" << moves << " moves, " << fires
        << " fires), " << ties << " ME ties, zero violations";
}

// --- criterion 6 -----------------------------------------------------------

// Fires a set whose boundary chips cover its valences, so the result stays
// effective by construction. Non-break divisors always admit the minmax step;
// break divisors fall back to convex hulls of random closed sets.
FiringCertificate random_valid_certificate(Rng& rng, const GraphPtr& g, Divisor& D) {
    FiringCertificate cert;
    int want = static_cast<int>(rng.range(1, 3));

    auto fire_if_safe = [&](const AdmissibleSet& S) {
        if (S.is_empty() || S.is_whole()) return false;
        for (auto& [p, val] : boundary_valence(S))
            if (val > D.coeff(p)) return false;
        std::vector<PointRef> targets;
        for (int bv : S.model().branch_vertices())
            if (!S.in_I(bv)) targets.push_back(S.model().vertex_point(bv));
        Rat eps;
        if (!targets.empty()) {
            eps = distance_from_set(S, targets) / Rat(rng.range(1, 3));
        } else {
            // All branch points inside S: any radius is safe, fronts merge.
            eps = S.model().edge(0).length;
            for (int e = 1; e < S.model().n_edges(); ++e)
                eps = min(eps, S.model().edge(e).length);
            eps /= Rat(2 * rng.range(1, 3));
        }
        Divisor fired = fire_set(D, S, eps);
        ensure(fired.is_effective(), "valence-covered fire lost effectiveness");
        D = fired;
        cert.steps.push_back({S, eps});
        return true;
    };

    for (int step = 0; step < want; ++step) {
        auto prof = max_error_profile(g, D);
        if (prof.max_error > 0) {
            ensure(fire_if_safe(prof.minmax), "minmax fire must be safe (Claim 1)");
            continue;
        }
        bool found = false;
        for (int attempt = 0; attempt < 20 && !found; ++attempt) {
            ModelPtr m = make_model(g, D.support());
            found = fire_if_safe(convex_hull(random_set(rng, g, m)));
        }
        if (!found) break;
    }
    return cert;
}

void criterion6(std::ostringstream& out) {
    Rng rng(g_seed + 6);
    int done = 0, cert_checks = 0, distinct_pairs = 0, attempts = 0;
    while ((done < 100 || cert_checks < 100) && ++attempts <= 1000) {
        GraphPtr g = random_graph(rng);
        if (g->genus() == 0) continue;
        Divisor D = random_effective_divisor(rng, g, g->genus());
        Divisor rep = break_representative(g, D);
        ensure(is_break(g, rep), "representative is not a break divisor");
        ensure(break_representative(g, rep) == rep, "representative not idempotent");

        Divisor moved = D;
        FiringCertificate cert = random_valid_certificate(rng, g, moved);
        if (!cert.empty()) {
            ensure(apply_certificate(D, cert) == moved, "random certificate replay");
            ensure(break_representative(g, moved) == rep,
                   "representative changed under a valid certificate");
            ++cert_checks;
        }

        // Two break divisors sampled from spanning-tree complements: if they
        // differ as divisors they must be inequivalent (Prop 6.2 behavior).
        ModelPtr m = make_model(g, {});
        auto comps = oracle::spanning_tree_complements(m);
        auto sample_break = [&]() {
            const auto& comp = comps[rng.next(comps.size())];
            Divisor B;
            for (int e : comp.edges) {
                const auto& me = m->edge(e);
                int v = rng.coin() ? me.v_lo : me.v_hi;
                B.add(m->vertex_point(v), 1);
            }
            return B;
        };
        Divisor B1 = sample_break(), B2 = sample_break();
        ensure(is_break(g, B1) && is_break(g, B2), "sampled divisor not break");
        if (B1 != B2) {
            ensure(!are_equivalent(g, B1, B2).equivalent,
                   "distinct break divisors reported equivalent");
            ++distinct_pairs;
        }
        ++done;
    }
    ensure(done >= 100, "too few degree-g instances");
    ensure(cert_checks >= 100, "too few certificate-invariance checks");
    ensure(distinct_pairs >= 30, "too few distinct break pairs");
    out << done << " degree-g divisors, " << cert_checks << " certificate checks, "
        << distinct_pairs << " distinct break pairs, zero violations";
}

// --- criterion 7 -----------------------------------------------------------

void criterion7(std::ostringstream& out) {
    Rng rng(g_seed + 7);
    ReductionOptions opts;
    opts.with_trace = true;
    int done = 0;
    long long fired = 0;
    while (done < 100) {
        GraphPtr g = random_graph(rng, /*integral=*/true);
        Divisor D =
            random_effective_divisor(rng, g, rng.range(0, g->genus()), /*integral=*/true);
        ensure(is_integral(*g, D), "generator produced a non-integral divisor");
        ReductionResult res = semibreak_reduce(g, D, opts);
        ensure(is_integral(*g, res.semibreak), "semibreak output not integral");
        ensure(is_integral(*g, res.break_divisor), "break divisor not integral");
        for (auto& step : res.certificate.steps) {
            ensure(step.eps.is_integer(), "fired eps " + step.eps.str() + " not integral");
            ++fired;
        }
        ++done;
    }
    out << done << " integer-length instances, " << fired
        << " fired eps all integral, outputs integral";
}

// --- criterion 8 -----------------------------------------------------------

void criterion8(std::ostringstream& out) {
    Rng rng(g_seed + 8);
    int pairs = 0;
    for (int m = 3; m <= 5; ++m) {
        GraphPtr g = banana(m);
        // Every cut of the banana graph has size >= 2 = d + 1 for d = 1.
        ModelPtr model = make_model(g, {});
        auto comps = oracle::spanning_tree_complements(model);
        ensure(!comps.empty(), "banana graph without spanning trees");
        // Degree-1 semibreak divisors: one point in the closure of a
        // complement edge.
        std::vector<Divisor> samples;
        for (int k = 0; k < 8; ++k) {
            const auto& comp = comps[rng.next(comps.size())];
            int e = comp.edges[rng.next(comp.edges.size())];
            const std::string& base_id = g->edge_recs()[model->edge(e).base_edge].id;
            Divisor D;
            switch (rng.next(3)) {
                case 0: D.add(PointRef::vertex("u"), 1); break;
                case 1: D.add(PointRef::vertex("v"), 1); break;
                default: D.add(normalize_point(*g, base_id, Rat(rng.range(1, 7), 8)), 1);
            }
            ensure(oracle::is_semibreak_bruteforce(g, D), "sample is not semibreak");
            samples.push_back(std::move(D));
        }
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (std::size_t j = i + 1; j < samples.size(); ++j) {
                bool eq = are_equivalent(g, samples[i], samples[j]).equivalent;
                if (samples[i] == samples[j])
                    ensure(eq, "a divisor compared inequivalent to itself");
                else {
                    ensure(!eq, "distinct semibreak divisors reported equivalent on a "
                                "2-edge-connected banana graph");
                    ++pairs;
                }
            }
    }
    ensure(pairs >= 40, "too few distinct pairs exercised");
    out << "banana graphs m = 3..5, d = 1: " << pairs << " distinct pairs, all inequivalent";
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_seed = std::stoull(argv[1]);

    std::vector<Criterion> criteria = {
        {1, "figure-2 equivalence on the dumbbell", criterion1},
        {2, "semibreak reduction on 220 random instances", criterion2},
        {3, "max-error profile vs bruteforce oracle (and min-norm)", criterion3},
        {4, "lemma suite, 1000 randomized trials", criterion4},
        {5, "progress invariants along reduction traces", criterion5},
        {6, "break uniqueness and canonicality", criterion6},
        {7, "integrality on integer-length graphs", criterion7},
        {8, "uniqueness on 2-edge-connected banana graphs", criterion8},
    };

    int failures = 0;
    for (auto& c : criteria) {
        long long t0 = now_ms();
        std::ostringstream detail;
        bool ok = true;
        std::string why;
        try {
            c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        long long ms = now_ms() - t0;
        if (ok) {
            std::cout << "[PASS] criterion " << c.number << ": " << c.title << " -- "
                      << detail.str() << " (" << ms << " ms)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << c.number << ": " << c.title << " -- " << why
                      << " (" << ms << " ms)\n";
        }
    }
    std::cout << (failures == 0 ? "SUMMARY: all 8 criteria passed"
                                : "SUMMARY: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
