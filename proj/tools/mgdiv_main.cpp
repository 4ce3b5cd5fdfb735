#include <CLI11.hpp>

#include <iostream>

#include "mgdiv/errors.hpp"
#include "mgdiv/json_io.hpp"

namespace {

using namespace mgdiv;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct Common {
    std::string graph_path;
    std::string out_path;
    std::string strategy = "exhaustive";
    MinimizeStrategy strat() const {
        return strategy == "min-norm" ? MinimizeStrategy::min_norm
                                      : MinimizeStrategy::exhaustive;
    }
};

GraphPtr load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

Divisor load_divisor(const GraphPtr& g, const std::string& path) {
    return divisor_from_json(*g, load_json_file(path));
}

void emit(const Json& j, const std::string& out_path) {
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) write_json_file(out_path, j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Divisor theory on metric graphs: chip-firing equivalence, max-error "
        "machinery and semibreak reduction, in exact rational arithmetic.\n"
        "Graphs must be connected and neither a single point nor a circle; "
        "valency-2 vertices are accepted and treated as model points."};
    app.require_subcommand(1);

    Common c;
    std::string d1_path, d2_path, set_path, cert_path, target_path;
    bool with_trace = false;

    auto add_strategy = [&](CLI::App* cmd) {
        cmd->add_option("--strategy", c.strategy, "submodular minimizer backend")
            ->check(CLI::IsMember({"exhaustive", "min-norm"}));
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a graph");
    validate->add_option("graph", c.graph_path)->required();

    auto* semibreak =
        app.add_subcommand("semibreak", "reduce a divisor to a semibreak representative");
    semibreak->add_option("graph", c.graph_path)->required();
    semibreak->add_option("divisor", d1_path)->required();
    semibreak->add_option("--out", c.out_path, "write the reduction result here");
    semibreak->add_option("--cert", cert_path, "write the firing certificate here");
    semibreak->add_flag("--trace", with_trace, "include the per-iteration trace");
    add_strategy(semibreak);

    auto* breakrep =
        app.add_subcommand("breakrep", "canonical break representative of a degree-g divisor");
    breakrep->add_option("graph", c.graph_path)->required();
    breakrep->add_option("divisor", d1_path)->required();
    breakrep->add_option("--out", c.out_path);
    add_strategy(breakrep);

    auto* equiv = app.add_subcommand("equiv", "decide linear equivalence of two divisors");
    equiv->add_option("graph", c.graph_path)->required();
    equiv->add_option("divisor1", d1_path)->required();
    equiv->add_option("divisor2", d2_path)->required();
    equiv->add_option("--cert", cert_path, "write the pair of witnessing certificates here");
    add_strategy(equiv);

    auto* error_cmd = app.add_subcommand("error", "Error(D, S) for a closed admissible set");
    error_cmd->add_option("graph", c.graph_path)->required();
    error_cmd->add_option("divisor", d1_path)->required();
    error_cmd->add_option("set", set_path)->required();

    auto* minmax = app.add_subcommand("minmax", "max error and the smallest max-error set");
    minmax->add_option("graph", c.graph_path)->required();
    minmax->add_option("divisor", d1_path)->required();
    minmax->add_option("--out", c.out_path);
    add_strategy(minmax);

    auto* isbreak = app.add_subcommand("is-break", "break-divisor predicate");
    isbreak->add_option("graph", c.graph_path)->required();
    isbreak->add_option("divisor", d1_path)->required();
    add_strategy(isbreak);

    auto* osb = app.add_subcommand("oracle-semibreak", "brute-force semibreak predicate");
    osb->add_option("graph", c.graph_path)->required();
    osb->add_option("divisor", d1_path)->required();

    auto* ome = app.add_subcommand("oracle-me", "brute-force max error profile");
    ome->add_option("graph", c.graph_path)->required();
    ome->add_option("divisor", d1_path)->required();
    ome->add_option("--out", c.out_path);

    auto* verify = app.add_subcommand("verify-cert", "replay a certificate and compare");
    verify->add_option("graph", c.graph_path)->required();
    verify->add_option("divisor", d1_path)->required();
    verify->add_option("target", target_path)->required();
    verify->add_option("certificate", cert_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        GraphPtr g = load_graph(c.graph_path);

        if (validate->parsed()) {
            Json j;
            j["genus"] = g->genus();
            j["vertices"] = g->n_vertices();
            j["edges"] = g->n_edges();
            j["branch_points"] = Json::array();
            for (auto& b : g->branch_ids()) j["branch_points"].push_back(b);
            emit(j, c.out_path);
            return kExitTrue;
        }
        if (semibreak->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            ReductionOptions opts{c.strat(), with_trace};
            ReductionResult res = semibreak_reduce(g, D, opts);
            emit(reduction_to_json(res, with_trace), c.out_path);
            if (!cert_path.empty())
                write_json_file(cert_path, certificate_to_json(res.certificate));
            return kExitTrue;
        }
        if (breakrep->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            emit(divisor_to_json(break_representative(g, D, c.strat())), c.out_path);
            return kExitTrue;
        }
        if (equiv->parsed()) {
            Divisor D1 = load_divisor(g, d1_path);
            Divisor D2 = load_divisor(g, d2_path);
            EquivalenceResult res = are_equivalent(g, D1, D2, c.strat());
            Json j;
            j["equivalent"] = res.equivalent;
            if (res.equivalent) j["break"] = divisor_to_json(res.common_break);
            emit(j, c.out_path);
            if (!cert_path.empty()) {
                Json jc;
                jc["lhs_cert"] = certificate_to_json(res.lhs_cert);
                jc["rhs_cert"] = certificate_to_json(res.rhs_cert);
                jc["break"] = divisor_to_json(res.common_break);
                write_json_file(cert_path, jc);
            }
            return res.equivalent ? kExitTrue : kExitFalse;
        }
        if (error_cmd->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            AdmissibleSet S = set_from_json(g, load_json_file(set_path));
            Json j;
            j["error"] = error_of_set(D, S);
            emit(j, c.out_path);
            return kExitTrue;
        }
        if (minmax->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            emit(profile_to_json(max_error_profile(g, D, c.strat())), c.out_path);
            return kExitTrue;
        }
        if (isbreak->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            bool b = is_break(g, D, c.strat());
            Json j;
            j["is_break"] = b;
            emit(j, c.out_path);
            return b ? kExitTrue : kExitFalse;
        }
        if (osb->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            bool b = oracle::is_semibreak_bruteforce(g, D);
            Json j;
            j["semibreak"] = b;
            emit(j, c.out_path);
            return b ? kExitTrue : kExitFalse;
        }
        if (ome->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            emit(profile_to_json(oracle::max_error_bruteforce(g, D)), c.out_path);
            return kExitTrue;
        }
        if (verify->parsed()) {
            Divisor D = load_divisor(g, d1_path);
            Divisor target = load_divisor(g, target_path);
            FiringCertificate cert = certificate_from_json(g, load_json_file(cert_path));
            Divisor replayed = apply_certificate(D, cert);
            bool ok = replayed == target;
            Json j;
            j["match"] = ok;
            j["replayed"] = divisor_to_json(replayed);
            emit(j, c.out_path);
            return ok ? kExitTrue : kExitFalse;
        }
    } catch (const mgdiv::error& e) {
        if (is_invariant_violation(e.code)) {
            std::cerr << "invariant violation: " << e.what() << "\n";
            return kExitInvariant;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    std::cerr << "error: no subcommand dispatched\n";
    return kExitInput;
}
