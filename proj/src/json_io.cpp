#include "mgdiv/json_io.hpp"

#include <fstream>

#include "mgdiv/errors.hpp"

namespace mgdiv {

namespace {

const Json& field(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), errc::malformed_input,
            std::string("missing field \"") + key + "\" in " + j.dump());
    return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_string(), errc::malformed_input,
            std::string("field \"") + key + "\" must be a string in " + j.dump());
    return v.get<std::string>();
}

Rat rat_field(const Json& j, const char* key) { return Rat::parse(str_field(j, key)); }

long long int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    require(v.is_number_integer(), errc::malformed_input,
            std::string("field \"") + key + "\" must be an integer in " + j.dump());
    return v.get<long long>();
}

} // namespace

Json graph_to_json(const MetricGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (auto& v : g.vertex_ids()) j["vertices"].push_back(v);
    j["edges"] = Json::array();
    for (auto& e : g.edge_recs()) {
        Json je;
        je["id"] = e.id;
        je["ends"] = Json::array({g.vertex_ids()[e.end0], g.vertex_ids()[e.end1]});
        je["length"] = e.length.str();
        j["edges"].push_back(std::move(je));
    }
    return j;
}

GraphPtr graph_from_json(const Json& j) {
    GraphDescription d;
    const Json& vs = field(j, "vertices");
    require(vs.is_array(), errc::malformed_input, "\"vertices\" must be an array");
    for (auto& v : vs) {
        require(v.is_string(), errc::malformed_input, "vertex ids must be strings");
        d.vertices.push_back(v.get<std::string>());
    }
    const Json& es = field(j, "edges");
    require(es.is_array(), errc::malformed_input, "\"edges\" must be an array");
    for (auto& e : es) {
        const Json& ends = field(e, "ends");
        require(ends.is_array() && ends.size() == 2 && ends[0].is_string() && ends[1].is_string(),
                errc::malformed_input, "edge \"ends\" must be two vertex ids");
        d.edges.push_back({str_field(e, "id"), ends[0].get<std::string>(),
                           ends[1].get<std::string>(), rat_field(e, "length")});
    }
    return build_graph(d);
}

Json point_to_json(const PointRef& p) {
    Json j;
    if (p.at_vertex) {
        j["vertex"] = p.id;
    } else {
        j["edge"] = p.id;
        j["offset"] = p.offset.str();
    }
    return j;
}

PointRef point_from_json(const MetricGraph& g, const Json& j) {
    require(j.is_object(), errc::malformed_input, "point must be an object: " + j.dump());
    if (j.contains("vertex")) {
        std::string id = str_field(j, "vertex");
        require(g.has_vertex(id), errc::point_off_graph, "unknown vertex \"" + id + "\"");
        return PointRef::vertex(id);
    }
    return normalize_point(g, str_field(j, "edge"), rat_field(j, "offset"));
}

Json divisor_to_json(const Divisor& D) {
    Json j = Json::array();
    for (auto& [p, c] : D.entries()) {
        Json je = point_to_json(p);
        je["coeff"] = c;
        j.push_back(std::move(je));
    }
    return j;
}

Divisor divisor_from_json(const MetricGraph& g, const Json& j) {
    require(j.is_array(), errc::malformed_input, "divisor must be an array of entries");
    Divisor D;
    for (auto& e : j) D.add(point_from_json(g, e), int_field(e, "coeff"));
    return D;
}

Json set_to_json(const AdmissibleSet& S) {
    const Model& m = S.model();
    Json j;
    j["model_points"] = Json::array();
    for (auto& p : m.interior_points()) j["model_points"].push_back(point_to_json(p));
    j["I"] = Json::array();
    for (auto& p : S.i_points()) {
        if (p.at_vertex)
            j["I"].push_back(p.id);
        else
            j["I"].push_back(point_to_json(p));
    }
    j["J"] = Json::array();
    for (int e = 0; e < m.n_edges(); ++e)
        if (S.in_J(e)) j["J"].push_back(m.sub_edge_id(e));
    j["spset"] = Json::array();
    for (auto& p : spanning_point_set(S)) j["spset"].push_back(point_to_json(p));
    return j;
}

AdmissibleSet set_from_json(const GraphPtr& g, const Json& j) {
    std::vector<PointRef> pts;
    for (auto& p : field(j, "model_points")) pts.push_back(point_from_json(*g, p));
    ModelPtr model = make_model(g, pts);
    std::vector<char> I(model->n_vertices(), 0), J(model->n_edges(), 0);
    for (auto& entry : field(j, "I")) {
        PointRef p = entry.is_string() ? PointRef::vertex(entry.get<std::string>())
                                       : point_from_json(*g, entry);
        auto v = model->find_vertex(p);
        require(v.has_value(), errc::malformed_set,
                "I entry " + p.str() + " is not a model vertex");
        I[*v] = 1;
    }
    for (auto& entry : field(j, "J")) {
        require(entry.is_string(), errc::malformed_input, "J entries must be sub-edge ids");
        J[model->sub_edge_by_id(entry.get<std::string>())] = 1;
    }
    return AdmissibleSet(std::move(model), std::move(I), std::move(J));
}

Json certificate_to_json(const FiringCertificate& cert) {
    Json j = Json::array();
    for (auto& step : cert.steps) {
        Json js;
        js["set"] = set_to_json(step.set);
        js["eps"] = step.eps.str();
        j.push_back(std::move(js));
    }
    return j;
}

FiringCertificate certificate_from_json(const GraphPtr& g, const Json& j) {
    require(j.is_array(), errc::malformed_input, "certificate must be an array of steps");
    FiringCertificate cert;
    for (auto& step : j) {
        Rat eps = rat_field(step, "eps");
        require(eps.is_positive(), errc::malformed_input, "certificate eps must be positive");
        cert.steps.push_back({set_from_json(g, field(step, "set")), std::move(eps)});
    }
    return cert;
}

Json profile_to_json(const ErrorProfile& prof) {
    Json j;
    j["max_error"] = prof.max_error;
    if (prof.minmax.is_empty())
        j["minmax"] = nullptr;
    else
        j["minmax"] = set_to_json(prof.minmax);
    j["is_break"] = prof.is_break_signal;
    return j;
}

Json reduction_to_json(const ReductionResult& res, bool with_trace) {
    Json j;
    j["semibreak"] = divisor_to_json(res.semibreak);
    j["break_divisor"] = divisor_to_json(res.break_divisor);
    j["certificate"] = certificate_to_json(res.certificate);
    j["iterations"] = res.iterations;
    j["updates"] = res.updates;
    if (with_trace) {
        j["trace"] = Json::array();
        for (auto& t : res.trace) {
            Json jt;
            jt["max_error"] = t.max_error;
            jt["minmax"] = t.minmax.is_empty() ? Json(nullptr) : set_to_json(t.minmax);
            jt["branch_points"] = t.branch_points;
            jt["case"] = t.case_tag;
            if (t.eps) jt["eps"] = t.eps->str();
            if (t.moved_from) jt["moved_from"] = point_to_json(*t.moved_from);
            if (t.moved_to) jt["moved_to"] = point_to_json(*t.moved_to);
            j["trace"].push_back(std::move(jt));
        }
    }
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::malformed_input, "cannot open \"" + path + "\"");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::malformed_input, "JSON parse error in \"" + path + "\": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    require(out.good(), errc::malformed_input, "cannot write \"" + path + "\"");
    out << j.dump(2) << "\n";
}

} // namespace mgdiv
