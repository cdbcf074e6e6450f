#include "haken/io.hpp"

#include <fstream>

namespace haken {

LabeledPolyhedron parse_polyhedron_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("faces") || !j["faces"].is_array())
        throw ParseError("expected an object with a \"faces\" array");
    if (j.contains("format") && (!j["format"].is_number_integer() || j["format"].get<int>() != 1))
        throw ParseError("unsupported format version");

    std::vector<std::vector<int>> faces;
    for (const auto& jf : j["faces"]) {
        if (!jf.is_array() || jf.size() < 3) throw ParseError("each face needs at least 3 vertices");
        std::vector<int> f;
        for (const auto& v : jf) {
            if (!v.is_number_integer() || v.get<int>() < 0)
                throw ParseError("face entries must be non-negative vertex indices");
            f.push_back(v.get<int>());
        }
        faces.push_back(std::move(f));
    }

    Polyhedron p = Polyhedron::build_from_faces(faces);
    std::vector<Angle> labels(p.edge_count(), Angle::right());
    if (j.contains("angles")) {
        if (!j["angles"].is_array()) throw ParseError("\"angles\" must be an array");
        for (const auto& ja : j["angles"]) {
            if (!ja.is_object() || !ja.contains("edge") || !ja["edge"].is_array() || ja["edge"].size() != 2)
                throw ParseError("each angle needs an \"edge\": [u, v]");
            int u = ja["edge"][0].get<int>(), v = ja["edge"][1].get<int>();
            int e = (u >= 0 && u < p.vertex_count() && v >= 0 && v < p.vertex_count()) ? p.edge_index(u, v) : -1;
            if (e < 0)
                throw ParseError("angle refers to a non-edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
            try {
                if (ja.contains("pi_over"))
                    labels[e] = Angle::pi_over(ja["pi_over"].get<std::int64_t>());
                else if (ja.contains("num") && ja.contains("den"))
                    labels[e] = Angle(ja["num"].get<std::int64_t>(), ja["den"].get<std::int64_t>());
                else
                    throw ParseError("angle needs \"pi_over\" or \"num\"/\"den\"");
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what());
            }
        }
    }
    return LabeledPolyhedron(std::move(p), std::move(labels));
}

LabeledPolyhedron load_polyhedron_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    return parse_polyhedron_json(j);
}

nlohmann::ordered_json polyhedron_to_json(const LabeledPolyhedron& lp) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["faces"] = lp.base.faces();
    j["angles"] = nlohmann::ordered_json::array();
    for (int e = 0; e < lp.base.edge_count(); ++e) {
        const Angle& a = lp.labels[e];
        if (a == Angle::right()) continue;
        nlohmann::ordered_json ja;
        ja["edge"] = {lp.base.edge(e).first, lp.base.edge(e).second};
        if (a.num == 1)
            ja["pi_over"] = a.den;
        else {
            ja["num"] = a.num;
            ja["den"] = a.den;
        }
        j["angles"].push_back(std::move(ja));
    }
    return j;
}

}  // namespace haken
