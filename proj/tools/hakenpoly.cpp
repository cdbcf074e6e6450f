#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "haken/andreev.hpp"
#include "haken/canonical.hpp"
#include "haken/certify.hpp"
#include "haken/decomposition.hpp"
#include "haken/io.hpp"
#include "haken/shapes.hpp"
#include "haken/volume.hpp"

namespace {

using haken::Rational;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitParse = 3;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

ordered_json violations_json(const haken::AndreevReport& rep) {
    ordered_json conds = ordered_json::array();
    for (int c = 1; c <= 7; ++c) {
        ordered_json jc;
        jc["condition"] = c;
        jc["violations"] = ordered_json::array();
        for (const auto& v : rep.condition(c)) {
            ordered_json jv;
            jv["detail"] = v.detail;
            if (!v.vertices.empty()) jv["vertices"] = v.vertices;
            if (!v.edges.empty()) jv["edges"] = v.edges;
            if (!v.faces.empty()) jv["faces"] = v.faces;
            jv["sum_over_pi"] = v.sum.str();
            jc["violations"].push_back(jv);
        }
        conds.push_back(jc);
    }
    return conds;
}

ordered_json circuits_json(const haken::Polyhedron& p, const std::vector<haken::PrismaticCircuit>& cs) {
    ordered_json out = ordered_json::array();
    for (const auto& c : cs) {
        ordered_json jc;
        jc["faces"] = c.faces;
        ordered_json edges = ordered_json::array();
        for (int e : c.edges) edges.push_back({p.edge(e).first, p.edge(e).second});
        jc["edges"] = edges;
        out.push_back(jc);
    }
    return out;
}

ordered_json bound_json(const haken::VolumeBound& b) {
    ordered_json j;
    j["name"] = b.kind_name();
    ordered_json inputs;
    switch (b.kind) {
        case haken::VolumeBound::Kind::VertexCount:
            inputs["n3"] = b.n3;
            inputs["n4"] = b.n4;
            break;
        case haken::VolumeBound::Kind::MiyamotoBoundary:
            inputs["k"] = b.k;
            inputs["x"] = b.x.str();
            break;
        case haken::VolumeBound::Kind::GraphTypeQuads:
            inputs["m"] = {b.m1, b.m2, b.m3, b.m4};
            inputs["l"] = b.l;
            break;
    }
    j["inputs"] = inputs;
    j["value"] = fixed6(b.value);
    j["strict"] = b.strict;
    if (b.clamped) j["clamped"] = true;
    return j;
}

void print_bound(const haken::VolumeBound& b) {
    std::string inputs;
    switch (b.kind) {
        case haken::VolumeBound::Kind::VertexCount:
            inputs = "N3=" + std::to_string(b.n3) + ", N4=" + std::to_string(b.n4);
            break;
        case haken::VolumeBound::Kind::MiyamotoBoundary:
            inputs = "k=" + std::to_string(b.k) + ", x=" + b.x.str();
            break;
        case haken::VolumeBound::Kind::GraphTypeQuads:
            inputs = "m=(" + std::to_string(b.m1) + "," + std::to_string(b.m2) + "," +
                     std::to_string(b.m3) + "," + std::to_string(b.m4) + "), l=" + fixed6(b.l);
            break;
    }
    std::cout << b.kind_name() << " (" << inputs << "): " << fixed6(b.value)
              << (b.strict ? "  [strict lower bound]" : "  [lower bound]")
              << (b.clamped ? "  [clamped to 0]" : "") << "\n";
}

ordered_json analyze_json(const haken::LabeledPolyhedron& lp) {
    const haken::Polyhedron& p = lp.base;
    ordered_json out;
    out["polyhedron"] = haken::polyhedron_to_json(lp);
    haken::DegreeCensus census = haken::degree_census(p);
    out["structure"] = {{"vertices", p.vertex_count()},
                        {"edges", p.edge_count()},
                        {"faces", p.face_count()},
                        {"n3", census.n3},
                        {"n4", census.n4},
                        {"higher_degree", census.higher}};

    haken::AndreevReport rep = haken::check_andreev(lp);
    ordered_json ja;
    ja["realizable"] = rep.realizable;
    ja["too_few_vertices"] = rep.too_few_vertices;
    ja["violations"] = violations_json(rep);
    ja["ideal_vertices"] = rep.ideal_vertices;
    ja["finite_vertices"] = rep.finite_vertices;
    out["andreev"] = ja;

    out["prismatic_circuits"] = {{"k3", circuits_json(p, rep.circuits3)},
                                 {"k4", circuits_json(p, rep.circuits4)}};

    ordered_json jd;
    try {
        haken::ClassificationReport cls = haken::classify(lp);
        jd["cuts"] = cls.decomposition.cut_circuits.size();
        jd["turnovers"] = cls.decomposition.turnover_types;
        jd["components"] = ordered_json::array();
        for (size_t i = 0; i < cls.components.size(); ++i) {
            const auto& comp = cls.decomposition.components[i];
            ordered_json jc;
            jc["vertices"] = comp.base.vertex_count();
            jc["faces"] = comp.base.face_count();
            jc["verdict"] = cls.components[i].verdict == haken::Verdict::Small ? "small" : "haken";
            if (cls.components[i].witness)
                jc["truncation_faces"] = cls.components[i].witness->truncation_faces;
            jd["components"].push_back(jc);
        }
        switch (cls.overall) {
            case haken::ClassificationReport::Overall::Small: jd["overall"] = "small"; break;
            case haken::ClassificationReport::Overall::Haken: jd["overall"] = "haken"; break;
            case haken::ClassificationReport::Overall::Decomposed: jd["overall"] = "decomposed"; break;
        }
    } catch (const haken::CrossingCircuitsError& ex) {
        jd["crossing_circuits"] = ex.what();
    }
    out["decomposition"] = jd;

    auto n = haken::is_prism(p);
    out["prism"] = n ? ordered_json(*n) : ordered_json(nullptr);

    ordered_json jt;
    if (n) {
        jt["applicable"] = false;
        jt["reason"] = "polyhedron is a prism";
    } else if (auto tree = haken::prism_tree(p)) {
        jt["applicable"] = true;
        ordered_json sizes = ordered_json::array();
        for (const auto& node : tree->nodes) sizes.push_back(node.prism_size);
        jt["prism_sizes"] = sizes;
        jt["leaf_count"] = tree->leaf_count;
        jt["ambiguous_cuts"] = tree->ambiguous_cuts;
    } else {
        jt["applicable"] = false;
        jt["reason"] = "does not decompose into prisms of size >= 5 along prismatic 4-circuits";
    }
    out["prism_tree"] = jt;
    return out;
}

void print_analysis(const ordered_json& a) {
    const auto& s = a["structure"];
    std::cout << "vertices " << s["vertices"] << ", edges " << s["edges"] << ", faces " << s["faces"]
              << " (N3=" << s["n3"] << ", N4=" << s["n4"] << ", higher=" << s["higher_degree"] << ")\n";
    const auto& ja = a["andreev"];
    std::cout << "realizable: " << (ja["realizable"].get<bool>() ? "yes" : "no");
    if (ja["too_few_vertices"].get<bool>())
        std::cout << "  (4 or fewer vertices: outside the scope of the realizability criterion)";
    std::cout << "\n";
    int total = 0;
    for (const auto& jc : ja["violations"]) {
        for (const auto& v : jc["violations"]) {
            std::cout << "  condition " << jc["condition"] << ": " << v["detail"].get<std::string>() << "\n";
            ++total;
        }
    }
    std::cout << "ideal vertices: " << ja["ideal_vertices"].dump() << "\n";
    std::cout << "prismatic 3-circuits: " << a["prismatic_circuits"]["k3"].size()
              << ", 4-circuits: " << a["prismatic_circuits"]["k4"].size() << "\n";
    const auto& jd = a["decomposition"];
    if (jd.contains("crossing_circuits")) {
        std::cout << "decomposition: crossing circuits reported: "
                  << jd["crossing_circuits"].get<std::string>() << "\n";
    } else {
        std::cout << "decomposition: " << jd["cuts"] << " cut(s), " << jd["components"].size()
                  << " component(s), overall " << jd["overall"].get<std::string>() << "\n";
        for (const auto& jc : jd["components"])
            std::cout << "  component: V=" << jc["vertices"] << " F=" << jc["faces"] << " -> "
                      << jc["verdict"].get<std::string>() << "\n";
    }
    if (!a["prism"].is_null()) std::cout << "prism: n = " << a["prism"] << "\n";
    const auto& jt = a["prism_tree"];
    if (jt["applicable"].get<bool>())
        std::cout << "prism tree: sizes " << jt["prism_sizes"].dump() << ", leaves " << jt["leaf_count"]
                  << "\n";
}

int run_certificate(const haken::Certificate& cert, bool json) {
    if (json) {
        std::cout << cert.to_json().dump(2) << "\n";
    } else {
        std::cout << "certificate: " << cert.name << "\n";
        for (const auto& s : cert.steps)
            std::cout << "  [" << (s.passed ? "pass" : "FAIL") << "] " << s.id << ": " << s.claim << "\n";
        std::cout << "overall: " << (cert.passed() ? "pass" : "FAIL") << "\n";
    }
    return cert.validate() ? kExitOk : kExitInvalid;
}

haken::Certificate cubes_certificate() {
    haken::Certificate cert;
    cert.name = "minimal-cube-classes";
    auto classes = haken::enumerate_min_cubes();
    int orbit_total = 0;
    bool all_realizable = true;
    for (const auto& c : classes) {
        orbit_total += c.orbit_size;
        if (!haken::check_andreev(c.cube).realizable) all_realizable = false;
    }
    ordered_json listing = ordered_json::array();
    for (const auto& c : classes) {
        ordered_json jc;
        jc["orbit_size"] = c.orbit_size;
        jc["lambert_pattern"] = c.lambert_pattern;
        jc["sharp_edges"] = c.sharp_edges;
        listing.push_back(jc);
    }
    cert.steps.push_back({"cube-classes",
                          "the 64 one-sharp-edge-per-circuit labelings of the cube form exactly 4 classes, "
                          "all realizable, exactly one with the Lambert pattern",
                          classes.size() == 4 && orbit_total == 64 && all_realizable,
                          {{"classes", listing}, {"orbit_total", orbit_total}}});
    return cert;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of non-obtuse labeled abstract polyhedra: realizability, decomposition, "
                 "volume bounds and case-analysis certificates"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "structural validation of a polyhedron file");
    validate->add_option("file", path)->required();

    auto* analyze = app.add_subcommand("analyze", "realizability, circuits, decomposition, classification");
    analyze->add_option("file", path)->required();
    analyze->add_flag("--json", as_json);

    auto* bounds = app.add_subcommand("bounds", "volume lower bounds");
    std::string bounds_file, x_str;
    int n3 = -1, n4 = -1, k = -1, m1 = -1, m2 = -1, m3 = -1, m4 = -1;
    double l = 0.0;
    bounds->add_option("file", bounds_file);
    bounds->add_option("--n3", n3);
    bounds->add_option("--n4", n4);
    bounds->add_option("--k", k);
    bounds->add_option("--x", x_str);
    bounds->add_option("--m1", m1);
    bounds->add_option("--m2", m2);
    bounds->add_option("--m3", m3);
    bounds->add_option("--m4", m4);
    bounds->add_option("--l", l);
    bounds->add_flag("--json", as_json);

    auto* certify = app.add_subcommand("certify", "machine-checkable case-analysis certificates");
    bool c_lemma = false, c_cubes = false, c_graph = false, c_all = false;
    certify->add_flag("--lemma-4-2", c_lemma);
    certify->add_flag("--cubes", c_cubes);
    certify->add_flag("--graph-type", c_graph);
    certify->add_flag("--all", c_all);
    certify->add_flag("--json", as_json);

    auto* enumcubes = app.add_subcommand("enumerate-cubes", "the four minimal cube labeling classes");
    enumcubes->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            try {
                haken::LabeledPolyhedron lp = haken::load_polyhedron_file(path);
                std::cout << "valid: " << lp.base.vertex_count() << " vertices, " << lp.base.edge_count()
                          << " edges, " << lp.base.face_count() << " faces\n";
                return kExitOk;
            } catch (const haken::ParseError& ex) {
                std::cerr << "parse error: " << ex.what() << "\n";
                return kExitParse;
            } catch (const haken::InvalidPolyhedron& ex) {
                std::cerr << "invalid polyhedron: " << ex.what() << "\n";
                return kExitInvalid;
            }
        }

        if (analyze->parsed()) {
            try {
                haken::LabeledPolyhedron lp = haken::load_polyhedron_file(path);
                ordered_json a = analyze_json(lp);
                if (as_json)
                    std::cout << a.dump(2) << "\n";
                else
                    print_analysis(a);
                return kExitOk;
            } catch (const haken::ParseError& ex) {
                std::cerr << "parse error: " << ex.what() << "\n";
                return kExitParse;
            } catch (const haken::InvalidPolyhedron& ex) {
                std::cerr << "invalid polyhedron: " << ex.what() << "\n";
                return kExitInvalid;
            }
        }

        if (bounds->parsed()) {
            bool group_file = !bounds_file.empty();
            bool group_census = n3 >= 0 || n4 >= 0;
            bool group_orbifold = k >= 0 || !x_str.empty();
            bool group_quads = m1 >= 0 || m2 >= 0 || m3 >= 0 || m4 >= 0;
            if (group_file + group_census + group_orbifold + group_quads != 1) {
                std::cerr << "flag conflict: use exactly one of file | --n3/--n4 | --k/--x | --m1..--m4\n";
                return kExitInvalid;
            }
            std::vector<haken::VolumeBound> out;
            ordered_json notes = ordered_json::array();
            if (group_census) {
                out.push_back(haken::vertex_count_bound(std::max(n3, 0), std::max(n4, 0)));
            } else if (group_orbifold) {
                if (k < 1 || x_str.empty()) {
                    std::cerr << "flag conflict: --k and --x must be given together\n";
                    return kExitInvalid;
                }
                out.push_back(haken::miyamoto_bound(k, parse_rational(x_str)));
            } else if (group_quads) {
                haken::VolumeBound b = haken::graph_type_bound(std::max(m1, 0), std::max(m2, 0),
                                                               std::max(m3, 0), std::max(m4, 0), l);
                out.push_back(b);
                if (std::max(m1, 0) == 2 && std::max(m2, 0) + std::max(m3, 0) + std::max(m4, 0) == 0 &&
                    b.value <= 0.324423) {
                    notes.push_back("census (m1 = 2) is below the Lambert cube volume 0.324423; "
                                    "the orbifold boundary bound with k = 3, x = 1/6 gives " +
                                    fixed6(haken::miyamoto_bound(3, Rational(1, 6)).value));
                }
            } else {
                try {
                    haken::LabeledPolyhedron lp = haken::load_polyhedron_file(bounds_file);
                    haken::DegreeCensus c = haken::degree_census(lp.base);
                    if (haken::find_prismatic_circuits(lp.base, 4).empty() && c.higher == 0)
                        out.push_back(haken::vertex_count_bound(c.n3, c.n4));
                    else
                        notes.push_back("vertex-count bound skipped: prismatic 4-circuits present");
                    if (!haken::is_prism(lp.base)) {
                        if (auto tree = haken::prism_tree(lp.base)) {
                            try {
                                haken::QuadCounts q = haken::count_free_quads(*tree, lp);
                                out.push_back(haken::graph_type_bound(q.m1, q.m2, q.m3, q.m4, 0.0));
                            } catch (const std::exception& ex) {
                                notes.push_back(std::string("graph-type bound skipped: ") + ex.what());
                            }
                        }
                    }
                } catch (const haken::ParseError& ex) {
                    std::cerr << "parse error: " << ex.what() << "\n";
                    return kExitParse;
                } catch (const haken::InvalidPolyhedron& ex) {
                    std::cerr << "invalid polyhedron: " << ex.what() << "\n";
                    return kExitInvalid;
                }
            }
            if (as_json) {
                ordered_json j;
                j["bounds"] = ordered_json::array();
                for (const auto& b : out) j["bounds"].push_back(bound_json(b));
                if (!notes.empty()) j["notes"] = notes;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& b : out) print_bound(b);
                for (const auto& n : notes) std::cout << "note: " << n.get<std::string>() << "\n";
            }
            return kExitOk;
        }

        if (certify->parsed()) {
            if (c_lemma + c_cubes + c_graph + c_all != 1) {
                std::cerr << "choose exactly one of --lemma-4-2, --cubes, --graph-type, --all\n";
                return kExitInvalid;
            }
            if (c_lemma) return run_certificate(haken::lemma_4_2_trace(), as_json);
            if (c_cubes) return run_certificate(cubes_certificate(), as_json);
            if (c_graph) return run_certificate(haken::graph_type_case_table(), as_json);
            return run_certificate(haken::theorem_1_1_report(), as_json);
        }

        if (enumcubes->parsed()) {
            auto classes = haken::enumerate_min_cubes();
            if (as_json) {
                ordered_json j = ordered_json::array();
                for (const auto& c : classes) {
                    ordered_json jc;
                    jc["polyhedron"] = haken::polyhedron_to_json(c.cube);
                    jc["orbit_size"] = c.orbit_size;
                    jc["lambert_pattern"] = c.lambert_pattern;
                    j.push_back(jc);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (size_t i = 0; i < classes.size(); ++i) {
                    std::cout << "class " << i + 1 << ": orbit size " << classes[i].orbit_size
                              << (classes[i].lambert_pattern ? " (Lambert pattern)" : "") << ", pi/3 edges";
                    for (auto [u, v] : classes[i].sharp_edges) std::cout << " {" << u << "," << v << "}";
                    std::cout << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
