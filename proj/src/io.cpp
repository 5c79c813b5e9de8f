#include "ftc/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ftc/total.hpp"

namespace ftc {

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (!(ls >> b) || (ls >> extra))
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected exactly two vertex labels");
        for (const std::string& lab : {a, b})
            if (!index.count(lab)) {
                index[lab] = static_cast<int>(labels.size());
                labels.push_back(lab);
            }
        pairs.emplace_back(a, b);
    }
    if (pairs.empty()) throw std::runtime_error("no edges found in edge list");
    Graph g(labels);
    int n = 0;
    for (auto& [a, b] : pairs) {
        ++n;
        try {
            g.add_edge(index[a], index[b]);
        } catch (const std::invalid_argument& ex) {
            throw std::runtime_error("edge " + std::to_string(n) + " (" + a + " " + b +
                                     "): " + ex.what());
        }
    }
    return g;
}

Graph read_graph6_line(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) throw std::runtime_error("empty graph6 line");
    size_t pos = 0;
    long n;
    if (line[0] == '~') {
        if (line.size() >= 4 && line[1] == '~') {
            if (line.size() < 8) throw std::runtime_error("truncated graph6 header");
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | (line[static_cast<size_t>(i)] - 63);
            pos = 8;
        } else {
            if (line.size() < 4) throw std::runtime_error("truncated graph6 header");
            n = 0;
            for (int i = 1; i < 4; ++i) n = (n << 6) | (line[static_cast<size_t>(i)] - 63);
            pos = 4;
        }
    } else {
        n = line[0] - 63;
        pos = 1;
    }
    if (n < 0 || n > 1000) throw std::runtime_error("unreasonable graph6 vertex count");
    Graph g = Graph::from_edges(static_cast<int>(n), {});
    int bit = 0;
    long need = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> order;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) order.emplace_back(u, v);
    for (long i = 0; i < need; ++i) {
        size_t byte = pos + static_cast<size_t>(i / 6);
        if (byte >= line.size()) throw std::runtime_error("truncated graph6 payload");
        int c = line[byte] - 63;
        if (c < 0 || c > 63) throw std::runtime_error("bad graph6 character");
        bit = (c >> (5 - (i % 6))) & 1;
        if (bit) g.add_edge(order[static_cast<size_t>(i)].first, order[static_cast<size_t>(i)].second);
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("empty graph6 file: " + path);
        return read_graph6_line(line);
    }
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    return out.str();
}

// ----------------------------------------------------------------- JSON

using nlohmann::json;

json interval_set_to_json(const IntervalSet& s) {
    json arr = json::array();
    for (auto& iv : s.parts()) arr.push_back({rat_str(iv.lo), rat_str(iv.hi)});
    return arr;
}

IntervalSet interval_set_from_json(const json& j) {
    std::vector<Interval> ivs;
    for (auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::runtime_error("interval must be a [lo, hi] pair");
        ivs.push_back({parse_rat(pair[0].get<std::string>()), parse_rat(pair[1].get<std::string>())});
    }
    return IntervalSet(std::move(ivs));
}

json isometry_to_json(const PiecewiseIsometry& iso) {
    json j;
    j["ambient"] = rat_str(iso.ambient());
    json pieces = json::array();
    for (auto& p : iso.pieces())
        pieces.push_back({{"src", {rat_str(p.src.lo), rat_str(p.src.hi)}},
                          {"offset", rat_str(p.offset)}});
    j["pieces"] = pieces;
    return j;
}

PiecewiseIsometry isometry_from_json(const json& j) {
    std::vector<IsoPiece> pieces;
    for (auto& p : j.at("pieces"))
        pieces.push_back({{parse_rat(p.at("src")[0].get<std::string>()),
                           parse_rat(p.at("src")[1].get<std::string>())},
                          parse_rat(p.at("offset").get<std::string>())});
    return PiecewiseIsometry(parse_rat(j.at("ambient").get<std::string>()), std::move(pieces));
}

json weighted_coloring_to_json(const Graph& g, const WeightedColoring& w) {
    json j;
    j["total_mass"] = rat_str(w.mass());
    json sup = json::array();
    for (auto& [set, weight] : w.support()) {
        json names = json::array();
        for (ElemId x : set) names.push_back(elem_str(g, x));
        sup.push_back({{"set", names}, {"weight", rat_str(weight)}});
    }
    j["weights"] = sup;
    return j;
}

WeightedColoring weighted_coloring_from_json(const Graph& g, const json& j) {
    WeightedColoring w(g);
    for (auto& entry : j.at("weights")) {
        TotalIndependentSet set;
        for (auto& name : entry.at("set")) set.push_back(elem_parse(g, name.get<std::string>()));
        w.add(set, parse_rat(entry.at("weight").get<std::string>()));
    }
    return w;
}

json interval_coloring_to_json(const Graph& g, const IntervalColoring& c) {
    json j;
    j["ambient"] = rat_str(c.ambient);
    json colors;
    for (int x = 0; x < total_element_count(g); ++x)
        colors[elem_str(g, x)] = interval_set_to_json(c.color(x));
    j["colors"] = colors;
    return j;
}

IntervalColoring interval_coloring_from_json(const Graph& g, const json& j) {
    IntervalColoring c;
    c.ambient = parse_rat(j.at("ambient").get<std::string>());
    c.colors.assign(static_cast<size_t>(total_element_count(g)), IntervalSet());
    for (auto& [key, val] : j.at("colors").items())
        c.colors[static_cast<size_t>(elem_parse(g, key))] = interval_set_from_json(val);
    return c;
}

json certificate_to_json(const Graph& g, const LPCertificate& cert) {
    json j;
    switch (cert.status) {
        case LPStatus::optimal: j["status"] = "optimal"; break;
        case LPStatus::infeasible: j["status"] = "infeasible"; break;
        case LPStatus::unbounded: j["status"] = "unbounded"; break;
    }
    j["value"] = rat_str(cert.value);
    json dual;
    for (int x = 0; x < total_element_count(g) && x < static_cast<int>(cert.dual.size()); ++x)
        dual[elem_str(g, x)] = rat_str(cert.dual[static_cast<size_t>(x)]);
    j["dual"] = dual;
    return j;
}

json decomposition_to_json(const Graph& g, const Decomposition& d) {
    json j;
    json parts = json::array();
    for (auto& part : d.parts) {
        json edges = json::array();
        for (int e : part)
            edges.push_back(json::array({g.label(g.edge(e).u), g.label(g.edge(e).v)}));
        parts.push_back(edges);
    }
    j["parts"] = parts;
    if (d.matching_index) j["matching_index"] = *d.matching_index;
    return j;
}

Decomposition decomposition_from_json(const Graph& g, const json& j) {
    Decomposition d;
    for (auto& part : j.at("parts")) {
        std::vector<int> edges;
        for (auto& pair : part) {
            int u = -1, v = -1;
            std::string la = pair[0].get<std::string>(), lb = pair[1].get<std::string>();
            for (int w = 0; w < g.vertex_count(); ++w) {
                if (g.label(w) == la) u = w;
                if (g.label(w) == lb) v = w;
            }
            auto e = (u >= 0 && v >= 0) ? g.find_edge(u, v) : std::nullopt;
            if (!e) throw std::runtime_error("unknown edge " + la + "-" + lb);
            edges.push_back(*e);
        }
        d.parts.push_back(std::move(edges));
    }
    if (j.contains("matching_index")) d.matching_index = j["matching_index"].get<int>();
    return d;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ftc
