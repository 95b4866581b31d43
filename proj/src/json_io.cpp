#include "kstab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kstab {

using nlohmann::json;

std::string serialize_graph(const GraphRecord& rec) {
    json j;
    j["n"] = rec.graph.n();
    json edges = json::array();
    for (auto [u, v] : rec.graph.edge_list()) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    j["meta"] = json::parse(rec.meta_json);
    if (rec.outer_order) j["outer_order"] = *rec.outer_order;
    if (rec.chords) {
        json cs = json::array();
        for (auto [a, b] : *rec.chords) cs.push_back(json::array({a, b}));
        j["chords"] = cs;
    }
    return j.dump(2) + "\n";
}

GraphRecord parse_graph(const std::string& text) {
    json j = json::parse(text);
    GraphRecord rec;
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    rec.graph = Graph::from_edges(n, edges);
    if (j.contains("meta")) rec.meta_json = j["meta"].dump();
    if (j.contains("outer_order")) rec.outer_order = j["outer_order"].get<std::vector<int>>();
    if (j.contains("chords")) {
        std::vector<Edge> cs;
        for (const auto& c : j["chords"]) cs.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
        rec.chords = cs;
    }
    return rec;
}

std::string serialize_certificate(const Certificate& cert) {
    json j;
    j["k"] = cert.k;
    j["algorithm"] = algorithm_name(cert.algorithm);
    j["set"] = cert.set.ids();
    j["guaranteed_size"] = cert.guaranteed_size.str();
    j["achieved_size"] = cert.achieved_size;
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
    json j = json::parse(text);
    Certificate c;
    c.k = j.at("k").get<int>();
    c.algorithm = algorithm_from_name(j.at("algorithm").get<std::string>());
    c.set = VertexSet(j.at("set").get<std::vector<int>>());
    c.guaranteed_size = Rational::from_string(j.at("guaranteed_size").get<std::string>());
    c.achieved_size = j.at("achieved_size").get<int>();
    return c;
}

std::string serialize_vertex_set(const VertexSet& s) {
    json j;
    j["set"] = s.ids();
    return j.dump(2) + "\n";
}

VertexSet parse_vertex_set(const std::string& text) {
    json j = json::parse(text);
    return VertexSet(j.at("set").get<std::vector<int>>());
}

std::string to_dot(const GraphRecord& rec) {
    std::ostringstream out;
    out << "graph G {\n";
    if (rec.outer_order) {
        out << "  // outer order:";
        for (int v : *rec.outer_order) out << " " << v;
        out << "\n";
    }
    for (int v = 0; v < rec.graph.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : rec.graph.edge_list()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace kstab
