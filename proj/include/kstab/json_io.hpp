#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/graph.hpp"
#include "kstab/outerplane.hpp"

namespace kstab {

// On-disk graph record. Formats are documented byte-exactly in the README.
struct GraphRecord {
    Graph graph;
    std::optional<std::vector<int>> outer_order;
    std::optional<std::vector<Edge>> chords;
    std::string meta_json = "{}";  // free-form meta object, verbatim
};

std::string serialize_graph(const GraphRecord& rec);
GraphRecord parse_graph(const std::string& text);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

// Plain vertex-set file: {"set":[...]}; parse accepts a bare certificate too.
std::string serialize_vertex_set(const VertexSet& s);
VertexSet parse_vertex_set(const std::string& text);

std::string to_dot(const GraphRecord& rec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace kstab
