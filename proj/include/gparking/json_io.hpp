#ifndef GPARKING_JSON_IO_HPP
#define GPARKING_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gparking/bivariate_polynomial.hpp"
#include "gparking/multigraph.hpp"
#include "gparking/tree_bijection.hpp"

namespace gparking {

// Graph interchange format:
//   {"vertices": n+1, "edges": [[u,v], ...]}
// with multiplicity by repetition and loops as [u,u]; vertex 0 is the root.
inline Multigraph multigraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON must be an object with \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer() || j["vertices"].get<int>() <= 0)
        throw std::invalid_argument("graph JSON: \"vertices\" must be a positive integer");
    Multigraph g(j["vertices"].get<int>());
    if (!j["edges"].is_array()) throw std::invalid_argument("graph JSON: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("graph JSON: each edge must be a pair of vertex indices");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

inline Multigraph load_multigraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    nlohmann::json j;
    in >> j;  // nlohmann throws json::parse_error on malformed input
    return multigraph_from_json(j);
}

inline nlohmann::json multigraph_to_json(const Multigraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i; j < g.vertex_count(); ++j)
            for (int k = 0; k < g.multiplicity(i, j); ++k) edges.push_back({i, j});
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

// Trees travel as arrays of [vertex, parent, color] triples sorted by vertex.
inline nlohmann::json tree_to_json(const ColoredSpanningTree& t) {
    nlohmann::json out = nlohmann::json::array();
    for (size_t v = 1; v < t.parent.size(); ++v)
        out.push_back({v, t.parent[v], t.color[v]});
    return out;
}

inline ColoredSpanningTree tree_from_json(const nlohmann::json& j, int vertex_count) {
    if (!j.is_array()) throw std::invalid_argument("tree JSON must be an array of triples");
    ColoredSpanningTree t;
    t.parent.assign(vertex_count, -1);
    t.color.assign(vertex_count, -1);
    int seen = 0;
    for (const auto& triple : j) {
        if (!triple.is_array() || triple.size() != 3)
            throw std::invalid_argument("tree JSON: each entry must be [vertex, parent, color]");
        const int v = triple[0].get<int>();
        if (v < 1 || v >= vertex_count)
            throw std::invalid_argument("tree JSON: vertex out of range");
        if (t.parent[v] != -1) throw std::invalid_argument("tree JSON: duplicate vertex");
        t.parent[v] = triple[1].get<int>();
        t.color[v] = triple[2].get<int>();
        ++seen;
    }
    if (seen != vertex_count - 1)
        throw std::invalid_argument("tree JSON: expected one triple per non-root vertex");
    return t;
}

// Polynomial JSON: {"terms":[{"x":a,"y":b,"c":coef}, ...]} in print order.
inline nlohmann::json polynomial_to_json(const BivariatePolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({{"x", key.first}, {"y", key.second}, {"c", c}});
    return {{"terms", terms}};
}

}  // namespace gparking

#endif  // GPARKING_JSON_IO_HPP
