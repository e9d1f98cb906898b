// graph.hpp
// ---------
// Finite graphs with legs: vertices, compact edges (two distinct endpoints)
// and legs (one endpoint). Flags (vertex, edge) are derived from the edge
// endpoint lists rather than stored. Vertices and edges are iterated in
// sorted-id order everywhere, so reports and serialization are reproducible.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gkm {

struct Edge {
    std::string id;
    std::vector<std::string> ends; // size 1 (leg) or 2 (compact)

    bool is_leg() const { return ends.size() == 1; }
    bool is_compact() const { return ends.size() == 2; }

    // the endpoint across from p; only meaningful for compact edges
    const std::string& other_end(const std::string& p) const {
        return ends[0] == p ? ends[1] : ends[0];
    }
};

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string code, std::string message) {
        violations.push_back({std::move(code), std::move(message)});
    }
    std::string summary() const;
};

enum class StarFilter { all, legs, compact };

class Graph {
public:
    Graph() = default;

    // sorts and indexes; rejects duplicate ids and empty/`|`-bearing ids,
    // which the flag-key syntax cannot represent
    static Graph make(std::vector<std::string> vertices, std::vector<Edge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& v) const { return vertex_index_.count(v) > 0; }
    bool has_edge(const std::string& e) const { return edge_index_.count(e) > 0; }
    const Edge& edge(const std::string& id) const;

    // edge ids incident to p, sorted
    std::vector<std::string> star(const std::string& p, StarFilter filter = StarFilter::all) const;

    // all flags (vertex, edge), sorted by vertex then edge id
    std::vector<std::pair<std::string, std::string>> flags() const;

    size_t leg_count() const;
    size_t compact_edge_count() const;

    bool is_compact() const { return leg_count() == 0; }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> vertices_;               // sorted
    std::vector<Edge> edges_;                          // sorted by id
    std::map<std::string, size_t> vertex_index_;
    std::map<std::string, size_t> edge_index_;
    std::map<std::string, std::vector<std::string>> stars_; // vertex -> sorted edge ids
};

// Every violated clause of the graph definition; empty report iff valid.
ValidationReport validate_graph(const Graph& g);

bool is_regular(const Graph& g, size_t m);

// A graph morphism: vertices map to vertices, edges map to edges or collapse
// to vertices. Flag images are derived.
struct MorphismTarget {
    enum class Kind { vertex, edge } kind;
    std::string id;

    static MorphismTarget to_vertex(std::string v) { return {Kind::vertex, std::move(v)}; }
    static MorphismTarget to_edge(std::string e) { return {Kind::edge, std::move(e)}; }
    bool is_vertex() const { return kind == Kind::vertex; }
    bool is_edge() const { return kind == Kind::edge; }

    friend bool operator==(const MorphismTarget& a, const MorphismTarget& b) {
        return a.kind == b.kind && a.id == b.id;
    }
};

struct GraphMorphism {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, MorphismTarget> edge_map;

    static GraphMorphism identity(const Graph& g);

    const std::string& vertex_image(const std::string& v) const;
    const MorphismTarget& edge_image(const std::string& e) const;
};

struct SubgraphImage {
    std::set<std::string> vertices;
    std::set<std::string> edges;
    std::set<std::pair<std::string, std::string>> flags;
};

struct MorphismReport {
    ValidationReport report;
    SubgraphImage image;

    bool ok() const { return report.ok(); }
};

MorphismReport validate_morphism(const Graph& src, const Graph& dst, const GraphMorphism& f);

// g after f, both assumed valid; throws on undefined composites
GraphMorphism compose(const Graph& a, const GraphMorphism& f, const GraphMorphism& g);

bool morphism_equal(const GraphMorphism& a, const GraphMorphism& b);

} // namespace gkm
