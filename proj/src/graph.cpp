#include "gkm/graph.hpp"
#include "gkm/error.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << v.code << ": " << v.message << "\n";
    return os.str();
}

namespace {

void check_id(const std::string& id, const char* what) {
    if (id.empty()) throw ParseError(std::string(what) + " id is empty");
    if (id.find('|') != std::string::npos)
        throw ParseError(std::string(what) + " id contains '|': " + id);
}

} // namespace

Graph Graph::make(std::vector<std::string> vertices, std::vector<Edge> edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i] == vertices[i - 1])
            throw ParseError("duplicate vertex id: " + vertices[i]);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].id == edges[i - 1].id)
            throw ParseError("duplicate edge id: " + edges[i].id);
    }
    for (const auto& v : vertices) check_id(v, "vertex");
    for (const auto& e : edges) {
        check_id(e.id, "edge");
        if (e.ends.empty() || e.ends.size() > 2)
            throw ParseError("edge " + e.id + " must have 1 or 2 endpoints");
    }
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    for (size_t i = 0; i < g.vertices_.size(); ++i) g.vertex_index_[g.vertices_[i]] = i;
    for (size_t i = 0; i < g.edges_.size(); ++i) g.edge_index_[g.edges_[i].id] = i;
    for (const auto& v : g.vertices_) g.stars_[v] = {};
    for (const auto& e : g.edges_) {
        for (const auto& end : e.ends) {
            auto it = g.stars_.find(end);
            if (it != g.stars_.end()) it->second.push_back(e.id);
        }
    }
    for (auto& [v, star] : g.stars_) std::sort(star.begin(), star.end());
    return g;
}

const Edge& Graph::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw DomainError(errc::unknown_edge, "no edge " + id);
    return edges_[it->second];
}

std::vector<std::string> Graph::star(const std::string& p, StarFilter filter) const {
    auto it = stars_.find(p);
    if (it == stars_.end()) throw DomainError(errc::unknown_vertex, "no vertex " + p);
    if (filter == StarFilter::all) return it->second;
    std::vector<std::string> out;
    for (const auto& id : it->second) {
        bool leg = edge(id).is_leg();
        if ((filter == StarFilter::legs) == leg) out.push_back(id);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> Graph::flags() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : vertices_) {
        for (const auto& e : stars_.at(v)) out.emplace_back(v, e);
    }
    return out;
}

size_t Graph::leg_count() const {
    size_t n = 0;
    for (const auto& e : edges_) n += e.is_leg() ? 1 : 0;
    return n;
}

size_t Graph::compact_edge_count() const {
    return edges_.size() - leg_count();
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
        const Edge& x = a.edges_[i];
        const Edge& y = b.edges_[i];
        if (x.id != y.id) return false;
        // endpoint order is not meaningful
        std::vector<std::string> xe = x.ends, ye = y.ends;
        std::sort(xe.begin(), xe.end());
        std::sort(ye.begin(), ye.end());
        if (xe != ye) return false;
    }
    return true;
}

ValidationReport validate_graph(const Graph& g) {
    ValidationReport r;
    if (g.vertices().empty()) r.add(errc::invalid_graph, "vertex set is empty");
    for (const auto& e : g.edges()) {
        for (const auto& end : e.ends) {
            if (!g.has_vertex(end))
                r.add(errc::invalid_graph, "edge " + e.id + " ends at unknown vertex " + end);
        }
        if (e.is_compact() && e.ends[0] == e.ends[1])
            r.add(errc::invalid_graph,
                  "compact edge " + e.id + " must have two distinct vertices, both are " + e.ends[0]);
    }
    if (!g.edges().empty()) {
        for (const auto& v : g.vertices()) {
            if (g.star(v).empty())
                r.add(errc::invalid_graph, "vertex " + v + " carries no flag while edges exist");
        }
    }
    return r;
}

bool is_regular(const Graph& g, size_t m) {
    for (const auto& v : g.vertices()) {
        if (g.star(v).size() != m) return false;
    }
    return true;
}

GraphMorphism GraphMorphism::identity(const Graph& g) {
    GraphMorphism f;
    for (const auto& v : g.vertices()) f.vertex_map[v] = v;
    for (const auto& e : g.edges()) f.edge_map.emplace(e.id, MorphismTarget::to_edge(e.id));
    return f;
}

const std::string& GraphMorphism::vertex_image(const std::string& v) const {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw DomainError(errc::invalid_morphism, "no image for vertex " + v);
    return it->second;
}

const MorphismTarget& GraphMorphism::edge_image(const std::string& e) const {
    auto it = edge_map.find(e);
    if (it == edge_map.end()) throw DomainError(errc::invalid_morphism, "no image for edge " + e);
    return it->second;
}

MorphismReport validate_morphism(const Graph& src, const Graph& dst, const GraphMorphism& f) {
    MorphismReport out;
    ValidationReport& r = out.report;

    for (const auto& v : src.vertices()) {
        auto it = f.vertex_map.find(v);
        if (it == f.vertex_map.end()) {
            r.add(errc::invalid_morphism, "vertex " + v + " has no image");
            continue;
        }
        if (!dst.has_vertex(it->second)) {
            r.add(errc::invalid_morphism, "vertex " + v + " maps to unknown vertex " + it->second);
            continue;
        }
        out.image.vertices.insert(it->second);
    }
    for (const auto& e : src.edges()) {
        auto it = f.edge_map.find(e.id);
        if (it == f.edge_map.end()) {
            r.add(errc::invalid_morphism, "edge " + e.id + " has no image");
            continue;
        }
        const MorphismTarget& t = it->second;
        if (t.is_vertex()) {
            if (!dst.has_vertex(t.id)) {
                r.add(errc::invalid_morphism, "edge " + e.id + " collapses to unknown vertex " + t.id);
                continue;
            }
            // every endpoint must land on the collapse vertex
            for (const auto& end : e.ends) {
                auto vit = f.vertex_map.find(end);
                if (vit == f.vertex_map.end()) continue; // reported above
                if (vit->second != t.id)
                    r.add(errc::invalid_morphism,
                          "edge " + e.id + " collapses to " + t.id + " but endpoint " + end + " maps to " +
                              vit->second);
            }
            out.image.vertices.insert(t.id);
            continue;
        }
        if (!dst.has_edge(t.id)) {
            r.add(errc::invalid_morphism, "edge " + e.id + " maps to unknown edge " + t.id);
            continue;
        }
        const Edge& image = dst.edge(t.id);
        out.image.edges.insert(t.id);
        if (e.is_compact()) {
            if (!image.is_compact()) {
                r.add(errc::invalid_morphism,
                      "compact edge " + e.id + " maps to leg " + t.id);
                continue;
            }
            std::set<std::string> expected_ends;
            bool endpoints_known = true;
            for (const auto& end : e.ends) {
                auto vit = f.vertex_map.find(end);
                if (vit == f.vertex_map.end()) {
                    endpoints_known = false;
                    continue;
                }
                expected_ends.insert(vit->second);
                out.image.flags.insert({vit->second, t.id});
            }
            if (endpoints_known) {
                std::set<std::string> actual_ends(image.ends.begin(), image.ends.end());
                if (expected_ends != actual_ends)
                    r.add(errc::invalid_morphism,
                          "compact edge " + e.id + " maps to " + t.id + " with mismatched endpoint flags");
            }
        } else {
            auto vit = f.vertex_map.find(e.ends[0]);
            if (vit != f.vertex_map.end()) {
                bool incident = std::find(image.ends.begin(), image.ends.end(), vit->second) != image.ends.end();
                if (!incident)
                    r.add(errc::invalid_morphism,
                          "leg " + e.id + " maps to " + t.id + " which is not incident to " + vit->second);
                else
                    out.image.flags.insert({vit->second, t.id});
            }
        }
    }
    return out;
}

GraphMorphism compose(const Graph& a, const GraphMorphism& f, const GraphMorphism& g) {
    GraphMorphism out;
    for (const auto& v : a.vertices()) {
        out.vertex_map[v] = g.vertex_image(f.vertex_image(v));
    }
    for (const auto& e : a.edges()) {
        const MorphismTarget& mid = f.edge_image(e.id);
        if (mid.is_vertex()) {
            out.edge_map.emplace(e.id, MorphismTarget::to_vertex(g.vertex_image(mid.id)));
        } else {
            out.edge_map.emplace(e.id, g.edge_image(mid.id));
        }
    }
    return out;
}

bool morphism_equal(const GraphMorphism& a, const GraphMorphism& b) {
    if (a.vertex_map != b.vertex_map) return false;
    if (a.edge_map.size() != b.edge_map.size()) return false;
    for (const auto& [e, t] : a.edge_map) {
        auto it = b.edge_map.find(e);
        if (it == b.edge_map.end() || !(it->second == t)) return false;
    }
    return true;
}

} // namespace gkm
