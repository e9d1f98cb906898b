#include "gkm/labeled.hpp"
#include "gkm/error.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

const Connection::FlagMap& Connection::at(const Flag& flag) const {
    auto it = maps_.find(flag);
    if (it == maps_.end())
        throw DomainError(errc::invalid_graph, "no connection at flag " + flag_key(flag));
    return it->second;
}

const std::string& Connection::transport(const Flag& flag, const std::string& e_prime) const {
    const FlagMap& m = at(flag);
    auto it = m.find(e_prime);
    if (it == m.end())
        throw DomainError(errc::invalid_graph,
                          "connection at " + flag_key(flag) + " is undefined on " + e_prime);
    return it->second;
}

Connection two_valent_connection(const Graph& g) {
    if (!is_regular(g, 2))
        throw DomainError(errc::invalid_graph, "connection can only be inferred for 2-valent graphs");
    Connection conn;
    for (const auto& e : g.edges()) {
        if (!e.is_compact()) continue;
        for (int side = 0; side < 2; ++side) {
            const std::string& p = e.ends[side];
            const std::string& q = e.ends[1 - side];
            Connection::FlagMap map;
            map[e.id] = e.id;
            for (const auto& ep : g.star(p)) {
                if (ep == e.id) continue;
                for (const auto& eq : g.star(q)) {
                    if (eq != e.id) map[ep] = eq;
                }
            }
            conn.set({p, e.id}, std::move(map));
        }
    }
    return conn;
}

void LabelFunction::set(const Flag& flag, LinearForm value) {
    if (value.rank() != rank_)
        throw DomainError(errc::rank_mismatch, "label rank != ambient rank at " + flag_key(flag));
    labels_.insert_or_assign(flag, std::move(value));
}

const LinearForm& LabelFunction::at(const Flag& flag) const {
    auto it = labels_.find(flag);
    if (it == labels_.end())
        throw DomainError(errc::invalid_graph, "no label at flag " + flag_key(flag));
    return it->second;
}

ValidationReport validate_connection(const Graph& g, const Connection& conn) {
    ValidationReport r;
    for (const auto& e : g.edges()) {
        if (!e.is_compact()) continue;
        for (int side = 0; side < 2; ++side) {
            const std::string& p = e.ends[side];
            const std::string& q = e.ends[1 - side];
            Flag flag{p, e.id};
            if (!conn.has(flag)) {
                r.add(errc::invalid_graph, "missing connection at flag " + flag_key(flag));
                continue;
            }
            const auto& map = conn.at(flag);
            auto star_p = g.star(p);
            auto star_q = g.star(q);
            if (map.size() != star_p.size())
                r.add(errc::invalid_graph, "connection at " + flag_key(flag) + " has wrong domain size");
            std::set<std::string> images;
            bool domain_ok = true;
            for (const auto& ep : star_p) {
                auto it = map.find(ep);
                if (it == map.end()) {
                    r.add(errc::invalid_graph,
                          "connection at " + flag_key(flag) + " undefined on star edge " + ep);
                    domain_ok = false;
                    continue;
                }
                if (std::find(star_q.begin(), star_q.end(), it->second) == star_q.end()) {
                    r.add(errc::invalid_graph, "connection at " + flag_key(flag) + " sends " + ep +
                                                   " outside star(" + q + ")");
                    domain_ok = false;
                    continue;
                }
                if (!images.insert(it->second).second) {
                    r.add(errc::invalid_graph,
                          "connection at " + flag_key(flag) + " is not injective at " + it->second);
                    domain_ok = false;
                }
            }
            // axiom (1): the edge itself is fixed
            auto self = map.find(e.id);
            if (self != map.end() && self->second != e.id)
                r.add(errc::invalid_graph, "connection at " + flag_key(flag) + " moves its own edge " +
                                               e.id + " to " + self->second);
            // axiom (2): the two sides are mutually inverse
            if (domain_ok && conn.has({q, e.id})) {
                const auto& back = conn.at({q, e.id});
                for (const auto& ep : star_p) {
                    auto fwd = map.find(ep);
                    if (fwd == map.end()) continue;
                    auto it = back.find(fwd->second);
                    if (it == back.end() || it->second != ep) {
                        r.add(errc::invalid_graph,
                              "connection at " + flag_key({q, e.id}) + " is not inverse to " +
                                  flag_key(flag) + " on " + ep);
                    }
                }
            }
        }
    }
    return r;
}

std::optional<BigInt> CongruenceReport::coefficient(const Flag& flag, const std::string& e_prime) const {
    for (const auto& entry : entries) {
        if (entry.flag == flag && entry.via_edge == e_prime) return entry.c;
    }
    return std::nullopt;
}

std::string CongruenceReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << v.code << ": " << v.message << "\n";
    return os.str();
}

CongruenceReport validate_labels(const LabeledGraph& lg) {
    CongruenceReport report;
    const Graph& g = lg.graph;

    for (const auto& [v, e] : g.flags()) {
        if (!lg.labels.has({v, e}))
            report.violations.push_back({errc::invalid_graph, "missing label at flag " + v + "|" + e});
    }
    if (!report.violations.empty()) return report;

    for (const auto& e : g.edges()) {
        if (!e.is_compact()) continue;
        const std::string& p = e.ends[0];
        const std::string& q = e.ends[1];
        const LinearForm& ap = lg.label(p, e.id);
        const LinearForm& aq = lg.label(q, e.id);
        if (aq == ap) {
            report.edge_signs[e.id] = 1;
        } else if (aq == ap.negated()) {
            report.edge_signs[e.id] = -1;
        } else {
            report.violations.push_back(
                {errc::congruence_violation,
                 "edge " + e.id + ": label " + aq.str() + " at " + q + " is neither +- of " + ap.str()});
        }
    }

    for (const auto& e : g.edges()) {
        if (!e.is_compact()) continue;
        for (int side = 0; side < 2; ++side) {
            const std::string& p = e.ends[side];
            const std::string& q = e.ends[1 - side];
            Flag flag{p, e.id};
            if (!lg.connection.has(flag)) {
                report.violations.push_back(
                    {errc::invalid_graph, "missing connection at flag " + flag_key(flag)});
                continue;
            }
            const LinearForm& axis = lg.label(p, e.id);
            const auto& map = lg.connection.at(flag);
            for (const auto& ep : g.star(p)) {
                CongruenceEntry entry;
                entry.flag = flag;
                entry.via_edge = ep;
                auto mit = map.find(ep);
                if (mit == map.end() || !lg.labels.has({q, mit->second})) {
                    report.violations.push_back(
                        {errc::invalid_graph,
                         "connection at " + flag_key(flag) + " undefined or unlabeled on " + ep});
                    continue;
                }
                const std::string& image = mit->second;
                entry.difference = form_difference(lg.label(q, image), lg.label(p, ep));
                entry.c = integer_ratio(entry.difference, axis);
                if (!entry.c) {
                    std::ostringstream os;
                    os << "congruence fails along " << flag_key(flag) << " for edge " << ep << ": ";
                    Polynomial diff(lg.rank);
                    for (uint32_t i = 0; i < lg.rank; ++i) {
                        Exponents ex(lg.rank, 0);
                        ex[i] = 1;
                        diff.add_term(ex, entry.difference[i]);
                    }
                    os << diff.str() << " is not an integer multiple of " << axis.str();
                    report.violations.push_back({errc::congruence_violation, os.str()});
                }
                report.entries.push_back(std::move(entry));
            }
        }
    }
    return report;
}

GkmResult is_gkm(const LabeledGraph& lg) {
    for (const auto& p : lg.graph.vertices()) {
        auto star = lg.graph.star(p);
        for (size_t i = 0; i < star.size(); ++i) {
            for (size_t j = i + 1; j < star.size(); ++j) {
                if (!linearly_independent(lg.label(p, star[i]), lg.label(p, star[j]))) {
                    return {false, std::make_tuple(p, star[i], star[j])};
                }
            }
        }
    }
    return {true, std::nullopt};
}

int rank_of_labels(const LabeledGraph& lg) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& [flag, form] : lg.labels.labels()) rows.push_back(form.coefficients());
    return lattice_rank(rows);
}

int rank_of_labels_at(const LabeledGraph& lg, const std::string& vertex) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& e : lg.graph.star(vertex)) rows.push_back(lg.label(vertex, e).coefficients());
    return lattice_rank(rows);
}

ValidationReport validate_labeled_morphism(const LabeledGraph& src, const LabeledGraph& dst,
                                           const GraphMorphism& f) {
    MorphismReport base = validate_morphism(src.graph, dst.graph, f);
    ValidationReport r = base.report;
    if (!r.ok()) return r;

    // condition (1): the image is a regular subgraph
    std::optional<size_t> valence;
    for (const auto& v : base.image.vertices) {
        size_t count = 0;
        for (const auto& e : base.image.edges) {
            const Edge& edge = dst.graph.edge(e);
            count += std::count(edge.ends.begin(), edge.ends.end(), v);
        }
        if (!valence) {
            valence = count;
        } else if (*valence != count) {
            r.add(errc::invalid_morphism, "image subgraph is not regular: valence differs at " + v);
            break;
        }
    }

    // condition (3): labels are preserved on non-collapsed flags (rho = id)
    for (const auto& [v, e] : src.graph.flags()) {
        const MorphismTarget& t = f.edge_image(e);
        if (!t.is_edge()) continue;
        const LinearForm& expect = src.label(v, e);
        const LinearForm& got = dst.label(f.vertex_image(v), t.id);
        if (!(expect == got)) {
            r.add(errc::invalid_morphism, "label mismatch at flag " + v + "|" + e + ": " + expect.str() +
                                              " maps onto " + got.str());
        }
    }

    // condition (2): the connection square commutes
    for (const auto& e : src.graph.edges()) {
        if (!e.is_compact()) continue;
        const MorphismTarget& te = f.edge_image(e.id);
        for (int side = 0; side < 2; ++side) {
            const std::string& p = e.ends[side];
            Flag flag{p, e.id};
            for (const auto& ep : src.graph.star(p)) {
                const std::string& ep_conn = src.connection.transport(flag, ep);
                const MorphismTarget& t1 = f.edge_image(ep);
                const MorphismTarget& t2 = f.edge_image(ep_conn);
                if (t1.is_edge() != t2.is_edge()) {
                    r.add(errc::invalid_morphism, "edge " + ep + " and its transport " + ep_conn +
                                                      " do not collapse consistently along " + flag_key(flag));
                    continue;
                }
                if (!t1.is_edge()) continue; // collapsed pairs land on f(p), f(q) automatically
                if (te.is_edge()) {
                    const std::string& expected =
                        dst.connection.transport({f.vertex_image(p), te.id}, t1.id);
                    if (expected != t2.id) {
                        r.add(errc::invalid_morphism,
                              "connection square fails along " + flag_key(flag) + " at " + ep + ": " +
                                  t2.id + " != " + expected);
                    }
                } else {
                    // e collapses: transported edges must have equal images
                    if (!(t1 == t2)) {
                        r.add(errc::invalid_morphism,
                              "collapsed edge " + e.id + " does not fix the image of " + ep);
                    }
                }
            }
        }
    }
    return r;
}

bool is_face(const LabeledGraph& ambient, const std::vector<std::string>& sub_vertices,
             const std::vector<std::string>& sub_edges) {
    std::set<std::string> vs(sub_vertices.begin(), sub_vertices.end());
    std::set<std::string> es(sub_edges.begin(), sub_edges.end());
    for (const auto& e : es) {
        const Edge& edge = ambient.graph.edge(e);
        if (!edge.is_compact()) continue;
        for (const auto& p : edge.ends) {
            if (!vs.count(p)) return false;
            Flag flag{p, e};
            for (const auto& ep : ambient.graph.star(p)) {
                if (!es.count(ep)) continue;
                if (!es.count(ambient.connection.transport(flag, ep))) return false;
            }
        }
    }
    return true;
}

} // namespace gkm
