// labeled.hpp
// -----------
// Connections and Z^n-valued label functions on graphs with legs, and the
// validators that decide whether a (graph, connection, labels) triple is a
// labeled graph: connection axioms, the sign condition on compact edges and
// the congruence relation, the GKM condition, and label rank.
//
// Connections are first-class data stored as per-flag permutation tables:
// different connections on the same labeled leg bundle produce
// non-isomorphic projectivizations, so they are never silently inferred
// (except for 2-valent graphs, where the connection is forced).

#pragma once

#include "gkm/graph.hpp"
#include "gkm/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

using Flag = std::pair<std::string, std::string>; // (vertex id, edge id)

inline std::string flag_key(const Flag& f) { return f.first + "|" + f.second; }

class Connection {
public:
    // the bijection star(p) -> star(q) attached to the directed compact flag (p,e)
    using FlagMap = std::map<std::string, std::string>;

    void set(const Flag& flag, FlagMap map) { maps_[flag] = std::move(map); }
    bool has(const Flag& flag) const { return maps_.count(flag) > 0; }
    const FlagMap& at(const Flag& flag) const;

    // image of e_prime under the map at (p,e)
    const std::string& transport(const Flag& flag, const std::string& e_prime) const;

    const std::map<Flag, FlagMap>& maps() const { return maps_; }

    friend bool operator==(const Connection& a, const Connection& b) { return a.maps_ == b.maps_; }

private:
    std::map<Flag, FlagMap> maps_;
};

// the unique connection of a 2-valent graph: the edge itself is fixed,
// the remaining edge goes to the remaining edge
Connection two_valent_connection(const Graph& g);

class LabelFunction {
public:
    explicit LabelFunction(uint32_t rank) : rank_(rank) {}

    uint32_t rank() const { return rank_; }
    void set(const Flag& flag, LinearForm value);
    bool has(const Flag& flag) const { return labels_.count(flag) > 0; }
    const LinearForm& at(const Flag& flag) const;
    const std::map<Flag, LinearForm>& labels() const { return labels_; }

    friend bool operator==(const LabelFunction& a, const LabelFunction& b) {
        return a.rank_ == b.rank_ && a.labels_ == b.labels_;
    }

private:
    uint32_t rank_;
    std::map<Flag, LinearForm> labels_;
};

struct LabeledGraph {
    Graph graph;
    Connection connection;
    LabelFunction labels{0};
    uint32_t rank = 0;

    const LinearForm& label(const std::string& v, const std::string& e) const {
        return labels.at({v, e});
    }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.rank == b.rank && a.graph == b.graph && a.connection == b.connection && a.labels == b.labels;
    }
};

// both axioms of a connection at every compact flag, plus star bijectivity
ValidationReport validate_connection(const Graph& g, const Connection& conn);

// One row of the congruence bookkeeping: along the compact flag (p,e),
// the edge e_prime of star(p) satisfies
//   alpha(q, transport(e_prime)) - alpha(p, e_prime) = c * alpha(p, e)
// with integer c, or fails with the offending difference as witness.
struct CongruenceEntry {
    Flag flag;
    std::string via_edge;
    std::optional<BigInt> c;
    std::vector<BigInt> difference;
};

struct CongruenceReport {
    std::vector<CongruenceEntry> entries;
    std::map<std::string, int> edge_signs; // +1/-1 per compact edge, Eq-sign alpha(q,e) = s*alpha(p,e)
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::optional<BigInt> coefficient(const Flag& flag, const std::string& e_prime) const;
    std::string summary() const;
};

// All labels present, sign condition on compact edges, and every congruence
// relation; the triple is a labeled graph iff the report has no violations.
CongruenceReport validate_labels(const LabeledGraph& lg);

struct GkmResult {
    bool gkm = false;
    // (vertex, edge, edge) with linearly dependent labels, when not GKM
    std::optional<std::tuple<std::string, std::string, std::string>> witness;
};

GkmResult is_gkm(const LabeledGraph& lg);

// rank of the Z-span of all label values
int rank_of_labels(const LabeledGraph& lg);
// restricted to a single star; equals the global rank on valid labeled graphs
int rank_of_labels_at(const LabeledGraph& lg, const std::string& vertex);

// Morphism of labeled graphs with identity lattice map: underlying graph
// morphism, regular image subgraph, label compatibility on non-collapsed
// flags, and the commuting square against both connections (collapsed edges
// must stay collapsed consistently).
ValidationReport validate_labeled_morphism(const LabeledGraph& src, const LabeledGraph& dst,
                                           const GraphMorphism& f);

// face test: the ambient connection maps sub-edges to sub-edges along every
// compact flag of the subgraph
bool is_face(const LabeledGraph& ambient, const std::vector<std::string>& sub_vertices,
             const std::vector<std::string>& sub_edges);

} // namespace gkm
