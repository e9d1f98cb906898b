// bundle.hpp
// ----------
// Leg bundles over compact labeled graphs and the constructions built from
// them: the projectivization with its canonical connection and labels, the
// pullback along a morphism of labeled graphs, and the tautological line
// bundle over a projectivization.
//
// "rank" is the number of legs per fiber throughout (r+1 in the sections of
// the paper trail that index bundles by r).
//
// All constructed ids are deterministic:
//   leg i at vertex p            -> "l:<p>:<i>"        (1-based i)
//   vertical edge at p           -> "e:<p>:<i>:<j>"    (i < j)
//   horizontal edge over f       -> "e:<f>:<i>:<j>"    (i at the smaller
//                                                       endpoint id)

#pragma once

#include "gkm/labeled.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gkm {

// per directed compact flag (p,e): fiber index at p -> fiber index at q, 0-based
using Transport = std::map<Flag, std::vector<uint32_t>>;

struct LegBundle {
    LabeledGraph base;
    LabeledGraph total;
    std::map<std::string, std::vector<std::string>> fibers; // base vertex -> ordered leg ids
    Transport transport;
    uint32_t rank = 0;
    CongruenceReport congruences; // of the total graph, always violation-free

    std::vector<LinearForm> fiber_labels(const std::string& base_vertex) const;

    // fiber index j (0-based) at q with transport(p,e): l_p^i -> l_q^j
    uint32_t transport_index(const Flag& flag, uint32_t i) const;

    GraphMorphism projection() const; // forgets the legs
    GraphMorphism section() const;    // embeds the base
};

std::string leg_edge_id(const std::string& vertex, uint32_t index);

// Assembles and validates a labeled leg bundle. Throws:
//   InvalidGraph         base not a valid compact regular labeled graph
//   TransportNotInverse  transport tables not mutually inverse
//   CongruenceViolation  a leg breaks a congruence relation (witness in message)
LegBundle build_leg_bundle(const LabeledGraph& base,
                           const std::map<std::string, std::vector<LinearForm>>& leg_labels,
                           const Transport& transport);

// Brute-forces the unique congruence-satisfying fiber matching per edge;
// throws if none exists or if it is not unique.
Transport infer_transport(const LabeledGraph& base,
                          const std::map<std::string, std::vector<LinearForm>>& leg_labels);

// Seeded generator: constant-weight fibers with identity transport,
// optionally twisted along a spanning tree by integer multiples of the base
// labels; twists that fail cycle consistency are resampled (bounded), then
// dropped. Fiber labels are kept pairwise distinct so the result is always
// projectivizable.
LegBundle random_leg_bundle(const LabeledGraph& base, uint32_t rank, uint64_t seed);

enum class EdgeClass { vertical, horizontal };

struct Projectivization {
    LabeledGraph base;
    LabeledGraph total;
    uint32_t bundle_rank = 0;
    // total vertex "l:p:i" -> (p, i); i is 1-based
    std::map<std::string, std::pair<std::string, uint32_t>> vertex_info;
    std::map<std::string, std::vector<std::string>> fiber_vertices;
    std::map<std::string, std::vector<LinearForm>> fiber_labels; // the leg labels of the bundle
    std::map<std::string, EdgeClass> classification;
    GraphMorphism projection; // vertices -> base vertices, vertical -> vertex, horizontal -> edge
};

// Construction of the projectivization with the canonical connection and the
// induced labels. The result is re-validated; a failure there indicates a bug
// and surfaces as InternalInvariant. Requires rank >= 1 and pairwise distinct
// leg labels in every fiber (equal labels would force a zero vertical label).
Projectivization projectivize(const LegBundle& xi);

// the labeled fiber subgraph over a base vertex: the complete graph on the
// fiber with the restricted connection and labels
LabeledGraph fiber_subgraph(const Projectivization& proj, const std::string& base_vertex);

using TautologicalBundle = LegBundle;

// rank-1 bundle over the projectivization whose leg at l_p^i carries the
// label of the leg l_p^i of the original bundle
TautologicalBundle tautological(const Projectivization& proj);

// Pullback of xi along a morphism phi: gprime -> base(xi) of compact labeled
// graphs. psi gives the per-vertex fiber bijection (0-based index into the
// fiber of xi at phi(v)); vertices absent from psi use the index-preserving
// bijection.
LegBundle pullback(const LegBundle& xi, const LabeledGraph& gprime, const GraphMorphism& phi,
                   const std::map<std::string, std::vector<uint32_t>>& psi = {});

} // namespace gkm
