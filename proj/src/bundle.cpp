#include "gkm/bundle.hpp"
#include "gkm/error.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace gkm {

namespace {

void require_valid_base(const LabeledGraph& base) {
    ValidationReport g = validate_graph(base.graph);
    if (!g.ok()) throw DomainError(errc::invalid_graph, "bundle base: " + g.summary());
    if (!base.graph.is_compact())
        throw DomainError(errc::invalid_graph, "bundle base must be a compact graph");
    if (!base.graph.vertices().empty() &&
        !is_regular(base.graph, base.graph.star(base.graph.vertices().front()).size()))
        throw DomainError(errc::invalid_graph, "bundle base must be a regular graph");
    ValidationReport c = validate_connection(base.graph, base.connection);
    if (!c.ok()) throw DomainError(errc::invalid_graph, "bundle base connection: " + c.summary());
    CongruenceReport l = validate_labels(base);
    if (!l.ok()) throw DomainError(errc::invalid_graph, "bundle base labels: " + l.summary());
}

std::string index_string(uint32_t i) { return std::to_string(i); }

} // namespace

std::string leg_edge_id(const std::string& vertex, uint32_t index) {
    return "l:" + vertex + ":" + index_string(index);
}

std::vector<LinearForm> LegBundle::fiber_labels(const std::string& base_vertex) const {
    auto it = fibers.find(base_vertex);
    if (it == fibers.end()) throw DomainError(errc::unknown_vertex, "no fiber at " + base_vertex);
    std::vector<LinearForm> out;
    out.reserve(it->second.size());
    for (const auto& leg : it->second) out.push_back(total.label(base_vertex, leg));
    return out;
}

uint32_t LegBundle::transport_index(const Flag& flag, uint32_t i) const {
    auto it = transport.find(flag);
    if (it == transport.end())
        throw DomainError(errc::invalid_graph, "no transport at flag " + flag_key(flag));
    if (i >= it->second.size())
        throw DomainError(errc::out_of_range, "fiber index out of range at " + flag_key(flag));
    return it->second[i];
}

GraphMorphism LegBundle::projection() const {
    GraphMorphism f;
    for (const auto& v : total.graph.vertices()) f.vertex_map[v] = v;
    for (const auto& e : total.graph.edges()) {
        if (e.is_leg()) {
            f.edge_map.emplace(e.id, MorphismTarget::to_vertex(e.ends[0]));
        } else {
            f.edge_map.emplace(e.id, MorphismTarget::to_edge(e.id));
        }
    }
    return f;
}

GraphMorphism LegBundle::section() const {
    return GraphMorphism::identity(base.graph);
}

LegBundle build_leg_bundle(const LabeledGraph& base,
                           const std::map<std::string, std::vector<LinearForm>>& leg_labels,
                           const Transport& transport) {
    require_valid_base(base);

    uint32_t rank = 0;
    bool first = true;
    for (const auto& v : base.graph.vertices()) {
        auto it = leg_labels.find(v);
        size_t count = it == leg_labels.end() ? 0 : it->second.size();
        if (first) {
            rank = static_cast<uint32_t>(count);
            first = false;
        } else if (count != rank) {
            throw DomainError(errc::invalid_graph,
                              "every vertex needs exactly " + std::to_string(rank) + " leg labels, " + v +
                                  " has " + std::to_string(count));
        }
    }

    // transport tables must exist per directed compact flag and pair up inversely
    for (const auto& e : base.graph.edges()) {
        if (rank == 0) break;
        for (int side = 0; side < 2; ++side) {
            Flag fwd{e.ends[side], e.id};
            Flag bwd{e.ends[1 - side], e.id};
            auto fit = transport.find(fwd);
            if (fit == transport.end() || fit->second.size() != rank)
                throw DomainError(errc::transport_not_inverse,
                                  "missing or wrongly sized transport at " + flag_key(fwd));
            std::vector<bool> seen(rank, false);
            for (uint32_t i = 0; i < rank; ++i) {
                uint32_t j = fit->second[i];
                if (j >= rank || seen[j])
                    throw DomainError(errc::transport_not_inverse,
                                      "transport at " + flag_key(fwd) + " is not a permutation");
                seen[j] = true;
            }
            auto bit = transport.find(bwd);
            if (bit == transport.end() || bit->second.size() != rank)
                throw DomainError(errc::transport_not_inverse,
                                  "missing or wrongly sized transport at " + flag_key(bwd));
            for (uint32_t i = 0; i < rank; ++i) {
                if (bit->second[fit->second[i]] != i)
                    throw DomainError(errc::transport_not_inverse,
                                      "transport at " + flag_key(bwd) + " is not inverse to " +
                                          flag_key(fwd));
            }
        }
    }

    LegBundle xi;
    xi.base = base;
    xi.rank = rank;
    xi.transport = transport;

    std::vector<Edge> edges = base.graph.edges();
    std::set<std::string> existing;
    for (const auto& e : edges) existing.insert(e.id);
    LabelFunction labels = base.labels;
    for (const auto& v : base.graph.vertices()) {
        std::vector<std::string> fiber;
        for (uint32_t i = 1; i <= rank; ++i) {
            std::string id = leg_edge_id(v, i);
            if (!existing.insert(id).second)
                throw DomainError(errc::id_collision, "constructed leg id already exists: " + id);
            edges.push_back(Edge{id, {v}});
            labels.set({v, id}, leg_labels.at(v)[i - 1]);
            fiber.push_back(id);
        }
        xi.fibers[v] = std::move(fiber);
    }

    Connection conn;
    for (const auto& e : base.graph.edges()) {
        for (int side = 0; side < 2; ++side) {
            const std::string& p = e.ends[side];
            const std::string& q = e.ends[1 - side];
            Flag flag{p, e.id};
            Connection::FlagMap map = base.connection.at(flag);
            if (rank > 0) {
                const auto& perm = transport.at(flag);
                for (uint32_t i = 0; i < rank; ++i) {
                    map[xi.fibers[p][i]] = xi.fibers[q][perm[i]];
                }
            }
            conn.set(flag, std::move(map));
        }
    }

    xi.total = LabeledGraph{Graph::make(base.graph.vertices(), std::move(edges)), std::move(conn),
                            std::move(labels), base.rank};

    ValidationReport cr = validate_connection(xi.total.graph, xi.total.connection);
    if (!cr.ok())
        throw DomainError(errc::internal_invariant, "leg bundle connection: " + cr.summary());
    xi.congruences = validate_labels(xi.total);
    if (!xi.congruences.ok())
        throw DomainError(errc::congruence_violation, xi.congruences.summary());
    return xi;
}

Transport infer_transport(const LabeledGraph& base,
                          const std::map<std::string, std::vector<LinearForm>>& leg_labels) {
    require_valid_base(base);
    uint32_t rank = leg_labels.empty() ? 0
                                       : static_cast<uint32_t>(leg_labels.begin()->second.size());
    Transport out;
    for (const auto& e : base.graph.edges()) {
        const std::string& p = e.ends[0];
        const std::string& q = e.ends[1];
        const LinearForm& axis = base.label(p, e.id);
        const auto& wp = leg_labels.at(p);
        const auto& wq = leg_labels.at(q);

        std::vector<uint32_t> perm(rank), chosen;
        for (uint32_t i = 0; i < rank; ++i) perm[i] = i;
        size_t matches = 0;
        std::vector<uint32_t> unique;
        // rank stays small in practice; full enumeration keeps the
        // uniqueness guarantee honest
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (uint32_t i = 0; i < rank && ok; ++i) {
                auto diff = form_difference(wq[perm[i]], wp[i]);
                ok = integer_ratio(diff, axis).has_value();
            }
            if (ok) {
                ++matches;
                unique = perm;
                if (matches > 1) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (matches == 0)
            throw DomainError(errc::congruence_violation,
                              "no fiber matching satisfies the congruences along edge " + e.id);
        if (matches > 1)
            throw DomainError(errc::invalid_graph,
                              "fiber matching along edge " + e.id + " is not unique; transport required");
        out[{p, e.id}] = unique;
        std::vector<uint32_t> inverse(rank);
        for (uint32_t i = 0; i < rank; ++i) inverse[unique[i]] = i;
        out[{q, e.id}] = inverse;
    }
    return out;
}

LegBundle random_leg_bundle(const LabeledGraph& base, uint32_t rank, uint64_t seed) {
    require_valid_base(base);
    std::mt19937_64 rng(seed);

    const uint32_t n = base.rank;
    auto draw_form = [&]() -> std::vector<BigInt> {
        std::vector<BigInt> c(n);
        for (uint32_t i = 0; i < n; ++i)
            c[i] = BigInt(static_cast<long long>(rng() % 7) - 3);
        return c;
    };
    auto nonzero = [](const std::vector<BigInt>& c) {
        return std::any_of(c.begin(), c.end(), [](const BigInt& x) { return !x.is_zero(); });
    };

    // pairwise distinct nonzero base weights
    std::vector<std::vector<BigInt>> weights;
    for (int attempt = 0; attempt < 4000 && weights.size() < rank; ++attempt) {
        auto c = draw_form();
        if (!nonzero(c)) continue;
        if (std::find(weights.begin(), weights.end(), c) != weights.end()) continue;
        weights.push_back(std::move(c));
    }
    if (weights.size() < rank)
        throw DomainError(errc::generation_failed,
                          "could not draw " + std::to_string(rank) + " distinct nonzero weights");

    std::map<std::string, std::vector<std::vector<BigInt>>> labels;
    for (const auto& v : base.graph.vertices()) labels[v] = weights;

    bool try_twist = rank > 0 && base.graph.compact_edge_count() > 0 && (rng() & 1u);
    if (try_twist) {
        // spanning tree in sorted-id BFS order
        std::vector<std::pair<Flag, std::string>> tree; // ((p,e), q) directed away from root
        std::vector<std::string> non_tree;
        {
            std::set<std::string> visited{base.graph.vertices().front()};
            std::set<std::string> used;
            std::deque<std::string> queue{base.graph.vertices().front()};
            while (!queue.empty()) {
                std::string p = queue.front();
                queue.pop_front();
                for (const auto& e : base.graph.star(p)) {
                    const std::string& q = base.graph.edge(e).other_end(p);
                    if (visited.count(q)) continue;
                    visited.insert(q);
                    used.insert(e);
                    tree.push_back({{p, e}, q});
                    queue.push_back(q);
                }
            }
            for (const auto& e : base.graph.edges()) {
                if (!used.count(e.id)) non_tree.push_back(e.id);
            }
        }

        for (int attempt = 0; attempt < 2000; ++attempt) {
            auto candidate = labels;
            for (const auto& [flag, q] : tree) {
                const auto& axis = base.label(flag.first, flag.second).coefficients();
                candidate[q] = candidate[flag.first];
                for (uint32_t i = 0; i < rank; ++i) {
                    long long c = static_cast<long long>(rng() % 3) - 1;
                    for (uint32_t k = 0; k < n; ++k)
                        candidate[q][i][k] += axis[k] * BigInt(c);
                }
            }
            bool ok = true;
            for (const auto& [v, fiber] : candidate) {
                for (uint32_t i = 0; i < rank && ok; ++i) {
                    if (!nonzero(fiber[i])) ok = false;
                    for (uint32_t j = i + 1; j < rank && ok; ++j)
                        if (fiber[i] == fiber[j]) ok = false;
                }
                if (!ok) break;
            }
            for (size_t k = 0; ok && k < non_tree.size(); ++k) {
                const Edge& e = base.graph.edge(non_tree[k]);
                const LinearForm& axis = base.label(e.ends[0], e.id);
                for (uint32_t i = 0; i < rank && ok; ++i) {
                    std::vector<BigInt> diff(n);
                    for (uint32_t c = 0; c < n; ++c)
                        diff[c] = candidate[e.ends[1]][i][c] - candidate[e.ends[0]][i][c];
                    ok = integer_ratio(diff, axis).has_value();
                }
            }
            if (ok) {
                labels = std::move(candidate);
                break;
            }
        }
        // twist attempts exhausted: keep the untwisted constant bundle
    }

    std::map<std::string, std::vector<LinearForm>> leg_labels;
    for (auto& [v, fiber] : labels) {
        std::vector<LinearForm> forms;
        forms.reserve(fiber.size());
        for (auto& c : fiber) forms.push_back(LinearForm::make(c));
        leg_labels[v] = std::move(forms);
    }

    Transport transport;
    std::vector<uint32_t> identity(rank);
    for (uint32_t i = 0; i < rank; ++i) identity[i] = i;
    for (const auto& e : base.graph.edges()) {
        transport[{e.ends[0], e.id}] = identity;
        transport[{e.ends[1], e.id}] = identity;
    }
    return build_leg_bundle(base, leg_labels, transport);
}

namespace {

// id helpers shared by projectivize and its tests via deterministic naming

std::string vertical_edge_id(const std::string& p, uint32_t i, uint32_t j) {
    if (i > j) std::swap(i, j);
    return "e:" + p + ":" + index_string(i) + ":" + index_string(j);
}

struct ProjBuilder {
    const LegBundle& xi;

    // 1-based fiber index at the far end of f seen from p
    uint32_t across(const Edge& f, const std::string& p, uint32_t i) const {
        return xi.transport_index({p, f.id}, i - 1) + 1;
    }

    std::string horizontal_edge_id(const Edge& f, const std::string& p, uint32_t i) const {
        const std::string& q = f.other_end(p);
        uint32_t j = across(f, p, i);
        if (p < q)
            return "e:" + f.id + ":" + index_string(i) + ":" + index_string(j);
        return "e:" + f.id + ":" + index_string(j) + ":" + index_string(i);
    }
};

} // namespace

Projectivization projectivize(const LegBundle& xi) {
    if (xi.rank < 1)
        throw DomainError(errc::out_of_range, "projectivization needs a bundle of rank >= 1");

    const Graph& gamma = xi.base.graph;
    {
        std::set<std::string> vs(gamma.vertices().begin(), gamma.vertices().end());
        for (const auto& e : gamma.edges()) {
            if (vs.count(e.id))
                throw DomainError(errc::id_collision,
                                  "base vertex and edge share the id " + e.id +
                                      "; vertical and horizontal edge ids would collide");
        }
    }

    Projectivization proj;
    proj.base = xi.base;
    proj.bundle_rank = xi.rank;
    const uint32_t rank = xi.rank;
    const uint32_t n = xi.base.rank;

    for (const auto& p : gamma.vertices()) {
        auto wl = xi.fiber_labels(p);
        for (uint32_t i = 0; i < rank; ++i) {
            for (uint32_t j = i + 1; j < rank; ++j) {
                if (wl[i] == wl[j])
                    throw DomainError(errc::degenerate_fiber,
                                      "fiber at " + p + " repeats the label " + wl[i].str() +
                                          "; vertical labels would vanish");
            }
        }
        proj.fiber_labels[p] = std::move(wl);
    }

    ProjBuilder b{xi};

    std::vector<std::string> vertices;
    for (const auto& p : gamma.vertices()) {
        std::vector<std::string> fiber = xi.fibers.at(p);
        for (uint32_t i = 0; i < rank; ++i) {
            const std::string& v = fiber[i];
            vertices.push_back(v);
            proj.vertex_info[v] = {p, i + 1};
            proj.projection.vertex_map[v] = p;
        }
        proj.fiber_vertices[p] = std::move(fiber);
    }

    std::vector<Edge> edges;
    for (const auto& p : gamma.vertices()) {
        for (uint32_t i = 1; i <= rank; ++i) {
            for (uint32_t j = i + 1; j <= rank; ++j) {
                std::string id = vertical_edge_id(p, i, j);
                edges.push_back(Edge{id, {proj.fiber_vertices[p][i - 1], proj.fiber_vertices[p][j - 1]}});
                proj.classification[id] = EdgeClass::vertical;
                proj.projection.edge_map.emplace(id, MorphismTarget::to_vertex(p));
            }
        }
    }
    for (const auto& f : gamma.edges()) {
        const std::string& a = std::min(f.ends[0], f.ends[1]);
        for (uint32_t i = 1; i <= rank; ++i) {
            std::string id = b.horizontal_edge_id(f, a, i);
            uint32_t j = b.across(f, a, i);
            edges.push_back(
                Edge{id, {proj.fiber_vertices[a][i - 1], proj.fiber_vertices[f.other_end(a)][j - 1]}});
            proj.classification[id] = EdgeClass::horizontal;
            proj.projection.edge_map.emplace(id, MorphismTarget::to_edge(f.id));
        }
    }

    LabelFunction labels(n);
    for (const auto& p : gamma.vertices()) {
        const auto& w = proj.fiber_labels[p];
        for (uint32_t i = 1; i <= rank; ++i) {
            const std::string& x = proj.fiber_vertices[p][i - 1];
            for (uint32_t j = 1; j <= rank; ++j) {
                if (j == i) continue;
                labels.set({x, vertical_edge_id(p, i, j)},
                           LinearForm::make(form_difference(w[i - 1], w[j - 1])));
            }
            for (const auto& fid : gamma.star(p)) {
                const Edge& f = gamma.edge(fid);
                labels.set({x, b.horizontal_edge_id(f, p, i)}, xi.base.label(p, fid));
            }
        }
    }

    Connection conn;
    for (const auto& p : gamma.vertices()) {
        for (uint32_t i = 1; i <= rank; ++i) {
            const std::string& x = proj.fiber_vertices[p][i - 1];
            // along the vertical flag (l_p^i, e_p^{i,j})
            for (uint32_t j = 1; j <= rank; ++j) {
                if (j == i) continue;
                Connection::FlagMap map;
                for (uint32_t k = 1; k <= rank; ++k) {
                    if (k == i) continue;
                    map[vertical_edge_id(p, i, k)] =
                        k == j ? vertical_edge_id(p, i, j) : vertical_edge_id(p, j, k);
                }
                for (const auto& fid : gamma.star(p)) {
                    const Edge& f = gamma.edge(fid);
                    map[b.horizontal_edge_id(f, p, i)] = b.horizontal_edge_id(f, p, j);
                }
                conn.set({x, vertical_edge_id(p, i, j)}, std::move(map));
            }
            // along the horizontal flag (l_p^i, e_f^{i,j})
            for (const auto& fid : gamma.star(p)) {
                const Edge& f = gamma.edge(fid);
                const std::string& q = f.other_end(p);
                uint32_t j = b.across(f, p, i);
                Connection::FlagMap map;
                for (uint32_t k = 1; k <= rank; ++k) {
                    if (k == i) continue;
                    map[vertical_edge_id(p, i, k)] = vertical_edge_id(q, j, b.across(f, p, k));
                }
                for (const auto& gid : gamma.star(p)) {
                    const Edge& g = gamma.edge(gid);
                    const std::string& hid = xi.base.connection.transport({p, f.id}, gid);
                    map[b.horizontal_edge_id(g, p, i)] =
                        b.horizontal_edge_id(gamma.edge(hid), q, j);
                }
                conn.set({x, b.horizontal_edge_id(f, p, i)}, std::move(map));
            }
        }
    }

    proj.total = LabeledGraph{Graph::make(std::move(vertices), std::move(edges)), std::move(conn),
                              std::move(labels), n};

    // Executable form of the well-definedness theorem for the construction:
    // any failure here is a bug, not bad input.
    ValidationReport vg = validate_graph(proj.total.graph);
    if (!vg.ok())
        throw DomainError(errc::internal_invariant, "projectivization graph: " + vg.summary());
    ValidationReport vc = validate_connection(proj.total.graph, proj.total.connection);
    if (!vc.ok())
        throw DomainError(errc::internal_invariant, "canonical connection: " + vc.summary());
    CongruenceReport vl = validate_labels(proj.total);
    if (!vl.ok())
        throw DomainError(errc::internal_invariant, "projectivization labels: " + vl.summary());
    return proj;
}

LabeledGraph fiber_subgraph(const Projectivization& proj, const std::string& base_vertex) {
    auto it = proj.fiber_vertices.find(base_vertex);
    if (it == proj.fiber_vertices.end())
        throw DomainError(errc::unknown_vertex, "no fiber over " + base_vertex);
    const auto& verts = it->second;
    const uint32_t rank = proj.bundle_rank;

    std::vector<Edge> edges;
    std::set<std::string> edge_ids;
    for (uint32_t i = 1; i <= rank; ++i) {
        for (uint32_t j = i + 1; j <= rank; ++j) {
            std::string id = vertical_edge_id(base_vertex, i, j);
            edges.push_back(proj.total.graph.edge(id));
            edge_ids.insert(id);
        }
    }

    LabelFunction labels(proj.total.rank);
    Connection conn;
    for (const auto& v : verts) {
        for (const auto& e : proj.total.graph.star(v)) {
            if (!edge_ids.count(e)) continue;
            labels.set({v, e}, proj.total.label(v, e));
            Connection::FlagMap restricted;
            for (const auto& [from, to] : proj.total.connection.at({v, e})) {
                if (!edge_ids.count(from)) continue;
                if (!edge_ids.count(to))
                    throw DomainError(errc::internal_invariant,
                                      "fiber over " + base_vertex + " is not a face at " + v + "|" + e);
                restricted[from] = to;
            }
            conn.set({v, e}, std::move(restricted));
        }
    }
    return LabeledGraph{Graph::make(verts, std::move(edges)), std::move(conn), std::move(labels),
                        proj.total.rank};
}

TautologicalBundle tautological(const Projectivization& proj) {
    std::map<std::string, std::vector<LinearForm>> leg_labels;
    for (const auto& [v, info] : proj.vertex_info) {
        leg_labels[v] = {proj.fiber_labels.at(info.first)[info.second - 1]};
    }
    Transport transport;
    for (const auto& e : proj.total.graph.edges()) {
        transport[{e.ends[0], e.id}] = {0};
        transport[{e.ends[1], e.id}] = {0};
    }
    return build_leg_bundle(proj.total, leg_labels, transport);
}

LegBundle pullback(const LegBundle& xi, const LabeledGraph& gprime, const GraphMorphism& phi,
                   const std::map<std::string, std::vector<uint32_t>>& psi) {
    if (!gprime.graph.is_compact())
        throw DomainError(errc::invalid_morphism, "pullback base must be a compact graph");
    ValidationReport vm = validate_labeled_morphism(gprime, xi.base, phi);
    if (!vm.ok()) throw DomainError(errc::invalid_morphism, vm.summary());

    const uint32_t rank = xi.rank;
    auto psi_at = [&](const std::string& v) -> std::vector<uint32_t> {
        auto it = psi.find(v);
        if (it == psi.end()) {
            std::vector<uint32_t> identity(rank);
            for (uint32_t i = 0; i < rank; ++i) identity[i] = i;
            return identity;
        }
        if (it->second.size() != rank)
            throw DomainError(errc::invalid_morphism, "fiber bijection at " + v + " has wrong size");
        std::vector<bool> seen(rank, false);
        for (uint32_t j : it->second) {
            if (j >= rank || seen[j])
                throw DomainError(errc::invalid_morphism, "fiber bijection at " + v + " is not a bijection");
            seen[j] = true;
        }
        return it->second;
    };

    std::map<std::string, std::vector<LinearForm>> leg_labels;
    std::map<std::string, std::vector<uint32_t>> psi_all;
    for (const auto& v : gprime.graph.vertices()) {
        psi_all[v] = psi_at(v);
        auto source = xi.fiber_labels(phi.vertex_image(v));
        std::vector<LinearForm> fiber;
        fiber.reserve(rank);
        for (uint32_t j = 0; j < rank; ++j) fiber.push_back(source[psi_all[v][j]]);
        leg_labels[v] = std::move(fiber);
    }

    Transport transport;
    for (const auto& e : gprime.graph.edges()) {
        for (int side = 0; side < 2; ++side) {
            const std::string& p = e.ends[side];
            const std::string& q = e.ends[1 - side];
            const auto& psi_p = psi_all[p];
            const auto& psi_q = psi_all[q];
            std::vector<uint32_t> psi_q_inv(rank);
            for (uint32_t j = 0; j < rank; ++j) psi_q_inv[psi_q[j]] = j;

            const MorphismTarget& image = phi.edge_image(e.id);
            std::vector<uint32_t> perm(rank);
            for (uint32_t j = 0; j < rank; ++j) {
                uint32_t upstairs = psi_p[j];
                if (image.is_edge())
                    upstairs = xi.transport_index({phi.vertex_image(p), image.id}, upstairs);
                perm[j] = psi_q_inv[upstairs];
            }
            transport[{p, e.id}] = std::move(perm);
        }
    }
    return build_leg_bundle(gprime, leg_labels, transport);
}

} // namespace gkm
