// Acceptance suite. Each criterion runs exactly as stated, all arithmetic
// exact over the integers, and prints one pass/fail line; the binary exits
// nonzero if any criterion fails.

#include "gkm/cohomology.hpp"
#include "gkm/corpus.hpp"
#include "gkm/error.hpp"

#include "oracles.hpp"
#include "testutil.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gkm;
using namespace gkmtest;

namespace {

struct Harness {
    int failures = 0;

    void run(const std::string& name, const std::function<void()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (error.empty()) {
            std::cout << "[PASS] " << name << " (" << ms << " ms)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << name << ": " << error << "\n";
        }
    }
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

template <typename T>
void require_eq(const T& got, const T& expect, const std::string& what) {
    if (!(got == expect)) throw std::runtime_error(what + " does not match");
}

// ---------------------------------------------------------------------------

void criterion1_cp2_pipeline() {
    auto start = std::chrono::steady_clock::now();

    LegBundle xi = corpus_cp2_tangent();
    Projectivization proj = projectivize(xi);
    const LabeledGraph& total = proj.total;

    require(total.graph.vertices().size() == 6, "vertex count");
    size_t vertical = 0, horizontal = 0;
    for (const auto& [e, c] : proj.classification)
        (c == EdgeClass::vertical ? vertical : horizontal) += 1;
    require(vertical == 3, "vertical edge count");
    require(horizontal == 6, "horizontal edge count");
    require(is_regular(total.graph, 3), "3-valence");
    require(is_gkm(total).gkm, "GKM condition");

    const std::vector<std::tuple<std::string, std::string, long long, long long>> expected{
        {"l:p:1", "e:p:1:2", 1, -1},  {"l:p:2", "e:p:1:2", -1, 1},
        {"l:q:1", "e:q:1:2", -1, 0},  {"l:q:2", "e:q:1:2", 1, 0},
        {"l:r:1", "e:r:1:2", 0, -1},  {"l:r:2", "e:r:1:2", 0, 1},
        {"l:p:1", "e:e1:1:1", 1, 0},  {"l:r:1", "e:e1:1:1", -1, 0},
        {"l:p:2", "e:e1:2:2", 1, 0},  {"l:r:2", "e:e1:2:2", -1, 0},
        {"l:p:1", "e:e2:1:2", 0, 1},  {"l:q:2", "e:e2:1:2", 0, -1},
        {"l:p:2", "e:e2:2:1", 0, 1},  {"l:q:1", "e:e2:2:1", 0, -1},
        {"l:q:1", "e:e3:1:1", 1, -1}, {"l:r:1", "e:e3:1:1", -1, 1},
        {"l:q:2", "e:e3:2:2", 1, -1}, {"l:r:2", "e:e3:2:2", -1, 1},
    };
    require(expected.size() == 18, "flag label table size");
    for (const auto& [v, e, a, b] : expected) {
        require(total.label(v, e) == lf2(a, b), "flag label at " + v + "|" + e);
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    require(ms < 1000, "pipeline exceeded one second");
}

void criterion2_quotient_relation() {
    LegBundle xi = corpus_cp2_tangent();

    CohomologyClass c1 = chern(xi, 1);
    require_eq(c1.at("p"), alpha() + beta(), "c1 at p");
    require_eq(c1.at("q"), alpha() - p2(2) * beta(), "c1 at q");
    require_eq(c1.at("r"), beta() - p2(2) * alpha(), "c1 at r");

    CohomologyClass c2 = chern(xi, 2);
    require_eq(c2.at("p"), alpha() * beta(), "c2 at p");
    require_eq(c2.at("q"), beta() * beta() - alpha() * beta(), "c2 at q");
    require_eq(c2.at("r"), alpha() * alpha() - alpha() * beta(), "c2 at r");

    Projectivization proj = projectivize(xi);
    CohomologyClass residue = bh_residue(proj, c1_tautological(proj));
    require(residue.values.size() == 6, "residue vertex count");
    for (const auto& [v, p] : residue.values) {
        require(p.is_zero(), "residue nonzero at " + v);
    }
}

void criterion3_round_trip() {
    auto start = std::chrono::steady_clock::now();
    Rng rng(20260808);

    // >= 100 coefficient tuples on the tangent bundle over the triangle
    {
        Projectivization proj = projectivize(corpus_cp2_tangent());
        for (int trial = 0; trial < 100; ++trial) {
            uint32_t deg = trial % 3 == 0 ? 6 : (trial % 3 == 1 ? 4 : 2);
            std::vector<CohomologyClass> q{random_class(proj.base, deg, rng),
                                           random_class(proj.base, deg, rng)};
            CohomologyClass f = mu(proj, q);
            ModuleDecomposition d = decompose(proj, f);
            require(d.coefficients.size() == 2, "coefficient count");
            require(d.coefficients[0] == q[0] && d.coefficients[1] == q[1],
                    "decompose(mu(Q)) != Q on the tangent bundle");

            CohomologyClass g = random_class(proj.total, 5, rng);
            ModuleDecomposition dg = decompose(proj, g);
            require(mu(proj, dg.coefficients) == g, "mu(decompose(f)) != f on the tangent bundle");
        }
    }

    // >= 20 random rank-2 and rank-3 bundles over the triangle and the
    // 4-cycle whose projectivizations satisfy the GKM condition
    std::vector<LabeledGraph> bases{corpus_cp2_base(), corpus_square()};
    int bundles_used = 0;
    for (size_t base_idx = 0; base_idx < bases.size(); ++base_idx) {
        for (uint32_t rank : {2u, 3u}) {
            int found = 0;
            for (uint64_t seed = 0; seed < 400 && found < 6; ++seed) {
                LegBundle xi =
                    random_leg_bundle(bases[base_idx], rank, 1000 * (base_idx + 1) + 100 * rank + seed);
                Projectivization proj = projectivize(xi);
                if (!is_gkm(proj.total).gkm) continue;
                ++found;
                ++bundles_used;

                std::vector<CohomologyClass> q;
                for (uint32_t k = 0; k < rank; ++k) q.push_back(random_class(proj.base, 6, rng));
                CohomologyClass f = mu(proj, q);
                ModuleDecomposition d = decompose(proj, f);
                for (uint32_t k = 0; k < rank; ++k) {
                    require(d.coefficients[k] == q[k], "decompose(mu(Q)) != Q on a random bundle");
                }

                CohomologyClass g = random_class(proj.total, 5, rng);
                ModuleDecomposition dg = decompose(proj, g);
                require(mu(proj, dg.coefficients) == g, "mu(decompose(f)) != f on a random bundle");
            }
            require(found == 6, "not enough GKM projectivizations among the seeds");
        }
    }
    require(bundles_used >= 20, "bundle count");

    auto seconds = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    require(seconds < 30, "round-trip suite exceeded 30 seconds");
}

void criterion4_projectivization_validates() {
    std::vector<LabeledGraph> bases{corpus_cp2_base(), corpus_square(), corpus_edge_rank3().base};
    int draws = 0;
    for (uint64_t seed = 0; seed < 210; ++seed) {
        const LabeledGraph& base = bases[seed % bases.size()];
        uint32_t rank = 1 + seed % 3;
        LegBundle xi = random_leg_bundle(base, rank, seed);
        Projectivization proj = projectivize(xi);
        CongruenceReport report = validate_labels(proj.total);
        require(report.ok(), "congruence failure at seed " + std::to_string(seed));
        ++draws;
    }
    require(draws >= 200, "draw count");
}

void criterion5_symmetric_identity() {
    Rng rng(424242);
    int cases = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto xs = rng.distinct_forms(2, 7);
        for (uint32_t m = 1; m <= 6; ++m) {
            for (uint32_t k = 1; k <= m; ++k) {
                std::vector<LinearForm> first(xs.begin(), xs.begin() + m);
                std::vector<LinearForm> swapped(xs.begin(), xs.begin() + m - 1);
                swapped.push_back(xs[m]);
                std::vector<LinearForm> full(xs.begin(), xs.begin() + m + 1);
                Polynomial lhs =
                    complete_homogeneous(k, first) - complete_homogeneous(k, swapped);
                Polynomial rhs = (xs[m - 1].to_polynomial() - xs[m].to_polynomial()) *
                                 complete_homogeneous(k - 1, full);
                require(lhs == rhs, "identity failed at k=" + std::to_string(k) +
                                        ", m=" + std::to_string(m));
                ++cases;
            }
        }
    }
    require(cases >= 500, "case count");
}

void criterion6_validation_properties() {
    std::vector<LegBundle> suite{corpus_cp2_tangent(), corpus_edge_rank3(),
                                 corpus_triangle_rank2_twisted()};
    for (uint64_t seed = 500; seed < 530; ++seed) {
        const LabeledGraph& base = seed % 2 == 0 ? corpus_cp2_base() : corpus_square();
        suite.push_back(random_leg_bundle(base, 1 + seed % 3, seed));
    }
    for (const LegBundle& xi : suite) {
        for (uint32_t k = 0; k <= xi.rank; ++k) {
            CohomologyClass c = chern(xi, k);
            require(check_class(xi.base, c.values).ok(), "chern class fails validation");
        }
        if (xi.rank >= 1) {
            Projectivization proj = projectivize(xi);
            require(validate_connection(proj.total.graph, proj.total.connection).ok(),
                    "canonical connection axioms fail");
            TautologicalBundle gamma = tautological(proj);
            require(gamma.congruences.ok(), "tautological bundle fails validation");
            require(validate_connection(gamma.total.graph, gamma.total.connection).ok(),
                    "tautological connection axioms fail");
        }
    }
}

void criterion7_fiber_oracle() {
    Rng rng(987654321);
    int fibers = 0;
    while (fibers < 200) {
        size_t k = 2 + rng.engine() % 4; // ranks 2..5
        auto w = rng.distinct_forms(2, k);
        std::vector<Polynomial> qtilde;
        for (size_t i = 0; i < k; ++i) qtilde.push_back(rng.poly(2, 2, 3, 5));
        std::vector<Polynomial> x;
        for (size_t i = 0; i < k; ++i) {
            Polynomial acc(2);
            for (size_t d = 0; d < k; ++d)
                acc += qtilde[d] * w[i].to_polynomial().pow(static_cast<uint32_t>(d));
            x.push_back(acc);
        }
        auto oracle = vandermonde_oracle(w, x);
        require(oracle.has_value(), "oracle rejected a decomposable fiber class");
        auto newton = fiber_decompose_raw(w, x);
        require(*oracle == newton, "oracle and elimination disagree");
        require(newton == qtilde, "elimination missed the constructing coefficients");
        ++fibers;
    }

    // they also agree on rejection
    std::vector<LinearForm> w{lf2(1, 0), lf2(0, 1)};
    std::vector<Polynomial> bad{alpha(), p2(1)};
    require(!vandermonde_oracle(w, bad).has_value(), "oracle accepted a non-class");
    bool threw = false;
    try {
        fiber_decompose_raw(w, bad);
    } catch (const DomainError&) {
        threw = true;
    }
    require(threw, "elimination accepted a non-class");
}

void criterion8_degenerate_contracts() {
    // rank-1 projectivization returns the base, up to the projection renaming
    LegBundle line = random_leg_bundle(corpus_cp2_base(), 1, 12);
    Projectivization lp = projectivize(line);
    require(lp.total.graph.vertices().size() == line.base.graph.vertices().size(),
            "rank-1 vertex count");
    for (const auto& e : lp.total.graph.edges()) {
        require(lp.classification.at(e.id) == EdgeClass::horizontal, "rank-1 has vertical edges");
        const auto& target = lp.projection.edge_map.at(e.id);
        require(target.is_edge(), "rank-1 edge collapses");
        const Edge& base_edge = line.base.graph.edge(target.id);
        for (const auto& end : e.ends) {
            const std::string& base_end = lp.projection.vertex_map.at(end);
            require(std::find(base_edge.ends.begin(), base_edge.ends.end(), base_end) !=
                        base_edge.ends.end(),
                    "rank-1 edge endpoints do not project onto the base edge");
        }
        for (const auto& end : e.ends) {
            require(lp.total.label(end, e.id) ==
                        line.base.label(lp.projection.vertex_map.at(end), target.id),
                    "rank-1 labels differ from the base");
        }
    }

    // fibers are complete graphs on rank vertices and faces of the total
    for (const LegBundle& xi : {corpus_cp2_tangent(), corpus_edge_rank3(), line}) {
        Projectivization proj = projectivize(xi);
        for (const auto& p : proj.base.graph.vertices()) {
            LabeledGraph fiber = fiber_subgraph(proj, p);
            size_t k = proj.bundle_rank;
            require(fiber.graph.vertices().size() == k, "fiber vertex count");
            require(fiber.graph.edges().size() == k * (k - 1) / 2, "fiber edge count");
            std::vector<std::string> ids;
            for (const auto& e : fiber.graph.edges()) ids.push_back(e.id);
            require(is_face(proj.total, fiber.graph.vertices(), ids), "fiber is not a face");
        }
    }

    // decompose refuses non-GKM projectivizations with NotGKM
    LabeledGraph base = corpus_cp2_base();
    std::map<std::string, std::vector<LinearForm>> fibers;
    Transport transport;
    for (const auto& v : base.graph.vertices()) fibers[v] = {lf2(1, 0), lf2(-1, 0)};
    for (const auto& e : base.graph.edges()) {
        transport[{e.ends[0], e.id}] = {0, 1};
        transport[{e.ends[1], e.id}] = {0, 1};
    }
    Projectivization bad = projectivize(build_leg_bundle(base, fibers, transport));
    require(!is_gkm(bad.total).gkm, "test projectivization unexpectedly GKM");
    bool refused = false;
    try {
        decompose(bad, constant_class(bad.total, p2(1)));
    } catch (const DomainError& e) {
        refused = e.code() == errc::not_gkm;
    }
    require(refused, "decompose did not refuse with NotGKM");
}

} // namespace

int main() {
    Harness h;
    h.run("criterion 1: projectivized tangent bundle over the triangle (structure and 18 labels)",
          criterion1_cp2_pipeline);
    h.run("criterion 2: quotient relation evaluates to zero with the stated Chern classes",
          criterion2_quotient_relation);
    h.run("criterion 3: decompose/mu round-trip on >=100 tuples and >=20 random GKM bundles",
          criterion3_round_trip);
    h.run("criterion 4: projectivizations of >=200 random bundles satisfy every congruence",
          criterion4_projectivization_validates);
    h.run("criterion 5: symmetric-difference identity, all 1<=k<=m<=6, >=500 cases",
          criterion5_symmetric_identity);
    h.run("criterion 6: Chern classes, tautological bundles and connection axioms validate",
          criterion6_validation_properties);
    h.run("criterion 7: fiber decomposition agrees with the Vandermonde oracle on >=200 fibers",
          criterion7_fiber_oracle);
    h.run("criterion 8: degenerate contracts (rank-1, fibers as faces, NotGKM refusal)",
          criterion8_degenerate_contracts);

    if (h.failures == 0) {
        std::cout << "acceptance: 8/8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << (8 - h.failures) << "/8 criteria passed\n";
    return 1;
}
