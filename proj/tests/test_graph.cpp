#include "gkm/graph.hpp"
#include "gkm/corpus.hpp"
#include "gkm/error.hpp"

#include <doctest.h>

using namespace gkm;

TEST_CASE("graph validation clauses") {
    // a single vertex and no edges is a valid graph
    CHECK(validate_graph(Graph::make({"p"}, {})).ok());

    // one vertex with six legs: valid, valence 6
    std::vector<Edge> legs;
    for (int i = 1; i <= 6; ++i) legs.push_back(Edge{"l" + std::to_string(i), {"p"}});
    Graph p6 = Graph::make({"p"}, legs);
    CHECK(validate_graph(p6).ok());
    CHECK(p6.star("p").size() == 6);
    CHECK(p6.star("p", StarFilter::legs).size() == 6);
    CHECK(p6.star("p", StarFilter::compact).empty());
    CHECK(is_regular(p6, 6));

    // both flags of a compact edge on the same vertex
    Graph loop = Graph::make({"p", "q"}, {Edge{"e", {"p", "p"}}, Edge{"f", {"p", "q"}}});
    auto r = validate_graph(loop);
    CHECK_FALSE(r.ok());

    // vertex set must be nonempty
    CHECK_FALSE(validate_graph(Graph::make({}, {})).ok());

    // isolated vertex while edges exist breaks surjectivity
    Graph isolated = Graph::make({"p", "q", "z"}, {Edge{"e", {"p", "q"}}});
    CHECK_FALSE(validate_graph(isolated).ok());

    // unknown endpoint
    Graph dangling = Graph::make({"p", "q"}, {Edge{"e", {"p", "x"}}});
    CHECK_FALSE(validate_graph(dangling).ok());

    CHECK_THROWS_AS(Graph::make({"p", "p"}, {}), ParseError);
    CHECK_THROWS_AS(Graph::make({"a|b"}, {}), ParseError);
}

TEST_CASE("star and its partition") {
    Graph triangle = corpus_cp2_base().graph;
    for (const auto& v : triangle.vertices()) {
        CHECK(triangle.star(v).size() == 2);
        CHECK(triangle.star(v, StarFilter::compact).size() == 2);
        CHECK(triangle.star(v, StarFilter::legs).empty());
    }
    CHECK(is_regular(triangle, 2));
    CHECK_THROWS_AS(triangle.star("nope"), DomainError);

    // the tangent leg bundle total graph: 2 compact + 2 legs at each vertex
    Graph total = corpus_cp2_tangent().total.graph;
    for (const auto& v : total.vertices()) {
        CHECK(total.star(v).size() == 4);
        CHECK(total.star(v, StarFilter::compact).size() == 2);
        CHECK(total.star(v, StarFilter::legs).size() == 2);
    }
    CHECK(is_regular(total, 4));

    // star partition and flag count over every corpus graph
    for (const Graph& g : {triangle, total, corpus_square().graph}) {
        size_t flag_total = 0;
        for (const auto& v : g.vertices()) {
            auto all = g.star(v);
            auto compact = g.star(v, StarFilter::compact);
            auto legs = g.star(v, StarFilter::legs);
            CHECK(all.size() == compact.size() + legs.size());
            flag_total += all.size();
        }
        CHECK(flag_total == g.leg_count() + 2 * g.compact_edge_count());
    }

    // triangle plus an extra leg at one vertex is not regular
    Graph lopsided = Graph::make({"p", "q", "r"},
                                 {Edge{"e1", {"p", "r"}}, Edge{"e2", {"p", "q"}},
                                  Edge{"e3", {"q", "r"}}, Edge{"x", {"p"}}});
    CHECK_FALSE(is_regular(lopsided, 2));
    CHECK_FALSE(is_regular(lopsided, 3));
}

TEST_CASE("morphism validation") {
    Graph triangle = corpus_cp2_base().graph;
    GraphMorphism id = GraphMorphism::identity(triangle);
    auto rep = validate_morphism(triangle, triangle, id);
    CHECK(rep.ok());
    CHECK(rep.image.vertices.size() == 3);
    CHECK(rep.image.edges.size() == 3);
    CHECK(rep.image.flags.size() == 6);

    // mismatched endpoint flags: swap the image endpoints of one edge
    Graph two = Graph::make({"a", "b", "c"}, {Edge{"ab", {"a", "b"}}, Edge{"bc", {"b", "c"}}});
    GraphMorphism bad;
    bad.vertex_map = {{"a", "a"}, {"b", "b"}, {"c", "c"}};
    bad.edge_map.emplace("ab", MorphismTarget::to_edge("bc")); // a does not sit on bc
    bad.edge_map.emplace("bc", MorphismTarget::to_edge("bc"));
    CHECK_FALSE(validate_morphism(two, two, bad).ok());

    // collapse requires both endpoints on the collapse vertex
    GraphMorphism collapse;
    collapse.vertex_map = {{"a", "a"}, {"b", "a"}, {"c", "c"}};
    collapse.edge_map.emplace("ab", MorphismTarget::to_vertex("a"));
    collapse.edge_map.emplace("bc", MorphismTarget::to_edge("bc"));
    auto crep = validate_morphism(two, two, collapse);
    // b maps to a, so bc's flags cannot match
    CHECK_FALSE(crep.ok());
}

TEST_CASE("bundle projection and section morphisms") {
    for (const LegBundle& xi :
         {corpus_cp2_tangent(), corpus_edge_rank3(), corpus_triangle_rank2_twisted()}) {
        GraphMorphism pi = xi.projection();
        GraphMorphism sigma = xi.section();
        CHECK(validate_morphism(xi.total.graph, xi.base.graph, pi).ok());
        CHECK(validate_morphism(xi.base.graph, xi.total.graph, sigma).ok());
        GraphMorphism round = compose(xi.base.graph, sigma, pi);
        CHECK(morphism_equal(round, GraphMorphism::identity(xi.base.graph)));
    }
}
