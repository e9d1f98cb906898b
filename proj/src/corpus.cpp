#include "gkm/corpus.hpp"
#include "gkm/error.hpp"

namespace gkm {

namespace {

LinearForm lf(long long a, long long b) {
    return LinearForm::make({BigInt(a), BigInt(b)});
}

} // namespace

std::vector<std::string> corpus_names() {
    return {"cp2-base", "cp2-tangent", "edge-rank3", "triangle-rank2-twisted", "square", "random"};
}

LabeledGraph corpus_cp2_base() {
    Graph g = Graph::make({"p", "q", "r"},
                          {Edge{"e1", {"p", "r"}}, Edge{"e2", {"p", "q"}}, Edge{"e3", {"q", "r"}}});
    LabelFunction labels(2);
    labels.set({"p", "e1"}, lf(1, 0));
    labels.set({"p", "e2"}, lf(0, 1));
    labels.set({"q", "e2"}, lf(0, -1));
    labels.set({"q", "e3"}, lf(1, -1));
    labels.set({"r", "e1"}, lf(-1, 0));
    labels.set({"r", "e3"}, lf(-1, 1));
    return LabeledGraph{g, two_valent_connection(g), std::move(labels), 2};
}

LegBundle corpus_cp2_tangent() {
    LabeledGraph base = corpus_cp2_base();
    std::map<std::string, std::vector<LinearForm>> fibers{
        {"p", {lf(1, 0), lf(0, 1)}},
        {"q", {lf(0, -1), lf(1, -1)}},
        {"r", {lf(-1, 0), lf(-1, 1)}},
    };
    Transport transport{
        {{"p", "e1"}, {0, 1}}, {{"r", "e1"}, {0, 1}},
        {{"p", "e2"}, {1, 0}}, {{"q", "e2"}, {1, 0}},
        {{"q", "e3"}, {0, 1}}, {{"r", "e3"}, {0, 1}},
    };
    return build_leg_bundle(base, fibers, transport);
}

LegBundle corpus_edge_rank3() {
    Graph g = Graph::make({"p", "q"}, {Edge{"f", {"p", "q"}}});
    LabelFunction labels(2);
    labels.set({"p", "f"}, lf(1, 0));
    labels.set({"q", "f"}, lf(-1, 0));
    Connection conn;
    conn.set({"p", "f"}, {{"f", "f"}});
    conn.set({"q", "f"}, {{"f", "f"}});
    LabeledGraph base{g, conn, std::move(labels), 2};

    std::vector<LinearForm> fiber{lf(0, 1), lf(1, 1), lf(2, 1)};
    std::map<std::string, std::vector<LinearForm>> fibers{{"p", fiber}, {"q", fiber}};
    Transport transport{{{"p", "f"}, {0, 1, 2}}, {{"q", "f"}, {0, 1, 2}}};
    return build_leg_bundle(base, fibers, transport);
}

LegBundle corpus_triangle_rank2_twisted() {
    LabeledGraph base = corpus_cp2_base();
    std::vector<LinearForm> fiber{lf(1, 0), lf(1, 1)};
    std::map<std::string, std::vector<LinearForm>> fibers{{"p", fiber}, {"q", fiber}, {"r", fiber}};
    // the fiber swap along e2 makes the projectivization twisted
    Transport transport{
        {{"p", "e1"}, {0, 1}}, {{"r", "e1"}, {0, 1}},
        {{"p", "e2"}, {1, 0}}, {{"q", "e2"}, {1, 0}},
        {{"q", "e3"}, {0, 1}}, {{"r", "e3"}, {0, 1}},
    };
    return build_leg_bundle(base, fibers, transport);
}

LabeledGraph corpus_square() {
    Graph g = Graph::make({"a", "b", "c", "d"}, {Edge{"ab", {"a", "b"}}, Edge{"bc", {"b", "c"}},
                                                 Edge{"cd", {"c", "d"}}, Edge{"da", {"d", "a"}}});
    LabelFunction labels(2);
    labels.set({"a", "ab"}, lf(1, 0));
    labels.set({"b", "ab"}, lf(-1, 0));
    labels.set({"b", "bc"}, lf(0, 1));
    labels.set({"c", "bc"}, lf(0, -1));
    labels.set({"c", "cd"}, lf(-1, 0));
    labels.set({"d", "cd"}, lf(1, 0));
    labels.set({"d", "da"}, lf(0, -1));
    labels.set({"a", "da"}, lf(0, 1));
    return LabeledGraph{g, two_valent_connection(g), std::move(labels), 2};
}

Json corpus_document(const std::string& name, uint64_t seed, uint32_t rank, const std::string& base) {
    if (name == "cp2-base") return labeled_graph_to_json(corpus_cp2_base());
    if (name == "cp2-tangent") return leg_bundle_to_json(corpus_cp2_tangent());
    if (name == "edge-rank3") return leg_bundle_to_json(corpus_edge_rank3());
    if (name == "triangle-rank2-twisted") return leg_bundle_to_json(corpus_triangle_rank2_twisted());
    if (name == "square") return labeled_graph_to_json(corpus_square());
    if (name == "random") {
        LabeledGraph b;
        if (base == "cp2-base") {
            b = corpus_cp2_base();
        } else if (base == "square") {
            b = corpus_square();
        } else {
            throw DomainError(errc::unknown_corpus, "random bundles accept --base cp2-base or square");
        }
        return leg_bundle_to_json(random_leg_bundle(b, rank, seed));
    }
    throw DomainError(errc::unknown_corpus, "no builtin document named " + name);
}

Json resolve_document(const std::string& path_or_builtin) {
    constexpr const char* prefix = "builtin:";
    if (path_or_builtin.rfind(prefix, 0) == 0) {
        return corpus_document(path_or_builtin.substr(8));
    }
    return load_document(path_or_builtin);
}

} // namespace gkm
